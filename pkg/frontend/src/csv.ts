/**
 * Strict reader for the hh CSV outputs.
 *
 * Every file starts with a versioned comment line, `# hh-csv v1 <kind>`,
 * followed by a column header row.  Fields never contain commas or
 * quotes (multi-valued cells use `;`), so a plain split is exact.
 * Files whose version or kind does not match are refused.
 */

export const CSV_VERSION = "hh-csv v1";

export interface CsvTable {
  kind: string;
  columns: string[];
  rows: Record<string, string>[];
}

export function parseHhCsv(text: string, expectedKind: string): CsvTable {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop();
  }
  if (lines.length === 0) {
    throw new Error(`empty input, expected a '# ${CSV_VERSION} ${expectedKind}' header`);
  }
  const headerMatch = /^#\s*(hh-csv v\d+)\s+(\S+)\s*$/.exec(lines[0]);
  if (!headerMatch) {
    throw new Error(`missing version line, expected '# ${CSV_VERSION} ${expectedKind}'`);
  }
  const [, version, kind] = headerMatch;
  if (version !== CSV_VERSION) {
    throw new Error(`unsupported CSV version '${version}', expected '${CSV_VERSION}'`);
  }
  if (kind !== expectedKind) {
    throw new Error(`CSV kind is '${kind}', expected '${expectedKind}'`);
  }
  if (lines.length < 2) {
    throw new Error("missing column header row");
  }
  const columns = lines[1].split(",");
  const rows: Record<string, string>[] = [];
  for (let i = 2; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== columns.length) {
      throw new Error(
        `row ${i + 1} has ${fields.length} fields, header has ${columns.length}`,
      );
    }
    const row: Record<string, string> = {};
    columns.forEach((col, j) => (row[col] = fields[j]));
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new Error("CSV has no data rows");
  }
  return { kind, columns, rows };
}

export function num(row: Record<string, string>, column: string): number {
  const raw = row[column];
  if (raw === undefined) {
    throw new Error(`missing column '${column}'`);
  }
  const value = Number(raw);
  if (raw === "" || Number.isNaN(value)) {
    throw new Error(`column '${column}' has non-numeric value '${raw}'`);
  }
  return value;
}
