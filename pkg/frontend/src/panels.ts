/**
 * The four figure panels, each rendered from one hh CSV file:
 *
 *   A  one-step success probability vs W/W*      (sweep-uniform)
 *   B  pointwise vs classical bound over fan-in  (sweep-bounds)
 *   C  per-hub weight vs hub count per budget    (sweep-split)
 *   D  Glory fraction per visit, one-pass runs   (sweep-passes)
 *
 * This layer only reads and scales values; all numbers come from the
 * CSV producer.  Rendering is pure: same input bytes, same SVG bytes.
 */
import { readFileSync, writeFileSync } from "node:fs";
import { extname } from "node:path";

import { CsvTable, num, parseHhCsv } from "./csv.js";
import { ChartSpec, Series, renderChart } from "./svg.js";

export type PanelId = "A" | "B" | "C" | "D";

export interface PanelSpec {
  panel: PanelId;
  inputCsv: string;
  outputImage: string;
}

const PANEL_KINDS: Record<PanelId, string> = {
  A: "sweep-uniform",
  B: "sweep-bounds",
  C: "sweep-split",
  D: "sweep-passes",
};

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

function groupBy(rows: Record<string, string>[], key: (r: Record<string, string>) => string) {
  const groups = new Map<string, Record<string, string>[]>();
  for (const row of rows) {
    const k = key(row);
    const bucket = groups.get(k);
    if (bucket) {
      bucket.push(row);
    } else {
      groups.set(k, [row]);
    }
  }
  return groups;
}

function panelA(table: CsvTable): ChartSpec {
  const series: Series[] = [];
  let i = 0;
  for (const [label, rows] of groupBy(table.rows, (r) => r.params)) {
    const points = rows
      .map((r) => [num(r, "w_over_wstar"), num(r, "success")] as [number, number])
      .sort((a, b) => a[0] - b[0]);
    series.push({ label, points, color: PALETTE[i++ % PALETTE.length], mode: "step" });
    series.push({
      label,
      points,
      color: series[series.length - 1].color,
      mode: "dots",
      inLegend: false,
    });
  }
  return {
    title: "one-step success vs relative hub weight",
    xLabel: "W / W*",
    yLabel: "success",
    series,
    vline: { x: 1, label: "W = W*" },
    yMin: 0,
    yMax: 1,
  };
}

function panelB(table: CsvTable): ChartSpec {
  const rows = [...table.rows].sort((a, b) => num(a, "fan_in") - num(b, "fan_in"));
  const point = (col: string) => (r: Record<string, string>) =>
    [num(r, "fan_in"), num(r, col)] as [number, number];
  return {
    title: "worst-case bounds vs fan-in",
    xLabel: "fan-in",
    yLabel: "bound",
    logY: true,
    series: [
      { label: "classical product", points: rows.map(point("classical")), color: PALETTE[1], mode: "line+dots" },
      { label: "pointwise deg-max", points: rows.map(point("pointwise")), color: PALETTE[0], mode: "line+dots" },
      { label: "exact maxrest", points: rows.map(point("maxrest")), color: PALETTE[2], mode: "line" },
    ],
  };
}

function panelC(table: CsvTable): ChartSpec {
  const series: Series[] = [];
  let i = 0;
  for (const [budget, rows] of groupBy(table.rows, (r) => r.budget)) {
    const color = PALETTE[i++ % PALETTE.length];
    const sorted = [...rows].sort((a, b) => num(a, "hubs") - num(b, "hubs"));
    const perHub = (r: Record<string, string>) =>
      [num(r, "hubs"), Number(r.per_hub.split(";")[0])] as [number, number];
    series.push({ label: `budget ${budget}`, points: sorted.map(perHub), color, mode: "line" });
    const pass = sorted.filter((r) => r.success === "1").map(perHub);
    const fail = sorted.filter((r) => r.success !== "1").map(perHub);
    if (pass.length > 0) {
      series.push({ label: `budget ${budget} pass`, points: pass, color, mode: "dots", inLegend: false });
    }
    if (fail.length > 0) {
      series.push({ label: `budget ${budget} fail`, points: fail, color, mode: "crosses", inLegend: false });
    }
  }
  return {
    title: "per-hub weight under equal budget splits (x = fail, dot = pass)",
    xLabel: "hub count",
    yLabel: "per-hub weight",
    series,
    yMin: 0,
  };
}

function panelD(table: CsvTable): ChartSpec {
  const series: Series[] = [];
  for (const [, rows] of groupBy(table.rows, (r) => r.trial)) {
    const points = rows
      .map((r) => [num(r, "visit"), num(r, "glory_fraction")] as [number, number])
      .sort((a, b) => a[0] - b[0]);
    series.push({
      label: "",
      points,
      color: PALETTE[0],
      mode: "line",
      opacity: 0.35,
      inLegend: false,
    });
  }
  return {
    title: "Glory fraction along one-pass schedules",
    xLabel: "visit",
    yLabel: "Glory fraction",
    series,
    yMin: 0,
    yMax: 1,
  };
}

const BUILDERS: Record<PanelId, (table: CsvTable) => ChartSpec> = {
  A: panelA,
  B: panelB,
  C: panelC,
  D: panelD,
};

export function renderPanelSvg(panel: PanelId, csvText: string): string {
  const builder = BUILDERS[panel];
  if (!builder) {
    throw new Error(`unknown panel '${panel}', expected one of A, B, C, D`);
  }
  const table = parseHhCsv(csvText, PANEL_KINDS[panel]);
  return renderChart(builder(table));
}

export function renderPanel(spec: PanelSpec): void {
  const ext = extname(spec.outputImage).toLowerCase();
  if (ext !== ".svg") {
    throw new Error(`unsupported image format '${ext}', this tool writes .svg`);
  }
  const csvText = readFileSync(spec.inputCsv, "utf-8");
  const svg = renderPanelSvg(spec.panel, csvText);
  writeFileSync(spec.outputImage, svg, "utf-8");
}
