#!/usr/bin/env node
/**
 * Render one figure panel from an hh CSV file.
 *
 * Usage:
 *   plot <A|B|C|D> <in.csv> <out.svg>
 */
import { PanelId, renderPanel } from "./panels.js";

function run(argv: string[]): number {
  if (argv.length !== 3) {
    console.error("usage: plot <A|B|C|D> <in.csv> <out.svg>");
    return 2;
  }
  const [panel, inputCsv, outputImage] = argv;
  if (!["A", "B", "C", "D"].includes(panel)) {
    console.error(`unknown panel '${panel}', expected A, B, C or D`);
    return 2;
  }
  try {
    renderPanel({ panel: panel as PanelId, inputCsv, outputImage });
  } catch (err) {
    console.error(`plot: error: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
  console.log(`wrote ${outputImage}`);
  return 0;
}

process.exit(run(process.argv.slice(2)));
