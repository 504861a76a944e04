/**
 * Minimal deterministic SVG chart builder: linear or log10 axes,
 * polylines, step lines, dots and crosses, a legend, and one optional
 * vertical reference line.  No DOM, no randomness; identical input
 * data yields byte-identical SVG.
 */

export type SeriesMode = "line" | "step" | "dots" | "crosses" | "line+dots";

export interface Series {
  label: string;
  points: [number, number][];
  color: string;
  mode: SeriesMode;
  opacity?: number;
  inLegend?: boolean;
}

export interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  width?: number;
  height?: number;
  logY?: boolean;
  vline?: { x: number; label: string };
  yMin?: number;
  yMax?: number;
}

const MARGIN = { top: 42, right: 20, bottom: 48, left: 64 };

function fmt(value: number): string {
  return Number(value.toFixed(2)).toString();
}

function tickLabel(value: number): string {
  if (Math.abs(value) >= 10000) {
    return value.toExponential(0).replace("+", "");
  }
  return Number(value.toPrecision(4)).toString();
}

function linearTicks(lo: number, hi: number, count = 5): number[] {
  if (lo === hi) {
    return [lo];
  }
  const span = hi - lo;
  const rawStep = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => span / s <= count + 1) ?? mag * 10;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-9; t += step) {
    ticks.push(Number(t.toPrecision(10)));
  }
  return ticks;
}

function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let p = Math.floor(Math.log10(lo)); p <= Math.ceil(Math.log10(hi)); p++) {
    const t = Math.pow(10, p);
    if (t >= lo * 0.999 && t <= hi * 1.001) {
      ticks.push(t);
    }
  }
  return ticks.length >= 2 ? ticks : [lo, hi];
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderChart(spec: ChartSpec): string {
  const width = spec.width ?? 560;
  const height = spec.height ?? 400;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = spec.series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = spec.series.flatMap((s) => s.points.map((p) => p[1]));
  if (xs.length === 0) {
    throw new Error("chart has no data points");
  }
  let xLo = Math.min(...xs);
  let xHi = Math.max(...xs);
  if (spec.vline) {
    xLo = Math.min(xLo, spec.vline.x);
    xHi = Math.max(xHi, spec.vline.x);
  }
  if (xLo === xHi) {
    xLo -= 1;
    xHi += 1;
  }
  let yLo = spec.yMin ?? Math.min(...ys);
  let yHi = spec.yMax ?? Math.max(...ys);
  if (spec.logY) {
    const positive = ys.filter((y) => y > 0);
    yLo = Math.min(...positive);
    yHi = Math.max(...positive);
  }
  if (yLo === yHi) {
    yHi = yLo + 1;
  }

  const sx = (x: number) => MARGIN.left + ((x - xLo) / (xHi - xLo)) * plotW;
  const sy = (y: number) => {
    if (spec.logY) {
      const t = (Math.log10(y) - Math.log10(yLo)) / (Math.log10(yHi) - Math.log10(yLo));
      return MARGIN.top + plotH - t * plotH;
    }
    return MARGIN.top + plotH - ((y - yLo) / (yHi - yLo)) * plotH;
  };

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="11">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${width / 2}" y="20" text-anchor="middle" font-size="14">${escapeXml(spec.title)}</text>`,
  );

  const xTicks = linearTicks(xLo, xHi);
  const yTicks = spec.logY ? logTicks(yLo, yHi) : linearTicks(yLo, yHi);
  for (const t of yTicks) {
    const y = fmt(sy(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${width - MARGIN.right}" y2="${y}" stroke="#ddd"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 6}" y="${fmt(sy(t) + 3)}" text-anchor="end">${tickLabel(t)}</text>`,
    );
  }
  for (const t of xTicks) {
    const x = fmt(sx(t));
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top + plotH}" x2="${x}" y2="${MARGIN.top + plotH + 4}" stroke="#333"/>`,
    );
    parts.push(
      `<text x="${x}" y="${MARGIN.top + plotH + 16}" text-anchor="middle">${tickLabel(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#333"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" text-anchor="middle">${escapeXml(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${escapeXml(spec.yLabel)}</text>`,
  );

  if (spec.vline) {
    const x = fmt(sx(spec.vline.x));
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${MARGIN.top + plotH}" ` +
        `stroke="#888" stroke-dasharray="4 3"/>`,
    );
    parts.push(
      `<text x="${x}" y="${MARGIN.top - 4}" text-anchor="middle" fill="#555">${escapeXml(spec.vline.label)}</text>`,
    );
  }

  for (const series of spec.series) {
    const opacity = series.opacity ?? 1;
    const pts = series.points;
    if (series.mode === "line" || series.mode === "step" || series.mode === "line+dots") {
      const coords: string[] = [];
      pts.forEach(([x, y], i) => {
        if (series.mode === "step" && i > 0) {
          coords.push(`${fmt(sx(x))},${fmt(sy(pts[i - 1][1]))}`);
        }
        coords.push(`${fmt(sx(x))},${fmt(sy(y))}`);
      });
      parts.push(
        `<polyline points="${coords.join(" ")}" fill="none" stroke="${series.color}" ` +
          `stroke-width="1.5" opacity="${opacity}"/>`,
      );
    }
    if (series.mode === "dots" || series.mode === "line+dots") {
      for (const [x, y] of pts) {
        parts.push(
          `<circle cx="${fmt(sx(x))}" cy="${fmt(sy(y))}" r="3" fill="${series.color}" opacity="${opacity}"/>`,
        );
      }
    }
    if (series.mode === "crosses") {
      for (const [x, y] of pts) {
        const cx = sx(x);
        const cy = sy(y);
        parts.push(
          `<path d="M ${fmt(cx - 3)} ${fmt(cy - 3)} L ${fmt(cx + 3)} ${fmt(cy + 3)} ` +
            `M ${fmt(cx - 3)} ${fmt(cy + 3)} L ${fmt(cx + 3)} ${fmt(cy - 3)}" ` +
            `stroke="${series.color}" stroke-width="1.5" opacity="${opacity}"/>`,
        );
      }
    }
  }

  const legendEntries = spec.series.filter((s) => s.inLegend !== false);
  legendEntries.forEach((s, i) => {
    const y = MARGIN.top + 8 + i * 14;
    const x = MARGIN.left + 10;
    parts.push(`<rect x="${x}" y="${y - 7}" width="10" height="10" fill="${s.color}"/>`);
    parts.push(`<text x="${x + 14}" y="${y + 2}">${escapeXml(s.label)}</text>`);
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
