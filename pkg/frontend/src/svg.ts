/**
 * Minimal deterministic SVG line plots: linear axes, 1-2-5 ticks, fixed
 * palette, legend built from curve labels. No timestamps, no randomness,
 * so a rerun on the same data is byte-identical.
 */

export interface Curve {
  label: string;
  x: number[];
  y: number[];
  dash?: string;
}

export interface Panel {
  title?: string;
  xLabel: string;
  yLabel: string;
  curves: Curve[];
  kind?: "panel" | "inset";
}

export interface Frame {
  x: number;
  y: number;
  width: number;
  height: number;
}

export const PALETTE = [
  "#264653", "#c1121f", "#2a9d8f", "#7b2cbf",
  "#e76f51", "#457b9d", "#bc6c25", "#6c757d",
];

/** Compact float text: enough digits to round-trip plot geometry. */
function fmt(value: number): string {
  return String(Number(value.toPrecision(7)));
}

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function niceTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const rawStep = (hi - lo) / Math.max(1, count);
  const base = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const error = rawStep / base;
  // round to 1/2/5/10 times the decade, split at geometric midpoints
  const unit = error >= Math.sqrt(50) ? 10 : error >= Math.sqrt(10) ? 5 : error >= Math.SQRT2 ? 2 : 1;
  const step = unit * base;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    // snap away accumulated float error so labels stay clean
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

interface Extent {
  lo: number;
  hi: number;
}

function extent(values: number[], pad: number): Extent {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!(hi > lo)) {
    hi = lo + 1;
    lo = lo - 1;
  }
  const span = hi - lo;
  return { lo: lo - pad * span, hi: hi + pad * span };
}

function scale(domain: Extent, rangeLo: number, rangeHi: number): (v: number) => number {
  const k = (rangeHi - rangeLo) / (domain.hi - domain.lo);
  return (v) => rangeLo + (v - domain.lo) * k;
}

export function renderPanel(panel: Panel, frame: Frame): string {
  const inset = panel.kind === "inset";
  const margin = inset
    ? { top: 16, right: 6, bottom: 26, left: 40 }
    : { top: panel.title ? 26 : 14, right: 12, bottom: 42, left: 62 };
  const plotW = frame.width - margin.left - margin.right;
  const plotH = frame.height - margin.top - margin.bottom;
  const fontSize = inset ? 8 : 11;

  const xs = panel.curves.flatMap((c) => c.x);
  const ys = panel.curves.flatMap((c) => c.y);
  const xDomain = extent(xs, 0.02);
  const yDomain = extent(ys, 0.06);
  const toX = scale(xDomain, margin.left, margin.left + plotW);
  const toY = scale(yDomain, margin.top + plotH, margin.top);

  const parts: string[] = [];
  parts.push(`<g class="${inset ? "inset" : "panel"}" transform="translate(${fmt(frame.x)},${fmt(frame.y)})">`);
  parts.push(
    `<rect x="${fmt(margin.left)}" y="${fmt(margin.top)}" width="${fmt(plotW)}" height="${fmt(plotH)}"`
    + ` fill="${inset ? "#ffffff" : "none"}" stroke="#444444" stroke-width="0.8"/>`,
  );

  for (const tick of niceTicks(xDomain.lo, xDomain.hi, inset ? 3 : 6)) {
    const px = toX(tick);
    parts.push(`<line x1="${fmt(px)}" y1="${fmt(margin.top + plotH)}" x2="${fmt(px)}" y2="${fmt(margin.top + plotH + 4)}" stroke="#444444" stroke-width="0.8"/>`);
    parts.push(`<text x="${fmt(px)}" y="${fmt(margin.top + plotH + fontSize + 6)}" font-size="${fontSize}" text-anchor="middle">${fmt(tick)}</text>`);
  }
  for (const tick of niceTicks(yDomain.lo, yDomain.hi, inset ? 3 : 5)) {
    const py = toY(tick);
    parts.push(`<line x1="${fmt(margin.left - 4)}" y1="${fmt(py)}" x2="${fmt(margin.left)}" y2="${fmt(py)}" stroke="#444444" stroke-width="0.8"/>`);
    parts.push(`<text x="${fmt(margin.left - 6)}" y="${fmt(py + fontSize * 0.35)}" font-size="${fontSize}" text-anchor="end">${fmt(tick)}</text>`);
  }

  parts.push(`<text x="${fmt(margin.left + plotW / 2)}" y="${fmt(frame.height - 8)}" font-size="${fontSize + 1}" text-anchor="middle">${escapeText(panel.xLabel)}</text>`);
  parts.push(
    `<text x="${fmt(12)}" y="${fmt(margin.top + plotH / 2)}" font-size="${fontSize + 1}" text-anchor="middle"`
    + ` transform="rotate(-90 ${fmt(12)} ${fmt(margin.top + plotH / 2)})">${escapeText(panel.yLabel)}</text>`,
  );
  if (panel.title) {
    parts.push(`<text x="${fmt(margin.left + plotW / 2)}" y="${fmt(margin.top - 8)}" font-size="${fontSize + 1}" font-weight="bold" text-anchor="middle">${escapeText(panel.title)}</text>`);
  }

  panel.curves.forEach((curve, index) => {
    const color = PALETTE[index % PALETTE.length];
    const points = curve.x.map((vx, i) => `${fmt(toX(vx))},${fmt(toY(curve.y[i]))}`).join(" ");
    const dash = curve.dash ? ` stroke-dasharray="${curve.dash}"` : "";
    parts.push(`<polyline class="curve" fill="none" stroke="${color}" stroke-width="1.4"${dash} points="${points}"/>`);
  });

  // legend, one entry per curve, stacked in the upper right of the plot box
  const lineH = fontSize + 4;
  panel.curves.forEach((curve, index) => {
    const color = PALETTE[index % PALETTE.length];
    const ly = margin.top + 8 + index * lineH;
    const lx = margin.left + plotW - 10;
    const dash = curve.dash ? ` stroke-dasharray="${curve.dash}"` : "";
    parts.push(
      `<g class="legend-entry">`
      + `<line x1="${fmt(lx - 22)}" y1="${fmt(ly)}" x2="${fmt(lx - 6)}" y2="${fmt(ly)}" stroke="${color}" stroke-width="1.4"${dash}/>`
      + `<text x="${fmt(lx - 26)}" y="${fmt(ly + fontSize * 0.35)}" font-size="${fontSize}" text-anchor="end">${escapeText(curve.label)}</text>`
      + `</g>`,
    );
  });

  parts.push("</g>");
  return parts.join("\n");
}

export interface PlacedPanel {
  panel: Panel;
  frame: Frame;
}

export function renderSvg(width: number, height: number, placed: PlacedPanel[]): string {
  const body = placed.map((entry) => renderPanel(entry.panel, entry.frame)).join("\n");
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="#ffffff"/>`,
    body,
    "</svg>",
    "",
  ].join("\n");
}
