/**
 * Figure builders, one per panel selector.
 *
 * fig2a  landscape scan: mean-field and exact ground energy over r, with a
 *        participation-ratio inset.
 * fig2b  fidelity from a Trotterized run against the exact propagator.
 * fig2cd one panel per dynamics CSV, |OTOC| for every measured qubit.
 * fig3   entanglement entropy, one panel per block size L = 2, 3, 4, one
 *        curve per geometry.
 */

import {
  columnsMatching,
  CsvError,
  geometryLabel,
  numericColumn,
  requireColumns,
  Table,
} from "./csv.js";
import { Curve, PlacedPanel, renderSvg } from "./svg.js";

export const PANEL_SELECTORS = ["fig2a", "fig2b", "fig2cd", "fig3"] as const;
export type PanelSelector = (typeof PANEL_SELECTORS)[number];

export class FigureError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "FigureError";
  }
}

function expectInputs(selector: string, tables: Table[], lo: number, hi: number): void {
  if (tables.length < lo || tables.length > hi) {
    const want = lo === hi ? `${lo}` : `${lo} to ${hi}`;
    throw new FigureError(`${selector} takes ${want} input CSV(s), got ${tables.length}`);
  }
}

/** Rows where every listed column is present; unconverged rows drop out. */
function convergedSeries(table: Table, names: string[]): number[][] {
  const columns = names.map((name) => numericColumn(table, name));
  const kept: number[][] = names.map(() => []);
  for (let row = 0; row < table.rows.length; row++) {
    if (columns.every((column) => column[row] !== null)) {
      columns.forEach((column, k) => kept[k].push(column[row] as number));
    }
  }
  if (kept[0].length < 2) {
    throw new CsvError(table.path, "fewer than 2 usable data rows");
  }
  return kept;
}

function buildFig2a(tables: Table[]): string {
  expectInputs("fig2a", tables, 1, 1);
  const [r, eMean, eGround, pr] = convergedSeries(tables[0], [
    "r", "E_mean", "E_ground", "participation_ratio",
  ]);
  const main = {
    xLabel: "r (bohr)",
    yLabel: "E (hartree)",
    curves: [
      { label: "mean field", x: r, y: eMean },
      { label: "exact ground", x: r, y: eGround, dash: "6 3" },
    ],
  };
  const inset = {
    xLabel: "r (bohr)",
    yLabel: "PR",
    curves: [{ label: "PR", x: r, y: pr }],
    kind: "inset" as const,
  };
  return renderSvg(640, 430, [
    { panel: main, frame: { x: 0, y: 0, width: 640, height: 430 } },
    { panel: inset, frame: { x: 380, y: 220, width: 220, height: 150 } },
  ]);
}

function buildFig2b(tables: Table[]): string {
  expectInputs("fig2b", tables, 1, 1);
  const [t, trotter, exact] = convergedSeries(tables[0], ["T", "fidelity", "fidelity_exact"]);
  const panel = {
    xLabel: "T (ℏ/hartree)",
    yLabel: "F",
    curves: [
      { label: "exact", x: t, y: exact },
      { label: "Trotter", x: t, y: trotter, dash: "5 3" },
    ],
  };
  return renderSvg(560, 380, [{ panel, frame: { x: 0, y: 0, width: 560, height: 380 } }]);
}

function buildFig2cd(tables: Table[]): string {
  expectInputs("fig2cd", tables, 1, 4);
  const width = 460;
  const placed: PlacedPanel[] = tables.map((table, index) => {
    const names = columnsMatching(table, /^otoc_q(\d+)$/);
    if (names.length === 0) {
      throw new CsvError(table.path, 'missing required column "otoc_q0"', "otoc_q0");
    }
    const series = convergedSeries(table, ["T", ...names]);
    const t = series[0];
    const curves: Curve[] = names.map((name, k) => ({
      label: `qubit ${name.slice("otoc_q".length)}`,
      x: t,
      y: series[k + 1].map(Math.abs),
    }));
    const panel = {
      title: geometryLabel(table.path, index),
      xLabel: "T (ℏ/hartree)",
      yLabel: "|F|",
      curves,
    };
    return { panel, frame: { x: index * width, y: 0, width, height: 400 } };
  });
  return renderSvg(width * tables.length, 400, placed);
}

function buildFig3(tables: Table[]): string {
  expectInputs("fig3", tables, 1, 6);
  const sizes = [2, 3, 4];
  const height = 280;
  const perTable = tables.map((table, index) => {
    requireColumns(table, sizes.map((size) => `S_${size}`));
    const series = convergedSeries(table, ["T", ...sizes.map((size) => `S_${size}`)]);
    return { label: geometryLabel(table.path, index), series };
  });
  const placed: PlacedPanel[] = sizes.map((size, row) => {
    const panel = {
      title: `L = ${size}`,
      xLabel: "T (ℏ/hartree)",
      yLabel: "S (nats)",
      curves: perTable.map((entry) => ({
        label: entry.label,
        x: entry.series[0],
        y: entry.series[row + 1],
      })),
    };
    return { panel, frame: { x: 0, y: row * height, width: 560, height } };
  });
  return renderSvg(560, height * sizes.length, placed);
}

export function buildFigure(selector: PanelSelector, tables: Table[]): string {
  switch (selector) {
    case "fig2a":
      return buildFig2a(tables);
    case "fig2b":
      return buildFig2b(tables);
    case "fig2cd":
      return buildFig2cd(tables);
    case "fig3":
      return buildFig3(tables);
  }
}
