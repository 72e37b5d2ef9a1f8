import { writeFileSync } from "node:fs";

import { readTable } from "./csv.js";
import { buildFigure, FigureError, PANEL_SELECTORS, PanelSelector } from "./panels.js";

export interface FigureSpec {
  panel: PanelSelector;
  inputs: string[];
  out: string;
}

/** Read the input CSVs, build the selected figure and write the SVG. */
export function render(spec: FigureSpec): void {
  if (!(PANEL_SELECTORS as readonly string[]).includes(spec.panel)) {
    throw new FigureError(
      `unknown panel selector "${spec.panel}" (expected ${PANEL_SELECTORS.join(", ")})`,
    );
  }
  if (spec.inputs.length === 0) {
    throw new FigureError("at least one input CSV is required");
  }
  if (!spec.out.endsWith(".svg")) {
    throw new FigureError(`unsupported output format for "${spec.out}": only .svg is supported`);
  }
  const tables = spec.inputs.map((path) => readTable(path));
  const svg = buildFigure(spec.panel, tables);
  writeFileSync(spec.out, svg);
}
