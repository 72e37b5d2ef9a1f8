/**
 * Strict reader for the simulation CLI's CSV outputs.
 *
 * The dialect is deliberately narrow: comma separated, one header row,
 * LF terminated, no quoting. Blank cells mark rows the solver left
 * unconverged and parse to null; anything else must be numeric. All
 * schema problems surface as CsvError naming the offending column.
 */

import { readFileSync } from "node:fs";
import { basename } from "node:path";
import Papa from "papaparse";

export class CsvError extends Error {
  readonly path: string;
  readonly column?: string;

  constructor(path: string, message: string, column?: string) {
    super(`${basename(path)}: ${message}`);
    this.name = "CsvError";
    this.path = path;
    this.column = column;
  }
}

export interface Table {
  path: string;
  columns: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string, path: string): Table {
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    const where = first.row === undefined ? "" : ` (data row ${first.row + 1})`;
    throw new CsvError(path, `${first.message}${where}`);
  }
  const columns = parsed.meta.fields ?? [];
  if (columns.length === 0) {
    throw new CsvError(path, "no header row");
  }
  if (parsed.data.length === 0) {
    throw new CsvError(path, "no data rows");
  }
  return { path, columns, rows: parsed.data };
}

export function readTable(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (error) {
    throw new CsvError(path, `cannot read file: ${(error as Error).message}`);
  }
  return parseCsv(text, path);
}

export function requireColumns(table: Table, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) {
      throw new CsvError(table.path, `missing required column "${name}"`, name);
    }
  }
}

/** Column as numbers; blank cells (unconverged rows) become null. */
export function numericColumn(table: Table, name: string): (number | null)[] {
  requireColumns(table, [name]);
  return table.rows.map((row, index) => {
    const raw = (row[name] ?? "").trim();
    if (raw === "") {
      return null;
    }
    const value = Number(raw);
    if (!Number.isFinite(value)) {
      throw new CsvError(
        table.path,
        `column "${name}" has non-numeric value "${raw}" in data row ${index + 1}`,
        name,
      );
    }
    return value;
  });
}

/** Names matching a pattern, in first-capture-group numeric order. */
export function columnsMatching(table: Table, pattern: RegExp): string[] {
  const hits = table.columns
    .map((name) => ({ name, match: name.match(pattern) }))
    .filter((entry) => entry.match !== null);
  hits.sort((a, b) => Number(a.match![1]) - Number(b.match![1]));
  return hits.map((entry) => entry.name);
}

/** Geometry label recovered from the CLI's dynamics_r<tag>.csv naming. */
export function geometryLabel(path: string, fallbackIndex: number): string {
  const match = basename(path).match(/_r(-?\d+(?:\.\d+)?)/);
  return match ? `r = ${match[1]}` : `input ${fallbackIndex + 1}`;
}
