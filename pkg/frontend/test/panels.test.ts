import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { CsvError, parseCsv, readTable, Table } from "../src/csv.js";
import { buildFigure, FigureError } from "../src/panels.js";
import { niceTicks } from "../src/svg.js";

const FIXTURES = fileURLToPath(new URL("./fixtures", import.meta.url));

function fixture(name: string): Table {
  return readTable(join(FIXTURES, name));
}

const count = (svg: string, needle: string): number => svg.split(needle).length - 1;

describe("fig2a", () => {
  it("draws landscape plus participation-ratio inset", () => {
    const svg = buildFigure("fig2a", [fixture("landscape.csv")]);
    expect(count(svg, '<g class="panel"')).toBe(1);
    expect(count(svg, '<g class="inset"')).toBe(1);
    expect(svg).toContain("r (bohr)");
    expect(svg).toContain("E (hartree)");
    expect(svg).toContain("mean field");
    expect(svg).toContain("exact ground");
  });

  it("wants exactly one input", () => {
    const table = fixture("landscape.csv");
    expect(() => buildFigure("fig2a", [table, table])).toThrow(FigureError);
  });

  it("skips unconverged rows but needs two usable ones", () => {
    const text = "r,E_mean,E_ground,E_hf,participation_ratio,scf_iterations,scf_converged\n"
      + "0,,,,,7,false\n0.1,-1.2,-1.3,-1.2,3,9,true\n";
    expect(() => buildFigure("fig2a", [parseCsv(text, "landscape.csv")]))
      .toThrow(/fewer than 2 usable data rows/);
  });
});

describe("fig2b", () => {
  it("pairs the Trotter curve with the exact one", () => {
    const svg = buildFigure("fig2b", [fixture("dynamics_trotter_r0.csv")]);
    expect(count(svg, '<g class="panel"')).toBe(1);
    expect(count(svg, 'class="legend-entry"')).toBe(2);
    expect(svg).toContain(">exact<");
    expect(svg).toContain(">Trotter<");
  });

  it("rejects an exact-only sweep by naming the column", () => {
    try {
      buildFigure("fig2b", [fixture("dynamics_r0.csv")]);
      expect.unreachable();
    } catch (error) {
      expect(error).toBeInstanceOf(CsvError);
      expect((error as CsvError).column).toBe("fidelity_exact");
    }
  });
});

describe("fig2cd", () => {
  it("draws one panel per geometry and one curve per measured qubit", () => {
    const svg = buildFigure("fig2cd", [
      fixture("dynamics_r0.csv"),
      fixture("dynamics_r3.1.csv"),
    ]);
    expect(count(svg, '<g class="panel"')).toBe(2);
    expect(count(svg, 'class="legend-entry"')).toBe(16);
    expect(svg).toContain(">qubit 0<");
    expect(svg).toContain(">qubit 7<");
    expect(svg).toContain(">r = 0<");
    expect(svg).toContain(">r = 3.1<");
    expect(svg).toContain("|F|");
  });

  it("plots magnitudes, so every plotted value is nonnegative", () => {
    // the r = 0 sweep has strongly negative OTOC values; |F| keeps the
    // y domain lower edge at or just below zero (6% padding only)
    const svg = buildFigure("fig2cd", [fixture("dynamics_r0.csv")]);
    const yTicks = [...svg.matchAll(/text-anchor="end">(-?[\d.]+)</g)]
      .map((match) => Number(match[1]));
    expect(Math.min(...yTicks)).toBeGreaterThanOrEqual(-0.1);
  });
});

describe("fig3", () => {
  it("draws the three block sizes with one curve per geometry", () => {
    const svg = buildFigure("fig3", [
      fixture("dynamics_r0.csv"),
      fixture("dynamics_r-3.1.csv"),
      fixture("dynamics_r3.1.csv"),
    ]);
    expect(count(svg, '<g class="panel"')).toBe(3);
    expect(count(svg, 'class="legend-entry"')).toBe(9);
    expect(svg).toContain(">L = 2<");
    expect(svg).toContain(">L = 4<");
    expect(svg).toContain("S (nats)");
    expect(svg).toContain(">r = -3.1<");
  });

  it("names a dropped entropy column", () => {
    const base = fixture("dynamics_r0.csv");
    const mangled = {
      ...base,
      columns: base.columns.filter((name) => name !== "S_3"),
    };
    try {
      buildFigure("fig3", [mangled]);
      expect.unreachable();
    } catch (error) {
      expect(error).toBeInstanceOf(CsvError);
      expect((error as CsvError).column).toBe("S_3");
    }
  });
});

describe("tick placement", () => {
  it("uses 1-2-5 steps inside the domain", () => {
    expect(niceTicks(0, 10, 5)).toEqual([0, 2, 4, 6, 8, 10]);
    expect(niceTicks(-3.3, 3.3, 6)).toEqual([-3, -2, -1, 0, 1, 2, 3]);
    expect(niceTicks(0.98, 1.02, 5)).toEqual([0.98, 0.99, 1, 1.01, 1.02]);
  });

  it("degenerate domain collapses to a single tick", () => {
    expect(niceTicks(1, 1, 5)).toEqual([1]);
  });
});
