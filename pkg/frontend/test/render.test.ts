import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { beforeAll, describe, expect, it } from "vitest";

import { render } from "../src/render.js";

const FIXTURES = fileURLToPath(new URL("./fixtures", import.meta.url));
const fx = (name: string) => join(FIXTURES, name);

let work: string;
beforeAll(() => {
  work = mkdtempSync(join(tmpdir(), "hchain-figures-"));
});

const CASES: Array<{ panel: "fig2a" | "fig2b" | "fig2cd" | "fig3"; inputs: string[] }> = [
  { panel: "fig2a", inputs: [fx("landscape.csv")] },
  { panel: "fig2b", inputs: [fx("dynamics_trotter_r0.csv")] },
  { panel: "fig2cd", inputs: [fx("dynamics_r0.csv"), fx("dynamics_r3.1.csv")] },
  {
    panel: "fig3",
    inputs: [fx("dynamics_r0.csv"), fx("dynamics_r-3.1.csv"), fx("dynamics_r3.1.csv")],
  },
];

describe("render", () => {
  it("produces an SVG file for every panel selector", () => {
    for (const spec of CASES) {
      const out = join(work, `${spec.panel}.svg`);
      render({ ...spec, out });
      const svg = readFileSync(out, "utf8");
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
    }
  });

  it("re-renders byte-identically", () => {
    for (const spec of CASES) {
      const first = join(work, `${spec.panel}-a.svg`);
      const second = join(work, `${spec.panel}-b.svg`);
      render({ ...spec, out: first });
      render({ ...spec, out: second });
      expect(readFileSync(second)).toEqual(readFileSync(first));
    }
  });

  it("never mutates its inputs", () => {
    const before = readFileSync(fx("landscape.csv"));
    render({ panel: "fig2a", inputs: [fx("landscape.csv")], out: join(work, "mut.svg") });
    expect(readFileSync(fx("landscape.csv"))).toEqual(before);
  });

  it("ignores extra columns", () => {
    const plain = join(work, "plain.svg");
    render({ panel: "fig2b", inputs: [fx("dynamics_trotter_r0.csv")], out: plain });

    const text = readFileSync(fx("dynamics_trotter_r0.csv"), "utf8");
    const padded = text
      .trimEnd()
      .split("\n")
      .map((line, index) => (index === 0 ? `${line},extra` : `${line},42`))
      .join("\n") + "\n";
    // keep the basename so the geometry label cannot change
    const paddedDir = mkdtempSync(join(tmpdir(), "hchain-extra-"));
    const paddedPath = join(paddedDir, "dynamics_trotter_r0.csv");
    writeFileSync(paddedPath, padded);

    const out = join(work, "padded.svg");
    render({ panel: "fig2b", inputs: [paddedPath], out });
    expect(readFileSync(out)).toEqual(readFileSync(plain));
  });

  it("fails on a corrupted CSV with the column named", () => {
    const text = readFileSync(fx("dynamics_trotter_r0.csv"), "utf8");
    const corruptDir = mkdtempSync(join(tmpdir(), "hchain-corrupt-"));
    const corruptPath = join(corruptDir, "dynamics_trotter_r0.csv");
    writeFileSync(corruptPath, text.replace("fidelity_exact", "fidelity_approx"));
    expect(() => render({ panel: "fig2b", inputs: [corruptPath], out: join(work, "x.svg") }))
      .toThrow(/missing required column "fidelity_exact"/);
  });

  it("rejects a header-only CSV", () => {
    const emptyPath = join(work, "dynamics_r9.csv");
    writeFileSync(emptyPath, "T,fidelity,fidelity_exact\n");
    expect(() => render({ panel: "fig2b", inputs: [emptyPath], out: join(work, "y.svg") }))
      .toThrow(/no data rows/);
  });

  it("rejects non-SVG output paths", () => {
    expect(() =>
      render({ panel: "fig2a", inputs: [fx("landscape.csv")], out: join(work, "fig.png") }),
    ).toThrow(/only \.svg/);
  });
});
