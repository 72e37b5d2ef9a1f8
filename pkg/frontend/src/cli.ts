#!/usr/bin/env node
/**
 * render --panel <fig2a|fig2b|fig2cd|fig3> --inputs <csv...> --out <path.svg>
 *
 * Exit codes: 0 rendered, 2 bad invocation, 1 unreadable or malformed data.
 */

import { pathToFileURL } from "node:url";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { CsvError } from "./csv.js";
import { PANEL_SELECTORS, PanelSelector } from "./panels.js";
import { render } from "./render.js";

class UsageError extends Error {}

export async function main(argv: string[]): Promise<number> {
  try {
    const args = await yargs(argv)
      .scriptName("render")
      .option("panel", {
        type: "string",
        choices: PANEL_SELECTORS,
        demandOption: true,
        describe: "figure layout to draw",
      })
      .option("inputs", {
        type: "string",
        array: true,
        demandOption: true,
        describe: "input CSV files from the simulation CLI",
      })
      .option("out", {
        type: "string",
        demandOption: true,
        describe: "output SVG path",
      })
      .strict()
      .exitProcess(false)
      .fail((message, error) => {
        throw error ?? new UsageError(message ?? "invalid arguments");
      })
      .parse();
    render({
      panel: args.panel as PanelSelector,
      inputs: args.inputs,
      out: args.out,
    });
    return 0;
  } catch (error) {
    console.error(`error: ${(error as Error).message}`);
    return error instanceof UsageError ? 2 : 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
