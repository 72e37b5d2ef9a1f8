"""Command-line front end: landscape scans, dynamics sweeps, Hamiltonian
dumps and SCF summaries, serialized as stable CSV/JSON.

All floats are written with 15 significant digits and every output is a
deterministic function of the effective configuration, so reruns are
byte-identical on the same platform.  Exit codes: 0 success, 2 invalid
configuration, 3 convergence failure, 4 partial failure (landscape rows
left blank after an SCF failure).
"""

import argparse
import dataclasses
import json
import math
import os
import sys

import numpy as np

from . import geometry, integrals, observables, pipeline, scf
from .errors import ConfigError, ScfConvergenceError
from .pauli import DEFAULT_PRUNE_TOL, dump_pauli_sum

_DEFAULTS = {
    "r": None,  # single-geometry mode when set; grid mode otherwise
    "r_min": -3.3,
    "r_max": 3.3,
    "r_points": 67,
    "alpha": math.pi,
    "rotate_qubit": 0,
    "measure_qubits": tuple(range(8)),
    "t_max": 10.0,
    "t_points": 201,
    "evolver": "exact",
    "trotter_steps": 64,  # per unit time
    "entropy_sizes": (2, 3, 4),
    "out_dir": ".",
    "prune_tol": DEFAULT_PRUNE_TOL,
    "scf_tol": 1e-10,
    "scf_max_iter": 500,
}

_GRID_KEYS = {"r_min", "r_max", "r_points"}


@dataclasses.dataclass
class RunConfig:
    """Effective run configuration after merging defaults, file and flags."""

    r: float | None
    r_min: float
    r_max: float
    r_points: int
    alpha: float
    rotate_qubit: int
    measure_qubits: tuple[int, ...]
    t_max: float
    t_points: int
    evolver: str
    trotter_steps: int
    entropy_sizes: tuple[int, ...]
    out_dir: str
    prune_tol: float
    scf_tol: float
    scf_max_iter: int


def _as_float(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{name} must be finite")
    return value


def _as_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    return value


def _as_int_list(value, name: str) -> tuple[int, ...]:
    if isinstance(value, str):
        parts = [p for p in value.replace(",", " ").split() if p]
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise ConfigError(f"{name} must be a comma-separated list of integers, got {value!r}")
    if isinstance(value, (list, tuple)):
        return tuple(_as_int(v, name) for v in value)
    raise ConfigError(f"{name} must be a list of integers, got {value!r}")


def _coerce_and_validate(merged: dict) -> RunConfig:
    config = RunConfig(
        r=None if merged["r"] is None else _as_float(merged["r"], "r"),
        r_min=_as_float(merged["r_min"], "r_min"),
        r_max=_as_float(merged["r_max"], "r_max"),
        r_points=_as_int(merged["r_points"], "r_points"),
        alpha=_as_float(merged["alpha"], "alpha"),
        rotate_qubit=_as_int(merged["rotate_qubit"], "rotate_qubit"),
        measure_qubits=_as_int_list(merged["measure_qubits"], "measure_qubits"),
        t_max=_as_float(merged["t_max"], "t_max"),
        t_points=_as_int(merged["t_points"], "t_points"),
        evolver=str(merged["evolver"]),
        trotter_steps=_as_int(merged["trotter_steps"], "trotter_steps"),
        entropy_sizes=tuple(sorted(_as_int_list(merged["entropy_sizes"], "entropy_sizes"))),
        out_dir=str(merged["out_dir"]),
        prune_tol=_as_float(merged["prune_tol"], "prune_tol"),
        scf_tol=_as_float(merged["scf_tol"], "scf_tol"),
        scf_max_iter=_as_int(merged["scf_max_iter"], "scf_max_iter"),
    )
    if not 0 <= config.rotate_qubit < 8:
        raise ConfigError(f"rotate_qubit must be in 0..7, got {config.rotate_qubit}")
    if not config.measure_qubits:
        raise ConfigError("measure_qubits must not be empty")
    for q in config.measure_qubits:
        if not 0 <= q < 8:
            raise ConfigError(f"measure_qubits entries must be in 0..7, got {q}")
    if len(set(config.measure_qubits)) != len(config.measure_qubits):
        raise ConfigError("measure_qubits must not repeat")
    if config.t_max <= 0:
        raise ConfigError(f"t_max must be positive, got {config.t_max}")
    if config.t_points < 1:
        raise ConfigError(f"t_points must be >= 1, got {config.t_points}")
    if config.evolver not in ("exact", "trotter"):
        raise ConfigError(f"evolver must be 'exact' or 'trotter', got {config.evolver!r}")
    if config.trotter_steps < 1:
        raise ConfigError(f"trotter_steps must be >= 1, got {config.trotter_steps}")
    if not config.entropy_sizes:
        raise ConfigError("entropy_sizes must not be empty")
    for size in config.entropy_sizes:
        if not 1 <= size <= 7:
            raise ConfigError(f"entropy_sizes entries must be in 1..7, got {size}")
    if len(set(config.entropy_sizes)) != len(config.entropy_sizes):
        raise ConfigError("entropy_sizes must not repeat")
    if config.prune_tol <= 0 or config.scf_tol <= 0:
        raise ConfigError("tolerances must be positive")
    if config.scf_max_iter < 1:
        raise ConfigError(f"scf_max_iter must be >= 1, got {config.scf_max_iter}")
    return config


def _load_config(args) -> tuple[RunConfig, set]:
    """Merge defaults < config file < command-line flags."""
    file_values = {}
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}")
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}")
        if not isinstance(data, dict):
            raise ConfigError("config file must contain a JSON object")
        for key, value in data.items():
            if key not in _DEFAULTS:
                raise ConfigError(f"unknown config key {key!r}")
            file_values[key] = value

    merged = {}
    provided = set()
    for key, default in _DEFAULTS.items():
        cli_value = getattr(args, key, None)
        if cli_value is not None:
            merged[key] = cli_value
            provided.add(key)
        elif key in file_values:
            merged[key] = file_values[key]
            provided.add(key)
        else:
            merged[key] = default
    return _coerce_and_validate(merged), provided


def _resolve_grid(config: RunConfig, provided: set) -> np.ndarray:
    if config.r is not None and provided & _GRID_KEYS:
        raise ConfigError("give either --r or an --r-min/--r-max/--r-points grid, not both")
    if config.r is not None:
        return np.array([config.r])
    try:
        return geometry.r_grid(config.r_min, config.r_max, config.r_points)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _resolve_single_r(config: RunConfig, provided: set, command: str) -> None:
    if provided & _GRID_KEYS:
        raise ConfigError(f"{command} takes a single --r, not a grid")
    if config.r is None:
        config.r = 0.0


def _echo(config: RunConfig, command: str) -> dict:
    echo = {"command": command}
    echo.update(dataclasses.asdict(config))
    return echo


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.15g}"


def _write_csv(path: str, header: list, rows: list) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_format_value(v) for v in row) + "\n")


def _json_default(obj):
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def _pipeline_options(config: RunConfig) -> dict:
    return {
        "scf_max_iter": config.scf_max_iter,
        "scf_tol": config.scf_tol,
        "prune_tol": config.prune_tol,
    }


def cmd_landscape(config: RunConfig, provided: set) -> int:
    grid = _resolve_grid(config, provided)
    rows = []
    any_failed = False
    for r in grid:
        r = float(r)
        try:
            system = pipeline.build_chain_system(r, **_pipeline_options(config))
        except ScfConvergenceError as exc:
            iterations = exc.last.iterations if exc.last is not None else config.scf_max_iter
            rows.append([r, None, None, None, None, iterations, False])
            any_failed = True
            continue
        eig = system.eigensystem()
        psi_in = system.initial_state()
        spectrum = observables.eigen_overlaps(eig, psi_in)
        rows.append([
            r,
            observables.mean_energy(eig, psi_in),
            float(eig.energies[0]),
            system.rhf.total_energy,
            observables.participation_ratio(spectrum),
            system.rhf.iterations,
            True,
        ])

    header = ["r", "E_mean", "E_ground", "E_hf", "participation_ratio",
              "scf_iterations", "scf_converged"]
    _write_csv(os.path.join(config.out_dir, "landscape.csv"), header, rows)

    # Local extrema of E_mean by sign of the discrete second difference,
    # skipping any window that touches an unconverged row.
    extrema = []
    for k in range(1, len(rows) - 1):
        window = [rows[k - 1][1], rows[k][1], rows[k + 1][1]]
        if any(v is None for v in window):
            continue
        left, here, right = window
        if here < left and here < right:
            extrema.append({"kind": "minimum", "r": rows[k][0], "E_mean": here})
        elif here > left and here > right:
            extrema.append({"kind": "maximum", "r": rows[k][0], "E_mean": here})
    _write_json(
        os.path.join(config.out_dir, "landscape.json"),
        {"config": _echo(config, "landscape"), "extrema": extrema},
    )
    return 4 if any_failed else 0


def _protocol_columns(evolver, psi_in, config: RunConfig, signs, t: float) -> list:
    forward = evolver.forward(psi_in, t)
    rotated = observables.local_rotation(forward, config.rotate_qubit, config.alpha)
    final = evolver.backward(rotated, t)
    values = [float(abs(np.vdot(psi_in, final)) ** 2)]
    for i, sign in zip(config.measure_qubits, signs):
        values.append(sign * observables.measurement_expectation(final, i))
    for size in config.entropy_sizes:
        rho = observables.reduced_density_matrix(forward, size)
        values.append(observables.von_neumann_entropy(rho))
    return values


def cmd_dynamics(config: RunConfig) -> int:
    system = pipeline.build_chain_system(config.r, **_pipeline_options(config))
    psi_in = system.initial_state()
    signs = [float(round(observables.measurement_expectation(psi_in, i)))
             for i in config.measure_qubits]

    exact = system.exact_evolver()
    if config.evolver == "trotter":
        evolvers = [system.trotter_evolver(config.trotter_steps), exact]
        suffixes = ["", "_exact"]
    else:
        evolvers = [exact]
        suffixes = [""]

    base_names = (
        ["fidelity"]
        + [f"otoc_q{i}" for i in config.measure_qubits]
        + [f"S_{size}" for size in config.entropy_sizes]
    )
    header = ["T"]
    for name in base_names:
        for suffix in suffixes:
            header.append(name + suffix)

    times = np.linspace(0.0, config.t_max, config.t_points)
    rows = []
    for t in times:
        t = float(t)
        per_evolver = [_protocol_columns(ev, psi_in, config, signs, t) for ev in evolvers]
        row = [t]
        for k in range(len(base_names)):
            for values in per_evolver:
                row.append(values[k])
        rows.append(row)

    tag = f"{config.r:g}"
    _write_csv(os.path.join(config.out_dir, f"dynamics_r{tag}.csv"), header, rows)
    summary = {}
    for index, name in enumerate(header[1:], start=1):
        column = [row[index] for row in rows]
        summary[name] = {
            "time_mean": float(np.mean(column)),
            "minimum": float(np.min(column)),
        }
    _write_json(
        os.path.join(config.out_dir, f"dynamics_r{tag}.json"),
        {"config": _echo(config, "dynamics"), "summary": summary},
    )
    return 0


def cmd_hamiltonian(config: RunConfig) -> int:
    system = pipeline.build_chain_system(config.r, **_pipeline_options(config))
    tag = f"{config.r:g}"
    dump_pauli_sum(system.qubit_hamiltonian, os.path.join(config.out_dir, f"hamiltonian_r{tag}.txt"))
    _write_json(
        os.path.join(config.out_dir, f"hamiltonian_r{tag}.json"),
        {
            "config": _echo(config, "hamiltonian"),
            "nuclear_repulsion": float(system.mol.nuclear_repulsion),
            "hf_total_energy": float(system.rhf.total_energy),
            "term_count": len(system.qubit_hamiltonian),
        },
    )
    return 0


def cmd_scf(config: RunConfig, provided: set) -> int:
    grid = _resolve_grid(config, provided)
    rows = []
    for r in grid:
        r = float(r)
        chain = geometry.chain_positions(r)
        mol = integrals.build_integrals(chain)
        try:
            solution = scf.run_rhf(
                mol, n_electrons=4,
                max_iter=config.scf_max_iter, density_tolerance=config.scf_tol,
            )
        except ScfConvergenceError as exc:
            solution = exc.last
        rows.append([
            r,
            solution.total_energy,
            mol.nuclear_repulsion,
            solution.iterations,
            solution.converged,
        ])
    header = ["r", "E_total", "E_nn", "iterations", "converged"]
    _write_csv(os.path.join(config.out_dir, "scf.csv"), header, rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=float, help="geometry parameter r in bohr (single point)")
    common.add_argument("--r-min", type=float, help="grid start in bohr")
    common.add_argument("--r-max", type=float, help="grid end in bohr")
    common.add_argument("--r-points", type=int, help="number of grid points")
    common.add_argument("--alpha", type=float, help="rotation angle in radians (default pi)")
    common.add_argument("--rotate-qubit", type=int, help="qubit j the rotation acts on (default 0)")
    common.add_argument("--measure-qubits", type=str,
                        help="comma-separated measured qubits i (default 0..7)")
    common.add_argument("--t-max", type=float, help="time-grid end in hbar/hartree (default 10)")
    common.add_argument("--t-points", type=int, help="number of time points (default 201)")
    common.add_argument("--evolver", choices=["exact", "trotter"], help="propagator (default exact)")
    common.add_argument("--trotter-steps", type=int,
                        help="Trotter steps per unit time (default 64)")
    common.add_argument("--entropy-sizes", type=str,
                        help="comma-separated partition sizes L (default 2,3,4)")
    common.add_argument("--out-dir", type=str, help="output directory (default .)")
    common.add_argument("--config", type=str, help="JSON config file; flags override it")

    parser = argparse.ArgumentParser(
        prog="hchain",
        description="Hydrogen-chain electronic structure dynamics: "
                    "energy landscapes, OTOCs, fidelity and entanglement entropy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("landscape", parents=[common],
                   help="scan the r grid: mean energy, ground energy, participation ratio")
    sub.add_parser("dynamics", parents=[common],
                   help="time sweep at one r: fidelity, OTOCs, entanglement entropies")
    sub.add_parser("hamiltonian", parents=[common],
                   help="dump the qubit Hamiltonian Pauli terms at one r")
    sub.add_parser("scf", parents=[common],
                   help="per-r SCF summary over the grid")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config, provided = _load_config(args)
        os.makedirs(config.out_dir, exist_ok=True)
        if args.command == "landscape":
            return cmd_landscape(config, provided)
        if args.command == "dynamics":
            _resolve_single_r(config, provided, "dynamics")
            return cmd_dynamics(config)
        if args.command == "hamiltonian":
            _resolve_single_r(config, provided, "hamiltonian")
            return cmd_hamiltonian(config)
        return cmd_scf(config, provided)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScfConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
