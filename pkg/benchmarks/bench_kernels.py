"""Time the compiled Pauli kernel against the numpy fallback.

Both implementations are imported side by side (the package-level dispatch
in hchain.kernels picks one at import time via HCHAIN_PURE_PYTHON; here we
want both in one process). Workload: every Pauli word of the r=0 chain
Hamiltonian applied to a normalized random state, then a first-order
Trotter sweep built from the same words.

Run:  python benchmarks/bench_kernels.py [--repeats 20]
"""

import argparse
import time
import warnings

import numpy as np

from hchain import _kernels, _kernels_py, kernels
from hchain.pipeline import build_chain_system


def encoded_terms(r=0.0):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        system = build_chain_system(r)
    out = []
    for word, coeff in system.qubit_hamiltonian.items():
        x_mask, zy_mask, n_y = kernels.encode_term(word)
        signs = kernels.sign_table(zy_mask, len(word))
        out.append((x_mask, signs, n_y % 4, coeff.real))
    return out


def bench_apply(impl, terms, state, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for x_mask, signs, ny, _ in terms:
            impl.apply_pauli(state, x_mask, signs, ny)
        best = min(best, time.perf_counter() - t0)
    return best / len(terms)


def bench_exp(impl, terms, state, repeats):
    best = np.inf
    for _ in range(repeats):
        work = state.copy()
        t0 = time.perf_counter()
        for x_mask, signs, ny, coeff in terms:
            impl.pauli_exp_inplace(work, x_mask, signs, ny, 0.01 * coeff)
        best = min(best, time.perf_counter() - t0)
    return best / len(terms)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    terms = encoded_terms()
    rng = np.random.default_rng(7)
    state = rng.normal(size=256) + 1j * rng.normal(size=256)
    state /= np.linalg.norm(state)

    print(f"package dispatch selected: {kernels.BACKEND}")
    print(f"workload: {len(terms)} Pauli words on a 256-amplitude state, best of {args.repeats}\n")
    rows = []
    for name, impl in (("compiled", _kernels), ("python", _kernels_py)):
        t_apply = bench_apply(impl, terms, state, args.repeats)
        t_exp = bench_exp(impl, terms, state, args.repeats)
        rows.append((name, t_apply, t_exp))
        print(f"{name:>9}:  apply_pauli {t_apply * 1e6:8.2f} us/term   exp_inplace {t_exp * 1e6:8.2f} us/term")
    speed_apply = rows[1][1] / rows[0][1]
    speed_exp = rows[1][2] / rows[0][2]
    print(f"\nspeedup (python/compiled):  apply {speed_apply:.1f}x   exp {speed_exp:.1f}x")

    # sanity: identical numerics
    for x_mask, signs, ny, _ in terms[:32]:
        a = _kernels.apply_pauli(state, x_mask, signs, ny)
        b = _kernels_py.apply_pauli(state, x_mask, signs, ny)
        assert np.allclose(a, b, atol=1e-14), "backend mismatch"
    print("backend outputs agree on sampled terms")


if __name__ == "__main__":
    main()
