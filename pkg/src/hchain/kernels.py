"""Kernel backend selection and Pauli-string encoding helpers.

The compiled extension is used when importable; set HCHAIN_PURE_PYTHON=1 to
force the numpy fallback (the benchmark and the equivalence tests exercise
both backends through this switch).
"""

import os

import numpy as np

from . import _kernels_py

if os.environ.get("HCHAIN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

apply_pauli = _impl.apply_pauli
pauli_exp_inplace = _impl.pauli_exp_inplace


def encode_term(axes: str) -> tuple[int, int, int]:
    """Return (x_mask, zy_mask, n_y) for a Pauli word; qubit k is bit n-1-k."""
    n = len(axes)
    x_mask = 0
    zy_mask = 0
    n_y = 0
    for k, letter in enumerate(axes):
        bit = 1 << (n - 1 - k)
        if letter == "X":
            x_mask |= bit
        elif letter == "Y":
            x_mask |= bit
            zy_mask |= bit
            n_y += 1
        elif letter == "Z":
            zy_mask |= bit
        elif letter != "I":
            raise ValueError(f"invalid Pauli letter {letter!r} in {axes!r}")
    return x_mask, zy_mask, n_y


def sign_table(zy_mask: int, n_qubits: int) -> np.ndarray:
    """(-1)^popcount(b & zy_mask) for every basis index b, as int8."""
    parity = np.bitwise_count(np.arange(1 << n_qubits) & zy_mask) & 1
    return (1 - 2 * parity).astype(np.int8)
