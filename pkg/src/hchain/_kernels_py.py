"""Pure-numpy statevector kernels; twin of the compiled _kernels extension.

A Pauli string acts on a basis index b as
    P|b> = i^ny * (-1)^popcount(b & zy_mask) * |b ^ x_mask>
where x_mask marks X/Y letters, zy_mask marks Z/Y letters and ny counts the
Y letters (qubit k lives at bit n-1-k, so |11110000> reads left to right).
"""

import math

import numpy as np

_I_POW = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)
_INDEX_CACHE: dict[int, np.ndarray] = {}


def _indices(n: int) -> np.ndarray:
    arr = _INDEX_CACHE.get(n)
    if arr is None:
        arr = np.arange(n)
        _INDEX_CACHE[n] = arr
    return arr


def apply_pauli(amps, x_mask, signs, ny_mod4):
    """Return P @ amps for the encoded Pauli string."""
    phased = (_I_POW[ny_mod4] * signs) * amps
    if x_mask == 0:
        return phased
    return phased[_indices(amps.shape[0]) ^ x_mask]


def pauli_exp_inplace(amps, x_mask, signs, ny_mod4, theta):
    """In-place amps <- exp(-i * theta * P) @ amps."""
    pamps = apply_pauli(amps, x_mask, signs, ny_mod4)
    amps *= math.cos(theta)
    amps += (-1.0j * math.sin(theta)) * pamps
