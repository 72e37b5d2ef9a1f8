"""Hydrogen-chain geometries parameterized by the dimerization coordinate r.

Atom l (1-based) sits on the x axis at X_l = (l-1)*R - (-1)^l * r with
R = 7.55 bohr, so r > 0 pulls atoms 1,2 and 3,4 together into dimers.
Lengths are in bohr, energies in hartree and times in hbar/hartree
throughout the package.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

CHAIN_SPACING = 7.55  # lattice constant R of the 4-atom chain [bohr]
N_ATOMS = 4
R_SOFT_LIMIT = 3.3  # |r| at or beyond this leaves the intended parameter range


@dataclass(frozen=True)
class ChainGeometry:
    """Collinear 4-proton chain derived from the scalar coordinate r."""

    r: float
    positions: np.ndarray  # (4, 3) [bohr]
    charges: np.ndarray  # (4,), all 1.0


def chain_positions(r: float) -> ChainGeometry:
    """Build the 4-atom chain for a given r.

    Warns (does not fail) when |r| >= 3.3 bohr; scans may probe the boundary.
    """
    r = float(r)
    if not math.isfinite(r):
        raise ValueError(f"geometry parameter r must be finite, got {r!r}")
    if abs(r) >= R_SOFT_LIMIT:
        warnings.warn(
            f"|r| = {abs(r):g} bohr is outside the intended range |r| < {R_SOFT_LIMIT} bohr",
            stacklevel=2,
        )
    positions = np.zeros((N_ATOMS, 3))
    for l in range(1, N_ATOMS + 1):
        positions[l - 1, 0] = (l - 1) * CHAIN_SPACING - (-1.0) ** l * r
    return ChainGeometry(r=r, positions=positions, charges=np.ones(N_ATOMS))


def r_grid(r_min: float, r_max: float, n_points: int) -> np.ndarray:
    """Uniform inclusive grid of r values, ascending."""
    if not (math.isfinite(r_min) and math.isfinite(r_max)):
        raise ValueError("r_min and r_max must be finite")
    if r_min >= r_max:
        raise ValueError(f"need r_min < r_max, got [{r_min}, {r_max}]")
    if n_points < 2:
        raise ValueError(f"need n_points >= 2, got {n_points}")
    return np.linspace(r_min, r_max, int(n_points))
