"""One- and two-electron integrals over contracted s-type Gaussians.

Closed forms for s functions only (sufficient for hydrogen in a minimal
basis): overlap, kinetic, nuclear attraction and electron repulsion, the
latter two via the Boys function F0. All quantities in atomic units.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateBasisError

# Standard STO-3G parameterization for the hydrogen 1s orbital
# (exponents in bohr^-2, contraction coefficients for normalized primitives).
STO3G_H_EXPONENTS = (3.42525091, 0.62391373, 0.16885540)
STO3G_H_COEFFS = (0.15432897, 0.53532814, 0.44463454)

BOYS_SERIES_CUTOFF = 1e-6  # below this, the Taylor series beats the erf form

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class PrimitiveGaussian:
    """Normalized s-type primitive exp(-exponent * |r - center|^2)."""

    exponent: float
    center: tuple[float, float, float]
    normalization: float = field(init=False)

    def __post_init__(self):
        if self.exponent <= 0.0:
            raise ValueError(f"primitive exponent must be positive, got {self.exponent}")
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        norm = (2.0 * self.exponent / math.pi) ** 0.75
        object.__setattr__(self, "normalization", norm)


@dataclass(frozen=True)
class ContractedOrbital:
    """Fixed linear combination of primitives, renormalized to unit self-overlap."""

    primitives: tuple[tuple[float, PrimitiveGaussian], ...]
    center: tuple[float, float, float]

    @classmethod
    def sto3g_hydrogen(cls, center) -> "ContractedOrbital":
        center = tuple(float(c) for c in center)
        prims = tuple(
            (c, PrimitiveGaussian(a, center))
            for c, a in zip(STO3G_H_COEFFS, STO3G_H_EXPONENTS)
        )
        raw = cls(primitives=prims, center=center)
        self_overlap = _contracted_overlap(raw, raw)
        scale = 1.0 / math.sqrt(self_overlap)
        return cls(
            primitives=tuple((c * scale, g) for c, g in prims),
            center=center,
        )


@dataclass(frozen=True)
class MolecularIntegrals:
    """AO-basis integral data consumed by the SCF and downstream modules."""

    overlap: np.ndarray  # (n, n)
    kinetic: np.ndarray  # (n, n) [hartree]
    nuclear_attraction: np.ndarray  # (n, n) [hartree]
    eri: np.ndarray  # (n, n, n, n), chemists' notation (uv|ls) [hartree]
    nuclear_repulsion: float  # [hartree]

    @property
    def n_orbitals(self) -> int:
        return self.overlap.shape[0]

    @property
    def core_hamiltonian(self) -> np.ndarray:
        return self.kinetic + self.nuclear_attraction


@dataclass(frozen=True)
class AtomArrangement:
    """Generic nuclear frame for the integral builder (hydrogens only here)."""

    positions: np.ndarray  # (n_atoms, 3)
    charges: np.ndarray  # (n_atoms,)


def hydrogens_at(x_coords) -> AtomArrangement:
    """Hydrogen atoms on the x axis, one per coordinate."""
    xs = [float(x) for x in x_coords]
    positions = np.zeros((len(xs), 3))
    positions[:, 0] = xs
    return AtomArrangement(positions=positions, charges=np.ones(len(xs)))


def boys_f0(x: float) -> float:
    """Boys function F0(x) = int_0^1 exp(-x t^2) dt."""
    if x < 0.0:
        raise ValueError(f"boys_f0 requires x >= 0, got {x}")
    if x <= BOYS_SERIES_CUTOFF:
        return 1.0 - x / 3.0 + x * x / 10.0 - x * x * x / 42.0
    sx = math.sqrt(x)
    return 0.5 * _SQRT_PI * math.erf(sx) / sx


def _dist2(a, b) -> float:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    dz = a[2] - b[2]
    return dx * dx + dy * dy + dz * dz


def overlap_prim(a: PrimitiveGaussian, b: PrimitiveGaussian) -> float:
    """Overlap of two normalized s primitives."""
    p = a.exponent + b.exponent
    mu = a.exponent * b.exponent / p
    value = (math.pi / p) ** 1.5 * math.exp(-mu * _dist2(a.center, b.center))
    return a.normalization * b.normalization * value


def kinetic_prim(a: PrimitiveGaussian, b: PrimitiveGaussian) -> float:
    """Matrix element of -grad^2/2 between normalized s primitives."""
    p = a.exponent + b.exponent
    mu = a.exponent * b.exponent / p
    r2 = _dist2(a.center, b.center)
    value = mu * (3.0 - 2.0 * mu * r2) * (math.pi / p) ** 1.5 * math.exp(-mu * r2)
    return a.normalization * b.normalization * value


def nuclear_prim(a: PrimitiveGaussian, b: PrimitiveGaussian, nucleus) -> float:
    """Attraction -Z/|r - C| between s primitives, nucleus = (charge, center)."""
    charge, center = nucleus
    p = a.exponent + b.exponent
    mu = a.exponent * b.exponent / p
    px = (a.exponent * a.center[0] + b.exponent * b.center[0]) / p
    py = (a.exponent * a.center[1] + b.exponent * b.center[1]) / p
    pz = (a.exponent * a.center[2] + b.exponent * b.center[2]) / p
    value = (
        -charge
        * (2.0 * math.pi / p)
        * math.exp(-mu * _dist2(a.center, b.center))
        * boys_f0(p * _dist2((px, py, pz), center))
    )
    return a.normalization * b.normalization * value


def eri_prim(
    a: PrimitiveGaussian,
    b: PrimitiveGaussian,
    c: PrimitiveGaussian,
    d: PrimitiveGaussian,
) -> float:
    """Repulsion integral (ab|cd) in chemists' notation over normalized s primitives."""
    p = a.exponent + b.exponent
    q = c.exponent + d.exponent
    mu = a.exponent * b.exponent / p
    nu = c.exponent * d.exponent / q
    px = (a.exponent * a.center[0] + b.exponent * b.center[0]) / p
    py = (a.exponent * a.center[1] + b.exponent * b.center[1]) / p
    pz = (a.exponent * a.center[2] + b.exponent * b.center[2]) / p
    qx = (c.exponent * c.center[0] + d.exponent * d.center[0]) / q
    qy = (c.exponent * c.center[1] + d.exponent * d.center[1]) / q
    qz = (c.exponent * c.center[2] + d.exponent * d.center[2]) / q
    rho = p * q / (p + q)
    value = (
        2.0
        * math.pi**2.5
        / (p * q * math.sqrt(p + q))
        * math.exp(-mu * _dist2(a.center, b.center) - nu * _dist2(c.center, d.center))
        * boys_f0(rho * _dist2((px, py, pz), (qx, qy, qz)))
    )
    return (
        a.normalization * b.normalization * c.normalization * d.normalization * value
    )


def _contracted_overlap(oa: ContractedOrbital, ob: ContractedOrbital) -> float:
    return sum(
        ca * cb * overlap_prim(ga, gb)
        for ca, ga in oa.primitives
        for cb, gb in ob.primitives
    )


def nuclear_repulsion_energy(positions, charges) -> float:
    """Sum of Z_a Z_b / |R_a - R_b| over nuclear pairs."""
    positions = np.asarray(positions, dtype=float)
    charges = np.asarray(charges, dtype=float)
    energy = 0.0
    for a in range(len(charges)):
        for b in range(a + 1, len(charges)):
            energy += charges[a] * charges[b] / float(
                np.linalg.norm(positions[a] - positions[b])
            )
    return energy


def build_integrals(geometry, orbitals=None) -> MolecularIntegrals:
    """Assemble all AO integrals for a set of hydrogen-like centers.

    ``geometry`` is anything with .positions and .charges (ChainGeometry or
    AtomArrangement). By default one STO-3G hydrogen s orbital per atom.
    """
    positions = np.asarray(geometry.positions, dtype=float)
    charges = np.asarray(geometry.charges, dtype=float)
    if orbitals is None:
        orbitals = [ContractedOrbital.sto3g_hydrogen(pos) for pos in positions]
    n = len(orbitals)

    overlap = np.zeros((n, n))
    kinetic = np.zeros((n, n))
    nuclear = np.zeros((n, n))
    nuclei = [(charges[a], tuple(positions[a])) for a in range(len(charges))]
    for i in range(n):
        for j in range(i, n):
            s = t = v = 0.0
            for ci, gi in orbitals[i].primitives:
                for cj, gj in orbitals[j].primitives:
                    w = ci * cj
                    s += w * overlap_prim(gi, gj)
                    t += w * kinetic_prim(gi, gj)
                    for nucleus in nuclei:
                        v += w * nuclear_prim(gi, gj, nucleus)
            overlap[i, j] = overlap[j, i] = s
            kinetic[i, j] = kinetic[j, i] = t
            nuclear[i, j] = nuclear[j, i] = v

    # 8-fold permutation symmetry: fill unique (ij|kl) with ij, kl pair order fixed.
    eri = np.zeros((n, n, n, n))
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    for a, (i, j) in enumerate(pairs):
        for i2, j2 in pairs[a:]:
            value = 0.0
            for ci, gi in orbitals[i].primitives:
                for cj, gj in orbitals[j].primitives:
                    for ck, gk in orbitals[i2].primitives:
                        for cl, gl in orbitals[j2].primitives:
                            value += ci * cj * ck * cl * eri_prim(gi, gj, gk, gl)
            for mu, nu in ((i, j), (j, i)):
                for lam, sig in ((i2, j2), (j2, i2)):
                    eri[mu, nu, lam, sig] = value
                    eri[lam, sig, mu, nu] = value

    smallest = float(np.linalg.eigvalsh(overlap)[0])
    if smallest <= 1e-8:
        raise DegenerateBasisError(
            f"overlap matrix is numerically singular (smallest eigenvalue {smallest:.3e})"
        )

    return MolecularIntegrals(
        overlap=overlap,
        kinetic=kinetic,
        nuclear_attraction=nuclear,
        eri=eri,
        nuclear_repulsion=nuclear_repulsion_energy(positions, charges),
    )


def dump_integrals(integrals: MolecularIntegrals, path) -> None:
    """Debug dump: matrices row-major, eri as 1-based (mu nu lam sig value) records."""
    n = integrals.n_orbitals
    with open(path, "w") as fh:
        fh.write(f"n_orbitals {n}\n")
        fh.write(f"nuclear_repulsion {integrals.nuclear_repulsion:.15g}\n")
        for name, mat in (
            ("overlap", integrals.overlap),
            ("kinetic", integrals.kinetic),
            ("nuclear_attraction", integrals.nuclear_attraction),
        ):
            fh.write(f"matrix {name}\n")
            for row in mat:
                fh.write(" ".join(f"{x:.15g}" for x in row) + "\n")
        fh.write("eri\n")
        for mu in range(n):
            for nu in range(n):
                for lam in range(n):
                    for sig in range(n):
                        fh.write(
                            f"{mu + 1} {nu + 1} {lam + 1} {sig + 1} "
                            f"{integrals.eri[mu, nu, lam, sig]:.15g}\n"
                        )
