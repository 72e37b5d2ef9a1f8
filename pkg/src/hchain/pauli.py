"""Pauli-string algebra and the Jordan-Wigner compilation of the Hamiltonian.

A term is a word over {I, X, Y, Z}; position k in the word is qubit k, and
qubit k encodes spin orbital k (occupied = basis symbol 1). Annihilation
compiles to a Z string on qubits 0..p-1 followed by (X + iY)/2 on qubit p,
which reproduces the fermionic parity convention where qubit 0 is the
most significant bit of a basis index.
"""

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import ConsistencyError
from .scf import SpinOrbitalHamiltonian

DEFAULT_PRUNE_TOL = 1e-12

# Single-qubit products: (left, right) -> (phase, result).
_PRODUCTS = {
    ("I", "I"): (1, "I"), ("I", "X"): (1, "X"), ("I", "Y"): (1, "Y"), ("I", "Z"): (1, "Z"),
    ("X", "I"): (1, "X"), ("X", "X"): (1, "I"), ("X", "Y"): (1j, "Z"), ("X", "Z"): (-1j, "Y"),
    ("Y", "I"): (1, "Y"), ("Y", "X"): (-1j, "Z"), ("Y", "Y"): (1, "I"), ("Y", "Z"): (1j, "X"),
    ("Z", "I"): (1, "Z"), ("Z", "X"): (1j, "Y"), ("Z", "Y"): (-1j, "X"), ("Z", "Z"): (1, "I"),
}


class PauliTerm(NamedTuple):
    coefficient: complex
    axes: str  # length = register size, alphabet IXYZ


def identity_word(n_qubits: int) -> str:
    return "I" * n_qubits


def pauli_multiply(a: PauliTerm, b: PauliTerm) -> PauliTerm:
    """Product of two terms with accumulated phase (e.g. X*Y = iZ per qubit)."""
    if len(a.axes) != len(b.axes):
        raise ValueError(f"register size mismatch: {len(a.axes)} vs {len(b.axes)}")
    phase = a.coefficient * b.coefficient
    out = []
    for ca, cb in zip(a.axes, b.axes):
        p, c = _PRODUCTS[(ca, cb)]
        phase *= p
        out.append(c)
    return PauliTerm(phase, "".join(out))


class PauliSum:
    """Weighted collection of Pauli words on a fixed register.

    Terms with |coefficient| below the prune tolerance are dropped on
    collection; iteration is lexicographic in the axes word so that builds
    are deterministic.
    """

    def __init__(self, n_qubits: int, terms=None):
        self.n_qubits = n_qubits
        self.terms: dict[str, complex] = {}
        if terms:
            for word, coeff in dict(terms).items():
                self._accumulate(word, coeff)
            self.prune()

    def _accumulate(self, word: str, coeff: complex):
        if len(word) != self.n_qubits:
            raise ValueError(f"word {word!r} does not fit a {self.n_qubits}-qubit register")
        value = self.terms.get(word, 0.0) + coeff
        if value == 0:
            self.terms.pop(word, None)
        else:
            self.terms[word] = value

    @classmethod
    def identity(cls, n_qubits: int, coefficient=1.0) -> "PauliSum":
        return cls(n_qubits, {identity_word(n_qubits): coefficient})

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits)

    def copy(self) -> "PauliSum":
        out = PauliSum(self.n_qubits)
        out.terms = dict(self.terms)
        return out

    def items(self):
        """Terms in lexicographic word order."""
        return [(w, self.terms[w]) for w in sorted(self.terms)]

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        out = self.copy()
        for word, coeff in other.terms.items():
            out._accumulate(word, coeff)
        return out

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + other.scaled(-1.0)

    def scaled(self, factor) -> "PauliSum":
        out = PauliSum(self.n_qubits)
        out.terms = {w: factor * c for w, c in self.terms.items()}
        return out

    def __mul__(self, other: "PauliSum") -> "PauliSum":
        """Operator product, collecting like words."""
        out = PauliSum(self.n_qubits)
        for wa, ca in self.terms.items():
            ta = PauliTerm(ca, wa)
            for wb, cb in other.terms.items():
                prod = pauli_multiply(ta, PauliTerm(cb, wb))
                out._accumulate(prod.axes, prod.coefficient)
        return out

    def adjoint(self) -> "PauliSum":
        out = PauliSum(self.n_qubits)
        out.terms = {w: np.conj(c) for w, c in self.terms.items()}
        return out

    def commutator(self, other: "PauliSum") -> "PauliSum":
        return self * other - other * self

    def anticommutator(self, other: "PauliSum") -> "PauliSum":
        return self * other + other * self

    def prune(self, tol: float = DEFAULT_PRUNE_TOL) -> "PauliSum":
        self.terms = {w: c for w, c in self.terms.items() if abs(c) >= tol}
        return self

    def max_abs_imag(self) -> float:
        if not self.terms:
            return 0.0
        return max(abs(c.imag) for c in map(complex, self.terms.values()))

    def max_abs(self) -> float:
        if not self.terms:
            return 0.0
        return max(abs(c) for c in self.terms.values())

    def __repr__(self):
        inner = " + ".join(f"({c:.6g})*{w}" for w, c in self.items()[:6])
        more = "" if len(self.terms) <= 6 else f" ... ({len(self.terms)} terms)"
        return f"PauliSum[{inner}{more}]"


def jw_lowering(p: int, n_qubits: int = 8) -> PauliSum:
    """Annihilation operator a_p as a Pauli sum (Z string then (X + iY)/2)."""
    if not 0 <= p < n_qubits:
        raise ValueError(f"spin-orbital index {p} out of range for {n_qubits} modes")
    prefix = "Z" * p
    suffix = "I" * (n_qubits - p - 1)
    return PauliSum(
        n_qubits,
        {prefix + "X" + suffix: 0.5, prefix + "Y" + suffix: 0.5j},
    )


def jw_raising(p: int, n_qubits: int = 8) -> PauliSum:
    """Creation operator a+_p (term-wise conjugate of the lowering sum)."""
    return jw_lowering(p, n_qubits).adjoint()


def number_operator(p: int, n_qubits: int = 8) -> PauliSum:
    """Occupation n_p = a+_p a_p = (I - Z_p)/2."""
    if not 0 <= p < n_qubits:
        raise ValueError(f"spin-orbital index {p} out of range for {n_qubits} modes")
    word = "I" * p + "Z" + "I" * (n_qubits - p - 1)
    return PauliSum(n_qubits, {identity_word(n_qubits): 0.5, word: -0.5})


def measurement_operator(p: int, n_qubits: int = 8) -> PauliSum:
    """M_p = 2 n_p - 1: +1 on occupied orbital p, -1 on unoccupied."""
    if not 0 <= p < n_qubits:
        raise ValueError(f"spin-orbital index {p} out of range for {n_qubits} modes")
    word = "I" * p + "Z" + "I" * (n_qubits - p - 1)
    return PauliSum(n_qubits, {word: -1.0})


def total_number_operator(n_qubits: int = 8) -> PauliSum:
    out = PauliSum.zero(n_qubits)
    for p in range(n_qubits):
        out = out + number_operator(p, n_qubits)
    return out


@lru_cache(maxsize=None)
def _excitation_template(p: int, q: int, n_qubits: int):
    """a+_p a_q as a tuple of (word, coefficient)."""
    product = jw_raising(p, n_qubits) * jw_lowering(q, n_qubits)
    return tuple(product.items())


@lru_cache(maxsize=None)
def _two_body_template(p: int, q: int, r: int, s: int, n_qubits: int):
    """a+_p a+_q a_s a_r as a tuple of (word, coefficient)."""
    product = (
        jw_raising(p, n_qubits)
        * jw_raising(q, n_qubits)
        * jw_lowering(s, n_qubits)
        * jw_lowering(r, n_qubits)
    )
    return tuple(product.items())


def collect_hamiltonian_terms(hamiltonian: SpinOrbitalHamiltonian) -> dict[str, complex]:
    """Raw Jordan-Wigner image of the Hamiltonian, coefficients still complex."""
    n = hamiltonian.n_spin_orbitals
    acc: dict[str, complex] = {identity_word(n): complex(hamiltonian.constant)}
    h = hamiltonian.h
    v = hamiltonian.v
    for p in range(n):
        for q in range(n):
            coeff = h[p, q]
            if coeff == 0.0:
                continue
            for word, c in _excitation_template(p, q, n):
                acc[word] = acc.get(word, 0.0) + coeff * c
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    coeff = v[p, q, r, s]
                    if coeff == 0.0:
                        continue
                    for word, c in _two_body_template(p, q, r, s, n):
                        acc[word] = acc.get(word, 0.0) + 0.5 * coeff * c
    return acc


def jw_map_hamiltonian(
    hamiltonian: SpinOrbitalHamiltonian, prune_tol: float = DEFAULT_PRUNE_TOL
) -> PauliSum:
    """Compile the spin-orbital Hamiltonian to a real-coefficient Pauli sum."""
    raw = collect_hamiltonian_terms(hamiltonian)
    residue = max((abs(c.imag) for c in raw.values()), default=0.0)
    if residue > 1e-10:
        raise ConsistencyError(
            f"Hamiltonian compilation left an imaginary residue of {residue:.3e}"
        )
    n = hamiltonian.n_spin_orbitals
    out = PauliSum(n)
    out.terms = {w: c.real for w, c in raw.items() if abs(c.real) >= prune_tol}
    return out


def dump_pauli_sum(pauli_sum: PauliSum, path) -> None:
    """Golden-file format: one '<axes-word> <coefficient>' line per term, sorted."""
    with open(path, "w") as fh:
        for word, coeff in pauli_sum.items():
            fh.write(f"{word} {complex(coeff).real:.15g}\n")
