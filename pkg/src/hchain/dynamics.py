"""Dense spectral decomposition and statevector time evolution.

States are complex arrays of length 2^n with qubit 0 at the most significant
bit of the basis index, so the label |11110000> is index 240. Times are in
hbar/hartree.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .pauli import PauliSum, PauliTerm


def basis_index(bits: str) -> int:
    """Index of a computational basis label, e.g. '11110000' -> 240."""
    return int(bits, 2)


def basis_state(bits: str) -> np.ndarray:
    state = np.zeros(1 << len(bits), dtype=complex)
    state[basis_index(bits)] = 1.0
    return state


@dataclass(frozen=True)
class EigenSystem:
    """Spectral decomposition H = U diag(E) U+ with ascending energies."""

    energies: np.ndarray  # (N,) [hartree]
    vectors: np.ndarray  # (N, N), columns are eigenstates


def dense_matrix(pauli_sum: PauliSum) -> np.ndarray:
    """Dense matrix of a Pauli sum (one nonzero per column per term)."""
    n = pauli_sum.n_qubits
    dim = 1 << n
    cols = np.arange(dim)
    out = np.zeros((dim, dim), dtype=complex)
    for word, coeff in pauli_sum.items():
        x_mask, zy_mask, n_y = kernels.encode_term(word)
        phases = (1j) ** (n_y % 4) * kernels.sign_table(zy_mask, n)
        out[cols ^ x_mask, cols] += coeff * phases
    return out


def eigendecompose(h_dense: np.ndarray) -> EigenSystem:
    """Full Hermitian eigendecomposition; input checked for Hermiticity."""
    deviation = float(np.max(np.abs(h_dense - h_dense.conj().T)))
    if deviation > 1e-10:
        raise ValueError(f"matrix is not Hermitian (max deviation {deviation:.3e})")
    energies, vectors = np.linalg.eigh(h_dense)
    return EigenSystem(energies=energies, vectors=vectors)


def evolve_exact(eig: EigenSystem, state: np.ndarray, t: float) -> np.ndarray:
    """psi(t) = U exp(-iEt) U+ psi; negative t runs the evolution backwards."""
    amplitudes = eig.vectors.conj().T @ state
    amplitudes *= np.exp(-1j * eig.energies * t)
    return eig.vectors @ amplitudes


def apply_pauli_exponential(state: np.ndarray, term: PauliTerm, dt: float) -> np.ndarray:
    """exp(-i * c * dt * P) applied by bit manipulation; c must be real."""
    coeff = complex(term.coefficient)
    if abs(coeff.imag) > 1e-12:
        raise ValueError(f"Pauli exponential needs a real coefficient, got {coeff}")
    n = len(term.axes)
    x_mask, zy_mask, n_y = kernels.encode_term(term.axes)
    signs = kernels.sign_table(zy_mask, n)
    out = np.array(state, dtype=complex, copy=True)
    kernels.pauli_exp_inplace(out, x_mask, signs, n_y % 4, coeff.real * dt)
    return out


class TrotterEvolver:
    """First-order Trotter product with a fixed lexicographic term order.

    forward() applies (prod_k exp(-i c_k dt P_k))^n_steps; backward() applies
    the exact adjoint circuit (reversed term order, negated angles), so
    backward(forward(psi)) == psi to machine precision.
    """

    def __init__(self, hamiltonian: PauliSum, steps_per_unit_time: float = 64.0):
        self.n_qubits = hamiltonian.n_qubits
        self.steps_per_unit_time = float(steps_per_unit_time)
        self._terms = []
        for word, coeff in hamiltonian.items():  # already lexicographic
            coeff = complex(coeff)
            if abs(coeff.imag) > 1e-12:
                raise ValueError("Trotterization needs real term coefficients")
            x_mask, zy_mask, n_y = kernels.encode_term(word)
            signs = kernels.sign_table(zy_mask, self.n_qubits)
            self._terms.append((x_mask, signs, n_y % 4, coeff.real))

    def default_steps(self, t: float) -> int:
        return max(1, int(np.ceil(abs(t) * self.steps_per_unit_time)))

    def _run(self, state, t, n_steps, reverse):
        n_steps = int(n_steps) if n_steps else self.default_steps(t)
        dt = t / n_steps
        out = np.array(state, dtype=complex, copy=True)
        sequence = self._terms[::-1] if reverse else self._terms
        for _ in range(n_steps):
            for x_mask, signs, ny, coeff in sequence:
                kernels.pauli_exp_inplace(out, x_mask, signs, ny, coeff * dt)
        return out

    def forward(self, state: np.ndarray, t: float, n_steps: int | None = None) -> np.ndarray:
        return self._run(state, t, n_steps, reverse=False)

    def backward(self, state: np.ndarray, t: float, n_steps: int | None = None) -> np.ndarray:
        """Adjoint of forward(state, t, n_steps)."""
        return self._run(state, -t, n_steps, reverse=True)


class ExactEvolver:
    """Eigenbasis propagator with the same forward/backward interface."""

    def __init__(self, eig: EigenSystem):
        self.eig = eig

    def forward(self, state: np.ndarray, t: float) -> np.ndarray:
        return evolve_exact(self.eig, state, t)

    def backward(self, state: np.ndarray, t: float) -> np.ndarray:
        return evolve_exact(self.eig, state, -t)


def dump_state(state: np.ndarray, path) -> None:
    """Debug dump, one line per amplitude: index bitstring re im."""
    n = (state.shape[0] - 1).bit_length()
    with open(path, "w") as fh:
        for index, amp in enumerate(state):
            fh.write(f"{index} {index:0{n}b} {amp.real:.15g} {amp.imag:.15g}\n")


def evolve_trotter(
    hamiltonian: PauliSum,
    state: np.ndarray,
    t: float,
    n_steps: int,
    term_order: str = "lexicographic",
) -> np.ndarray:
    """First-order Trotterized evolution by time t in n_steps slices."""
    if n_steps < 1:
        raise ValueError(f"need n_steps >= 1, got {n_steps}")
    if term_order != "lexicographic":
        raise ValueError(f"unsupported term order {term_order!r}")
    return TrotterEvolver(hamiltonian).forward(state, t, n_steps)
