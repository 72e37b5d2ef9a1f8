"""Every reported quantity: OTOCs (two routes), fidelity, eigenstate
overlaps, participation ratio, mean energy and bipartite entropy.

The forward/rotate/backward protocol mirrors the measurement circuit: evolve
|psi_in> for time T, apply the local orbital rotation exp(-i alpha M_j / 2),
evolve backwards for T, then read out the occupation M_i = 2 n_i - 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import EigenSystem

DEGENERACY_TOL = 1e-9  # [hartree] gap below which eigenvalues share a group


@dataclass(frozen=True)
class OverlapSpectrum:
    """Eigenbasis overlaps c_n = <E_n|psi> and degeneracy-grouped weights."""

    coefficients: np.ndarray  # (N,) complex
    group_energies: np.ndarray  # (k,), strictly increasing
    group_weights: np.ndarray  # (k,), sums of |c|^2 within a degenerate group


@dataclass(frozen=True)
class ReducedDensityMatrix:
    """State of the first L qubits after tracing out the rest."""

    n_kept: int
    matrix: np.ndarray  # (2^L, 2^L)


def prepare_initial_state(n_qubits: int = 8, n_occupied: int = 4) -> np.ndarray:
    """Product state |1..10..0> with the first n_occupied orbitals filled."""
    state = np.zeros(1 << n_qubits, dtype=complex)
    index = ((1 << n_occupied) - 1) << (n_qubits - n_occupied)
    state[index] = 1.0
    return state


def _qubit_bit(n_qubits: int, j: int) -> np.ndarray:
    """Bit of qubit j (0 or 1) for every basis index."""
    if not 0 <= j < n_qubits:
        raise ValueError(f"qubit index {j} out of range for {n_qubits} qubits")
    return (np.arange(1 << n_qubits) >> (n_qubits - 1 - j)) & 1


def occupation_signs(n_qubits: int, j: int) -> np.ndarray:
    """Diagonal of M_j = 2 n_j - 1: +1 where qubit j is set, else -1."""
    return 2.0 * _qubit_bit(n_qubits, j) - 1.0


def local_rotation(state: np.ndarray, j: int, alpha: float) -> np.ndarray:
    """Orbital rotation exp(-i alpha M_j / 2) (phases on occupied/unoccupied)."""
    n_qubits = (state.shape[0] - 1).bit_length()
    phases = np.exp(-0.5j * alpha * occupation_signs(n_qubits, j))
    return state * phases


def measurement_expectation(state: np.ndarray, i: int) -> float:
    """<state| M_i |state> for the occupation observable M_i = 2 n_i - 1."""
    n_qubits = (state.shape[0] - 1).bit_length()
    return float(np.sum(np.abs(state) ** 2 * occupation_signs(n_qubits, i)))


def protocol_final_state(evolver, j: int, alpha: float, t: float, psi_in: np.ndarray) -> np.ndarray:
    """psi_fin(T) = U+(T) W U(T) |psi_in> for W = exp(-i alpha M_j / 2)."""
    forward = evolver.forward(psi_in, t)
    rotated = local_rotation(forward, j, alpha)
    return evolver.backward(rotated, t)


def otoc_protocol(evolver, i: int, j: int, alpha: float, t: float, psi_in: np.ndarray) -> float:
    """OTOC via the circuit route: s_i <psi_fin| M_i |psi_fin>.

    psi_in must be an eigenstate of M_i (true for the occupation-product
    initial state), making the correlator real with s_i = <psi_in|M_i|psi_in>.
    """
    s = measurement_expectation(psi_in, i)
    if abs(abs(s) - 1.0) > 1e-9:
        raise ValueError("initial state is not an eigenstate of the measured occupation")
    psi_fin = protocol_final_state(evolver, j, alpha, t, psi_in)
    return float(round(s)) * measurement_expectation(psi_fin, i)


def _heisenberg_rotation(eig: EigenSystem, j: int, alpha: float, t: float) -> np.ndarray:
    """W(T) in the energy eigenbasis: e^{i(E_m - E_n)T} W_mn."""
    n_qubits = (eig.energies.shape[0] - 1).bit_length()
    w_diag = np.exp(-0.5j * alpha * occupation_signs(n_qubits, j))
    w_eig = eig.vectors.conj().T @ (w_diag[:, None] * eig.vectors)
    phases = np.exp(1j * t * (eig.energies[:, None] - eig.energies[None, :]))
    return phases * w_eig


def otoc_eigenbasis(eig: EigenSystem, i: int, j: int, alpha: float, t: float, psi_in: np.ndarray) -> complex:
    """OTOC via the spectral route: <psi| W(T)+ V W(T) V |psi>, V = M_i.

    Independent of the protocol route: the Heisenberg operator is built from
    eigenbasis matrix elements and oscillation phases, not from propagated
    states.
    """
    n_qubits = (eig.energies.shape[0] - 1).bit_length()
    w_t = _heisenberg_rotation(eig, j, alpha, t)
    v_diag = occupation_signs(n_qubits, i)
    v_eig = eig.vectors.conj().T @ (v_diag[:, None] * eig.vectors)
    psi_eig = eig.vectors.conj().T @ psi_in
    ket = w_t @ (v_eig @ psi_eig)
    bra = v_eig @ (w_t @ psi_eig)
    return complex(np.vdot(bra, ket))


def fidelity(evolver, j: int, alpha: float, t: float, psi_in: np.ndarray) -> float:
    """|<psi_in|psi_fin(T)>|^2, the echo after the perturbed round trip."""
    psi_fin = protocol_final_state(evolver, j, alpha, t, psi_in)
    return float(abs(np.vdot(psi_in, psi_fin)) ** 2)


def fidelity_eigenbasis(eig: EigenSystem, j: int, alpha: float, t: float, psi_in: np.ndarray) -> float:
    """Oracle route: |sum_mn e^{i w_mn T} W_mn c_m* c_n|^2."""
    w_t = _heisenberg_rotation(eig, j, alpha, t)
    c = eig.vectors.conj().T @ psi_in
    return float(abs(np.vdot(c, w_t @ c)) ** 2)


def eigen_overlaps(eig: EigenSystem, psi_in: np.ndarray) -> OverlapSpectrum:
    """Overlap coefficients with eigenvalue groups merged below 1e-9 hartree."""
    coefficients = eig.vectors.conj().T @ psi_in
    weights = np.abs(coefficients) ** 2
    group_energies = []
    group_weights = []
    previous = None
    for energy, weight in zip(eig.energies, weights):
        # Consecutive-gap grouping: a gap below tolerance extends the group.
        if previous is not None and energy - previous < DEGENERACY_TOL:
            group_weights[-1] += weight
        else:
            group_energies.append(float(energy))
            group_weights.append(float(weight))
        previous = float(energy)
    return OverlapSpectrum(
        coefficients=coefficients,
        group_energies=np.array(group_energies),
        group_weights=np.array(group_weights),
    )


def participation_ratio(spectrum: OverlapSpectrum) -> float:
    """1 / sum_k w_k^2 over degeneracy-grouped weights (>= 1)."""
    return float(1.0 / np.sum(spectrum.group_weights**2))


def mean_energy(eig_or_dense, psi_in: np.ndarray) -> float:
    """<psi|H|psi>, from either the eigensystem or the dense matrix."""
    if isinstance(eig_or_dense, EigenSystem):
        c = eig_or_dense.vectors.conj().T @ psi_in
        return float(np.sum(np.abs(c) ** 2 * eig_or_dense.energies))
    return float(np.real(np.vdot(psi_in, eig_or_dense @ psi_in)))


def reduced_density_matrix(state: np.ndarray, n_kept: int) -> ReducedDensityMatrix:
    """Partial trace keeping qubits 0..n_kept-1 (the index's leading bits)."""
    n_qubits = (state.shape[0] - 1).bit_length()
    if not 1 <= n_kept <= n_qubits - 1:
        raise ValueError(f"partition size {n_kept} out of range for {n_qubits} qubits")
    block = state.reshape(1 << n_kept, 1 << (n_qubits - n_kept))
    return ReducedDensityMatrix(n_kept=n_kept, matrix=block @ block.conj().T)


def von_neumann_entropy(rho) -> float:
    """-sum lambda ln lambda in nats, eigenvalues below 1e-12 treated as 0."""
    matrix = rho.matrix if isinstance(rho, ReducedDensityMatrix) else np.asarray(rho)
    trace = float(np.real(np.trace(matrix)))
    if abs(trace - 1.0) > 1e-8:
        raise ValueError(f"density matrix trace deviates from 1 by {abs(trace - 1.0):.3e}")
    eigenvalues = np.linalg.eigvalsh(matrix)
    eigenvalues = eigenvalues[eigenvalues >= 1e-12]
    # Rounding can leave -1e-16 for pure states; the entropy is nonnegative.
    return max(0.0, float(-np.sum(eigenvalues * np.log(eigenvalues))))
