"""Statevector kernels (both backends), exact propagation, Trotter circuits."""

import numpy as np
import pytest

from hchain import _kernels, _kernels_py, kernels
from hchain.dynamics import (
    TrotterEvolver,
    apply_pauli_exponential,
    basis_index,
    basis_state,
    dense_matrix,
    eigendecompose,
    evolve_exact,
    evolve_trotter,
)
from hchain.pauli import PauliSum, PauliTerm

from conftest import chain_system

PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_word(word):
    """Dense matrix of a Pauli word; qubit 0 is the leftmost (most significant) factor."""
    out = np.array([[1.0 + 0j]])
    for ch in word:
        out = np.kron(out, PAULI_MATS[ch])
    return out


def random_words(rng, n_qubits, count):
    letters = np.array(list("IXYZ"))
    return ["".join(rng.choice(letters, size=n_qubits)) for _ in range(count)]


@pytest.mark.parametrize("impl,name", [(_kernels, "compiled"), (_kernels_py, "python")])
def test_apply_pauli_matches_kron(impl, name):
    rng = np.random.default_rng(21)
    for word in random_words(rng, 5, 12) + ["IIIII", "YYYYY", "ZXZXZ"]:
        state = rng.normal(size=32) + 1j * rng.normal(size=32)
        x_mask, zy_mask, n_y = kernels.encode_term(word)
        signs = kernels.sign_table(zy_mask, 5)
        got = impl.apply_pauli(state, x_mask, signs, n_y % 4)
        want = kron_word(word) @ state
        assert np.allclose(got, want, atol=1e-13), (name, word)


@pytest.mark.parametrize("impl,name", [(_kernels, "compiled"), (_kernels_py, "python")])
def test_exp_inplace_matches_closed_form(impl, name):
    rng = np.random.default_rng(22)
    for word in random_words(rng, 4, 8):
        state = rng.normal(size=16) + 1j * rng.normal(size=16)
        theta = float(rng.uniform(-2, 2))
        x_mask, zy_mask, n_y = kernels.encode_term(word)
        signs = kernels.sign_table(zy_mask, 4)
        work = state.copy()
        impl.pauli_exp_inplace(work, x_mask, signs, n_y % 4, theta)
        # P^2 = I so exp(-i theta P) = cos(theta) I - i sin(theta) P
        want = np.cos(theta) * state - 1j * np.sin(theta) * (kron_word(word) @ state)
        assert np.allclose(work, want, atol=1e-13), (name, word)


def test_backend_dispatch_is_live():
    assert kernels.BACKEND in ("compiled", "python")
    rng = np.random.default_rng(23)
    state = rng.normal(size=16) + 1j * rng.normal(size=16)
    x_mask, zy_mask, n_y = kernels.encode_term("XYZI")
    signs = kernels.sign_table(zy_mask, 4)
    a = kernels.apply_pauli(state, x_mask, signs, n_y % 4)
    b = _kernels_py.apply_pauli(state, x_mask, signs, n_y % 4)
    assert np.allclose(a, b, atol=1e-14)


def test_basis_index_and_state():
    assert basis_index("11110000") == 240
    state = basis_state("11110000")
    assert state[240] == 1.0
    assert np.linalg.norm(state) == pytest.approx(1.0, abs=0)
    assert basis_index("0001") == 1
    assert basis_index("1000") == 8


def test_dense_matrix_matches_kron():
    rng = np.random.default_rng(24)
    terms = {w: complex(rng.normal(), rng.normal()) for w in random_words(rng, 4, 6)}
    s = PauliSum(4, terms)
    want = np.zeros((16, 16), dtype=complex)
    for w, c in s.items():
        want += c * kron_word(w)
    assert np.allclose(dense_matrix(s), want, atol=1e-13)


def test_eigendecompose_roundtrip_and_guard():
    h = dense_matrix(chain_system(0.0).qubit_hamiltonian)
    eig = eigendecompose(h)
    assert np.all(np.diff(eig.energies) >= -1e-12)
    rebuilt = (eig.vectors * eig.energies) @ eig.vectors.conj().T
    assert np.max(np.abs(rebuilt - h)) < 1e-10
    with pytest.raises(ValueError):
        eigendecompose(h + 1e-6 * 1j * np.eye(256))


def test_exact_evolution_properties():
    system = chain_system(0.0)
    eig = system.eigensystem()
    psi = system.initial_state()
    assert np.allclose(evolve_exact(eig, psi, 0.0), psi, atol=1e-14)
    full = evolve_exact(eig, psi, 1.7)
    assert np.linalg.norm(full) == pytest.approx(1.0, abs=1e-12)
    stepped = evolve_exact(eig, evolve_exact(eig, psi, 0.9), 0.8)
    assert np.allclose(stepped, full, atol=1e-12)
    # an eigenstate only picks up a phase
    k = 7
    vec = eig.vectors[:, k]
    out = evolve_exact(eig, vec, 2.3)
    assert np.allclose(out, np.exp(-1j * eig.energies[k] * 2.3) * vec, atol=1e-12)


def test_exact_evolver_adjoint():
    system = chain_system(0.3)
    ev = system.exact_evolver()
    psi = system.initial_state()
    roundtrip = ev.backward(ev.forward(psi, 4.2), 4.2)
    assert np.max(np.abs(roundtrip - psi)) < 1e-12


def test_apply_pauli_exponential_closed_form():
    rng = np.random.default_rng(25)
    state = rng.normal(size=16) + 1j * rng.normal(size=16)
    state /= np.linalg.norm(state)
    term = PauliTerm(0.37, "XZYI")
    dt = 0.21
    got = apply_pauli_exponential(state.copy(), term, dt)
    angle = 0.37 * dt
    want = np.cos(angle) * state - 1j * np.sin(angle) * (kron_word("XZYI") @ state)
    assert np.allclose(got, want, atol=1e-13)


def test_trotter_default_steps():
    ev = TrotterEvolver(chain_system(0.0).qubit_hamiltonian, steps_per_unit_time=64.0)
    assert ev.default_steps(0.0) == 1
    assert ev.default_steps(1.0) == 64
    assert ev.default_steps(1.5) == 96
    assert ev.default_steps(-1.5) == 96
    assert ev.default_steps(0.001) == 1


def test_trotter_backward_is_exact_adjoint():
    # algebraically exact inverse; the bound is float accumulation over
    # ~2 * 48 * 185 sequential term exponentials
    system = chain_system(0.0)
    ev = system.trotter_evolver(steps_per_unit_time=16.0)
    psi = system.initial_state()
    roundtrip = ev.backward(ev.forward(psi, 3.0), 3.0)
    assert np.max(np.abs(roundtrip - psi)) < 1e-12


def test_trotter_converges_to_exact():
    system = chain_system(0.0)
    psi = system.initial_state()
    exact = system.exact_evolver().forward(psi, 2.0)
    errors = []
    for steps in (32, 64, 128):
        approx = evolve_trotter(system.qubit_hamiltonian, psi, 2.0, steps)
        errors.append(float(np.linalg.norm(approx - exact)))
    assert errors[0] > errors[1] > errors[2]
    # first-order stepping: error ~ 1/steps
    assert errors[0] / errors[1] == pytest.approx(2.0, abs=0.5)
    assert errors[1] / errors[2] == pytest.approx(2.0, abs=0.5)


def test_trotter_norm_preserved():
    system = chain_system(0.7)
    ev = system.trotter_evolver(steps_per_unit_time=32.0)
    psi = system.initial_state()
    out = ev.forward(psi, 5.0)
    assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-12)
