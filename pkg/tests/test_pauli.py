"""Jordan-Wigner operators against fermionic algebra and a dense oracle."""

import numpy as np
import pytest

from hchain.dynamics import dense_matrix
from hchain.errors import ConsistencyError
from hchain.pauli import (
    PauliSum,
    PauliTerm,
    jw_lowering,
    jw_map_hamiltonian,
    jw_raising,
    measurement_operator,
    number_operator,
    pauli_multiply,
    total_number_operator,
)
from hchain.scf import SpinOrbitalHamiltonian

from conftest import hydrogen_system


def test_single_qubit_products():
    x = PauliTerm(1.0, "X")
    y = PauliTerm(1.0, "Y")
    assert pauli_multiply(x, y) == PauliTerm(1j, "Z")
    assert pauli_multiply(y, x) == PauliTerm(-1j, "Z")
    assert pauli_multiply(x, x) == PauliTerm(1.0 + 0j, "I")


def test_lowering_word_structure():
    low = jw_lowering(2, 4)
    assert dict(low.items()) == pytest.approx({"ZZXI": 0.5, "ZZYI": 0.5j})
    raise_ = jw_raising(0, 4)
    assert dict(raise_.items()) == pytest.approx({"XIII": 0.5, "YIII": -0.5j})


def test_canonical_anticommutation_all_pairs():
    n = 8
    identity = PauliSum.identity(n)
    zero = PauliSum.zero(n)
    a = [jw_lowering(p, n) for p in range(n)]
    ad = [jw_raising(p, n) for p in range(n)]
    for p in range(n):
        for q in range(n):
            mixed = a[p].anticommutator(ad[q])
            expected = identity if p == q else zero
            assert (mixed - expected).max_abs() < 1e-12, (p, q)
            assert a[p].anticommutator(a[q]).max_abs() < 1e-12, (p, q)


def test_number_and_measurement_operators():
    n = 8
    for p in (0, 3, 7):
        built = jw_raising(p, n) * jw_lowering(p, n)
        assert (built - number_operator(p, n)).max_abs() < 1e-12
        word = "I" * p + "Z" + "I" * (n - 1 - p)
        m = measurement_operator(p, n)
        assert dict(m.items()) == pytest.approx({word: -1.0})
    total = total_number_operator(n)
    rebuilt = PauliSum.zero(n)
    for p in range(n):
        rebuilt = rebuilt + number_operator(p, n)
    assert (total - rebuilt).max_abs() < 1e-14


def test_sum_algebra_against_dense():
    rng = np.random.default_rng(12)
    words = ["XYZ", "ZZI", "IXX", "YIZ", "III"]

    def random_sum():
        out = PauliSum.zero(3)
        for w in rng.choice(words, size=3, replace=False):
            out = out + PauliSum(3, {str(w): complex(rng.normal(), rng.normal())})
        return out

    for _ in range(5):
        a, b = random_sum(), random_sum()
        assert np.allclose(dense_matrix(a * b), dense_matrix(a) @ dense_matrix(b), atol=1e-12)
        assert np.allclose(dense_matrix(a + b), dense_matrix(a) + dense_matrix(b), atol=1e-12)
        assert np.allclose(dense_matrix(a.adjoint()), dense_matrix(a).conj().T, atol=1e-12)
        comm = dense_matrix(a.commutator(b))
        da, db = dense_matrix(a), dense_matrix(b)
        assert np.allclose(comm, da @ db - db @ da, atol=1e-12)


def dense_annihilation(p, n):
    """Occupation-basis a_p with qubit 0 as the most significant bit."""
    dim = 1 << n
    out = np.zeros((dim, dim))
    bit = 1 << (n - 1 - p)
    for b in range(dim):
        if b & bit:
            parity = bin(b >> (n - p)).count("1")
            out[b ^ bit, b] = (-1.0) ** parity
    return out


def dense_from_coefficients(so: SpinOrbitalHamiltonian) -> np.ndarray:
    n = so.n_spin_orbitals
    lower = [dense_annihilation(p, n) for p in range(n)]
    raise_ = [m.T for m in lower]
    out = so.constant * np.eye(1 << n, dtype=complex)
    for p in range(n):
        for q in range(n):
            if so.h[p, q] != 0.0:
                out = out + so.h[p, q] * raise_[p] @ lower[q]
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    c = so.v[p, q, r, s]
                    if c != 0.0:
                        out = out + 0.5 * c * raise_[p] @ raise_[q] @ lower[s] @ lower[r]
    return out


def test_jw_operators_match_dense_fermions():
    n = 4
    for p in range(n):
        assert np.allclose(dense_matrix(jw_lowering(p, n)), dense_annihilation(p, n), atol=1e-14)
        assert np.allclose(dense_matrix(jw_raising(p, n)), dense_annihilation(p, n).T, atol=1e-14)


def test_compiled_hamiltonian_matches_dense_fermionic_build():
    # 4-qubit instance: the dimer pipeline vs a direct occupation-basis sum.
    system = hydrogen_system(1.4)
    oracle = dense_from_coefficients(system.hamiltonian)
    compiled = dense_matrix(system.qubit_hamiltonian)
    assert np.max(np.abs(compiled - oracle)) < 1e-10


def test_imaginary_residue_guard():
    h = np.zeros((2, 2))
    h[0, 1] = 0.3  # not Hermitian: JW image keeps an imaginary part
    v = np.zeros((2, 2, 2, 2))
    broken = SpinOrbitalHamiltonian(h=h, v=v, constant=0.0)
    with pytest.raises(ConsistencyError):
        jw_map_hamiltonian(broken)


def test_prune_tolerance_drops_small_terms():
    system = hydrogen_system(1.4)
    loose = jw_map_hamiltonian(system.hamiltonian, prune_tol=0.1)
    tight = jw_map_hamiltonian(system.hamiltonian, prune_tol=1e-12)
    assert len(loose) < len(tight)
    for word, coeff in loose.items():
        assert abs(coeff) >= 0.1


def test_word_register_size_checked():
    with pytest.raises(ValueError):
        PauliSum(3, {"XX": 1.0})
    with pytest.raises(ValueError):
        pauli_multiply(PauliTerm(1.0, "XX"), PauliTerm(1.0, "X"))
