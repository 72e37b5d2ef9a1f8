"""Restricted Hartree-Fock and the transformation to the spin-orbital basis.

The RHF molecular orbitals define the second-quantized Hamiltonian
H = sum h_pq a+_p a_q + 1/2 sum <pq|rs> a+_p a+_q a_s a_r + constant
over 2*n_spatial spin orbitals in INTERLEAVED ordering (alpha, beta
alternating, spatial orbitals sorted by orbital energy ascending).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBasisError, ScfConvergenceError
from .integrals import MolecularIntegrals


@dataclass(frozen=True)
class RhfSolution:
    """Converged (or last-iterate) restricted Hartree-Fock state."""

    mo_coefficients: np.ndarray  # (n, n), columns are MOs in the AO basis
    orbital_energies: np.ndarray  # (n,) ascending [hartree]
    electronic_energy: float  # [hartree]
    total_energy: float  # electronic + nuclear repulsion [hartree]
    iterations: int
    converged: bool


@dataclass(frozen=True)
class SpinOrbitalHamiltonian:
    """Second-quantized coefficients over interleaved spin orbitals."""

    h: np.ndarray  # (2n, 2n) [hartree]
    v: np.ndarray  # (2n, 2n, 2n, 2n), physicists' <pq|rs> [hartree]
    constant: float  # nuclear repulsion [hartree]

    @property
    def n_spin_orbitals(self) -> int:
        return self.h.shape[0]


def symmetric_orthogonalizer(overlap: np.ndarray) -> np.ndarray:
    """X = S^(-1/2) via the spectral decomposition of S."""
    eigvals, eigvecs = np.linalg.eigh(overlap)
    if eigvals[0] < 1e-8:
        raise DegenerateBasisError(
            f"overlap matrix nearly singular (smallest eigenvalue {eigvals[0]:.3e})"
        )
    return (eigvecs / np.sqrt(eigvals)) @ eigvecs.T


def _fock_matrix(core: np.ndarray, eri: np.ndarray, density: np.ndarray) -> np.ndarray:
    coulomb = np.einsum("ls,uvls->uv", density, eri)
    exchange = np.einsum("ls,ulsv->uv", density, eri)
    return core + coulomb - 0.5 * exchange


def run_rhf(
    integrals: MolecularIntegrals,
    n_electrons: int = 4,
    *,
    max_iter: int = 500,
    density_tolerance: float = 1e-10,
    diis_depth: int = 8,
    damping: float = 0.5,
) -> RhfSolution:
    """Solve the closed-shell SCF equations.

    Stage one is Roothaan iteration with depth-limited DIIS; when the DIIS
    system is too ill-conditioned to extrapolate, the density step is damped
    linearly instead.  Stretched chains can lock the fixed-point map into a
    period-2 density oscillation that no amount of damping breaks, so when
    stage one stalls a second-order minimization over occupied-virtual
    orbital rotations restarts from the core guess and walks downhill to the
    stationary density.  The converged Fock matrix is diagonalized once at
    the end so the returned orbitals are canonical (energies ascending) and
    verified to reproduce the converged density by aufbau filling.

    Raises ScfConvergenceError (carrying the last iterate) when neither
    stage reaches density_tolerance within max_iter total iterations.
    """
    if n_electrons % 2 != 0:
        raise ValueError(f"restricted HF needs an even electron count, got {n_electrons}")
    n_occ = n_electrons // 2
    n = integrals.n_orbitals
    if n_occ > n:
        raise ValueError(f"{n_electrons} electrons do not fit in {n} spatial orbitals")

    overlap = integrals.overlap
    core = integrals.core_hamiltonian
    eri = integrals.eri
    ortho = symmetric_orthogonalizer(overlap)

    def diagonalize(fock):
        f_ortho = ortho.T @ fock @ ortho
        energies, vecs = np.linalg.eigh(f_ortho)
        return energies, ortho @ vecs

    def density_of(coeffs):
        return 2.0 * coeffs[:, :n_occ] @ coeffs[:, :n_occ].T

    # Core guess.
    _, coeffs = diagonalize(core)
    density = density_of(coeffs)

    fock_history: list[np.ndarray] = []
    error_history: list[np.ndarray] = []
    converged = False
    iterations = 0
    rms = np.inf
    best_rms = np.inf
    best_iteration = 0

    for iterations in range(1, max_iter + 1):
        fock = _fock_matrix(core, eri, density)

        # DIIS residual in the orthogonal basis (scale-invariant).
        residual = ortho.T @ (fock @ density @ overlap - overlap @ density @ fock) @ ortho
        fock_history.append(fock)
        error_history.append(residual)
        if len(fock_history) > diis_depth:
            fock_history.pop(0)
            error_history.pop(0)

        fock_eff = _diis_extrapolate(fock_history, error_history) if len(fock_history) >= 2 else None
        if fock_eff is not None:
            _, coeffs = diagonalize(fock_eff)
            density_new = density_of(coeffs)
        else:
            _, coeffs = diagonalize(fock)
            density_new = density_of(coeffs)
            if len(fock_history) >= 2:
                # Extrapolation unavailable: damp the density step instead.
                density_new = damping * density_new + (1.0 - damping) * density

        rms = float(np.sqrt(np.mean((density_new - density) ** 2)))
        density = density_new
        if rms < density_tolerance:
            converged = True
            break
        if rms < 0.9 * best_rms:
            best_rms = rms
            best_iteration = iterations
        elif iterations - best_iteration >= 30:
            # No real progress for 30 iterations: the map is oscillating.
            break

    if not converged and iterations < max_iter:
        coeffs, extra, newton_ok = _minimize_rhf(
            core,
            eri,
            overlap,
            ortho,
            n_occ,
            gradient_tolerance=min(1e-11, density_tolerance),
            max_newton=max_iter - iterations,
        )
        iterations += extra
        if newton_ok:
            density = density_of(coeffs)
            converged = True

    # Canonicalize: orbitals and energies of the final (true) Fock matrix.
    fock = _fock_matrix(core, eri, density)
    electronic = 0.5 * float(np.sum(density * (core + fock)))
    energies, coeffs = diagonalize(fock)
    solution = RhfSolution(
        mo_coefficients=coeffs,
        orbital_energies=energies,
        electronic_energy=electronic,
        total_energy=electronic + integrals.nuclear_repulsion,
        iterations=iterations,
        converged=converged,
    )
    if not converged:
        raise ScfConvergenceError(
            f"SCF not converged after {iterations} iterations (density RMS {rms:.3e})",
            last=solution,
        )
    aufbau_rms = float(np.sqrt(np.mean((density_of(coeffs) - density) ** 2)))
    if aufbau_rms > max(1e-8, 100.0 * density_tolerance):
        raise ScfConvergenceError(
            f"SCF reached a non-aufbau stationary point (refill density RMS {aufbau_rms:.3e})",
            last=solution,
        )
    return solution


def _diis_extrapolate(focks, errors):
    """Pulay mixing over the newest subset with a well-conditioned B matrix.

    The raw B matrix spans ~20 orders of magnitude near convergence, so the
    residual block is normalized by its largest diagonal before testing the
    condition number (the weights are unchanged by that scaling).  Oldest
    vectors are dropped until the system is solvable; returns None when even
    the two newest do not qualify.
    """
    for m in range(len(focks), 1, -1):
        err = errors[-m:]
        b = np.empty((m + 1, m + 1))
        b[-1, :] = -1.0
        b[:, -1] = -1.0
        b[-1, -1] = 0.0
        for i in range(m):
            for j in range(i, m):
                b[i, j] = b[j, i] = float(np.sum(err[i] * err[j]))
        scale = float(np.max(np.abs(np.diag(b)[:m])))
        if scale <= 0.0:
            return focks[-1]
        b[:m, :m] /= scale
        try:
            if np.linalg.cond(b) > 1e10:
                continue
            rhs = np.zeros(m + 1)
            rhs[-1] = -1.0
            weights = np.linalg.solve(b, rhs)[:m]
        except np.linalg.LinAlgError:
            continue
        mixed = np.zeros_like(focks[0])
        for w, f in zip(weights, focks[-m:]):
            mixed += w * f
        return mixed
    return None


def _expm_antisymmetric(k: np.ndarray) -> np.ndarray:
    """exp(k) by Taylor series; k is small (step-capped) and antisymmetric."""
    out = np.eye(k.shape[0])
    term = np.eye(k.shape[0])
    for i in range(1, 24):
        term = term @ k / i
        out = out + term
    return out


def _minimize_rhf(core, eri, overlap, ortho, n_occ, *, gradient_tolerance, max_newton):
    """Direct RHF energy minimization over occupied-virtual rotations.

    Starts from the core guess and applies Newton steps in the rotation
    parameters kappa, with the Hessian from central finite differences of
    the analytic gradient g_ai = 4 F_ai.  Hessian eigenvalues are clamped
    in absolute value so the walk escapes saddle points (the period-2
    oscillation of the Roothaan map circles exactly such a point), and the
    step is norm-capped and backtracked until it lowers the energy or the
    gradient.  Returns (coefficients, iterations_used, converged).
    """
    n = core.shape[0]
    n_virt = n - n_occ
    dim = n_virt * n_occ

    def energy_grad(c):
        d = 2.0 * c[:, :n_occ] @ c[:, :n_occ].T
        f = _fock_matrix(core, eri, d)
        e = 0.5 * float(np.sum(d * (core + f)))
        g = 4.0 * (c.T @ f @ c)[n_occ:, :n_occ]
        return e, g

    def rotate(c, kappa):
        k = np.zeros((n, n))
        k[n_occ:, :n_occ] = kappa
        k[:n_occ, n_occ:] = -kappa.T
        c_new = c @ _expm_antisymmetric(k)
        # Re-orthonormalize against S to stop truncation drift compounding.
        m = c_new.T @ overlap @ c_new
        w, u = np.linalg.eigh(m)
        return c_new @ (u / np.sqrt(w)) @ u.T

    core_energies, core_vecs = np.linalg.eigh(ortho.T @ core @ ortho)
    c = ortho @ core_vecs
    energy, grad = energy_grad(c)

    for it in range(1, max_newton + 1):
        gmax = float(np.max(np.abs(grad)))
        if gmax < gradient_tolerance:
            return c, it - 1, True
        eps = 1e-5
        hess = np.zeros((dim, dim))
        for index in range(dim):
            kv = np.zeros(dim)
            kv[index] = eps
            _, gp = energy_grad(rotate(c, kv.reshape(n_virt, n_occ)))
            kv[index] = -eps
            _, gm = energy_grad(rotate(c, kv.reshape(n_virt, n_occ)))
            hess[:, index] = (gp - gm).reshape(dim) / (2.0 * eps)
        hess = 0.5 * (hess + hess.T)
        evals, evecs = np.linalg.eigh(hess)
        clamped = np.maximum(np.abs(evals), 1e-3)
        step = -(evecs @ ((evecs.T @ grad.reshape(dim)) / clamped))
        norm = float(np.linalg.norm(step))
        if norm > 0.5:
            step *= 0.5 / norm
        scale = 1.0
        accepted = False
        for _ in range(40):
            c_try = rotate(c, (scale * step).reshape(n_virt, n_occ))
            e_try, g_try = energy_grad(c_try)
            if e_try < energy + 1e-12 and (e_try < energy or float(np.max(np.abs(g_try))) < gmax):
                c, energy, grad = c_try, e_try, g_try
                accepted = True
                break
            scale *= 0.5
        if not accepted:
            return c, it, False
    return c, max_newton, float(np.max(np.abs(grad))) < gradient_tolerance


def scf_commutator_norm(integrals: MolecularIntegrals, solution: RhfSolution, n_electrons: int = 4) -> float:
    """Max-abs of FDS - SDF at the solution; small iff stationary."""
    n_occ = n_electrons // 2
    coeffs = solution.mo_coefficients
    density = 2.0 * coeffs[:, :n_occ] @ coeffs[:, :n_occ].T
    fock = _fock_matrix(integrals.core_hamiltonian, integrals.eri, density)
    overlap = integrals.overlap
    return float(np.max(np.abs(fock @ density @ overlap - overlap @ density @ fock)))


def mo_transform(integrals: MolecularIntegrals, coeffs: np.ndarray):
    """AO -> MO transform: returns (h_spatial, eri_mo) in chemists' notation."""
    h_spatial = coeffs.T @ integrals.core_hamiltonian @ coeffs
    eri_mo = np.einsum("up,uvls->pvls", coeffs, integrals.eri, optimize=True)
    eri_mo = np.einsum("vq,pvls->pqls", coeffs, eri_mo, optimize=True)
    eri_mo = np.einsum("lr,pqls->pqrs", coeffs, eri_mo, optimize=True)
    eri_mo = np.einsum("st,pqrs->pqrt", coeffs, eri_mo, optimize=True)
    return h_spatial, eri_mo


def spin_orbitalize(
    h_spatial: np.ndarray,
    eri_mo: np.ndarray,
    constant: float = 0.0,
    ordering: str = "interleaved",
) -> SpinOrbitalHamiltonian:
    """Expand spatial MO integrals to spin orbitals.

    With the default interleaved ordering, spin orbital p maps to spatial
    p // 2 with spin p % 2, so |11110000> is the closed-shell determinant.
    "blocked" (all alpha then all beta) is kept as an explicit alternative;
    under it that bit string would be a spin-polarized state instead.  The
    two-body tensor is converted to physicists' notation:
    <pq|rs> = (pr|qs) on matching spins.
    """
    n_spatial = h_spatial.shape[0]
    n_so = 2 * n_spatial
    if ordering == "interleaved":
        spat = np.arange(n_so) // 2
        spin = np.arange(n_so) % 2
    elif ordering == "blocked":
        spat = np.arange(n_so) % n_spatial
        spin = np.arange(n_so) // n_spatial
    else:
        raise ValueError(f"unknown spin-orbital ordering {ordering!r}")

    h = np.zeros((n_so, n_so))
    same_spin = spin[:, None] == spin[None, :]
    h[same_spin] = h_spatial[spat[:, None], spat[None, :]][same_spin]

    v = eri_mo[
        spat[:, None, None, None],
        spat[None, None, :, None],
        spat[None, :, None, None],
        spat[None, None, None, :],
    ]
    mask = (spin[:, None, None, None] == spin[None, None, :, None]) & (
        spin[None, :, None, None] == spin[None, None, None, :]
    )
    v = np.where(mask, v, 0.0)
    return SpinOrbitalHamiltonian(h=h, v=v, constant=float(constant))
