"""Operator spreading in a minimal-basis hydrogen chain.

The package computes STO-3G electronic structure for a 4-atom hydrogen
chain, maps the second-quantized Hamiltonian to 8 qubits via Jordan-Wigner,
and simulates out-of-time-order correlators, fidelity and entanglement
entropy under exact and Trotterized time evolution.
"""

from .dynamics import EigenSystem, ExactEvolver, TrotterEvolver, dense_matrix, eigendecompose
from .errors import (
    ConfigError,
    ConsistencyError,
    DegenerateBasisError,
    HchainError,
    ScfConvergenceError,
)
from .geometry import CHAIN_SPACING, ChainGeometry, chain_positions, r_grid
from .integrals import MolecularIntegrals, build_integrals
from .kernels import BACKEND as KERNEL_BACKEND
from .observables import (
    OverlapSpectrum,
    ReducedDensityMatrix,
    eigen_overlaps,
    fidelity,
    local_rotation,
    mean_energy,
    otoc_eigenbasis,
    otoc_protocol,
    participation_ratio,
    prepare_initial_state,
    reduced_density_matrix,
    von_neumann_entropy,
)
from .pauli import PauliSum, PauliTerm, jw_map_hamiltonian
from .pipeline import ChainSystem, build_chain_system, build_hydrogen_system
from .scf import RhfSolution, SpinOrbitalHamiltonian, run_rhf

__version__ = "0.1.0"

__all__ = [
    "CHAIN_SPACING",
    "ChainGeometry",
    "ChainSystem",
    "ConfigError",
    "ConsistencyError",
    "DegenerateBasisError",
    "EigenSystem",
    "ExactEvolver",
    "HchainError",
    "KERNEL_BACKEND",
    "MolecularIntegrals",
    "OverlapSpectrum",
    "PauliSum",
    "PauliTerm",
    "ReducedDensityMatrix",
    "RhfSolution",
    "ScfConvergenceError",
    "SpinOrbitalHamiltonian",
    "TrotterEvolver",
    "build_chain_system",
    "build_hydrogen_system",
    "build_integrals",
    "chain_positions",
    "dense_matrix",
    "eigen_overlaps",
    "eigendecompose",
    "fidelity",
    "jw_map_hamiltonian",
    "local_rotation",
    "mean_energy",
    "otoc_eigenbasis",
    "otoc_protocol",
    "participation_ratio",
    "prepare_initial_state",
    "r_grid",
    "reduced_density_matrix",
    "run_rhf",
    "von_neumann_entropy",
    "__version__",
]
