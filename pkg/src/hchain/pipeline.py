"""Assembly line from a geometry parameter to a qubit Hamiltonian.

build_chain_system(r) runs the whole stack for the four-atom chain:
positions -> STO-3G integrals -> restricted Hartree-Fock -> MO transform ->
spin orbitals -> Jordan-Wigner Pauli sum.  The eigensystem is computed
lazily and cached since only spectral routes need it.
"""

from dataclasses import dataclass, field

import numpy as np

from . import dynamics, geometry, integrals, observables, pauli, scf


@dataclass
class ChainSystem:
    """Everything downstream code needs about one nuclear configuration."""

    r: float
    chain: geometry.ChainGeometry | integrals.AtomArrangement
    mol: integrals.MolecularIntegrals
    rhf: scf.RhfSolution
    hamiltonian: scf.SpinOrbitalHamiltonian
    qubit_hamiltonian: pauli.PauliSum
    _eig: dynamics.EigenSystem | None = field(default=None, repr=False)

    @property
    def n_qubits(self) -> int:
        return self.qubit_hamiltonian.n_qubits

    @property
    def n_electrons(self) -> int:
        return int(round(np.sum(self.chain.charges)))

    def eigensystem(self) -> dynamics.EigenSystem:
        if self._eig is None:
            matrix = dynamics.dense_matrix(self.qubit_hamiltonian)
            self._eig = dynamics.eigendecompose(matrix)
        return self._eig

    def initial_state(self) -> np.ndarray:
        """Hartree-Fock determinant: lowest spin orbitals occupied."""
        return observables.prepare_initial_state(self.n_qubits, self.n_electrons)

    def exact_evolver(self) -> dynamics.ExactEvolver:
        return dynamics.ExactEvolver(self.eigensystem())

    def trotter_evolver(self, steps_per_unit_time: float = 64.0) -> dynamics.TrotterEvolver:
        return dynamics.TrotterEvolver(self.qubit_hamiltonian, steps_per_unit_time)


def _assemble(chain, mol: integrals.MolecularIntegrals, n_electrons: int, r: float,
              *, scf_max_iter=500, scf_tol=1e-10, prune_tol=pauli.DEFAULT_PRUNE_TOL) -> ChainSystem:
    solution = scf.run_rhf(
        mol, n_electrons=n_electrons, max_iter=scf_max_iter, density_tolerance=scf_tol
    )
    h_mo, eri_mo = scf.mo_transform(mol, solution.mo_coefficients)
    hamiltonian = scf.spin_orbitalize(h_mo, eri_mo, constant=mol.nuclear_repulsion)
    qubit_hamiltonian = pauli.jw_map_hamiltonian(hamiltonian, prune_tol=prune_tol)
    return ChainSystem(
        r=r,
        chain=chain,
        mol=mol,
        rhf=solution,
        hamiltonian=hamiltonian,
        qubit_hamiltonian=qubit_hamiltonian,
    )


def build_chain_system(r: float, **options) -> ChainSystem:
    """Full pipeline for the four-atom chain at displacement r (bohr)."""
    chain = geometry.chain_positions(r)
    mol = integrals.build_integrals(chain)
    return _assemble(chain, mol, n_electrons=4, r=r, **options)


def build_hydrogen_system(bond_length: float, **options) -> ChainSystem:
    """Same pipeline for an H2 molecule, used as a small reference system."""
    arrangement = integrals.hydrogens_at(np.array([0.0, bond_length]))
    mol = integrals.build_integrals(arrangement)
    return _assemble(arrangement, mol, n_electrons=2, r=bond_length, **options)
