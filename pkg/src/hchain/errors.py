"""Exception types shared across the package."""


class HchainError(Exception):
    """Base class for package-specific failures."""


class DegenerateBasisError(HchainError):
    """The AO overlap matrix is numerically singular (pathological geometry)."""


class ScfConvergenceError(HchainError):
    """SCF did not converge within the iteration budget.

    Carries the last iterate so callers can inspect it or retry with damping.
    """

    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last


class ConsistencyError(HchainError):
    """An internal cross-check failed (e.g. Hermiticity residue after collection)."""


class ConfigError(HchainError):
    """Invalid run configuration (bad flag value, config-file key, or combination)."""
