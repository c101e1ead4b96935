"""Exception types shared across the solver."""


class SolverError(Exception):
    """Base class for every error raised by this package."""


class InvalidThermodynamicState(SolverError):
    """A thermodynamic input lies outside the domain of the equation of state."""


class InversionFailure(SolverError):
    """An iterative thermodynamic inversion did not converge."""


class UnphysicalState(SolverError):
    """A fluid state with non-positive density, internal energy or pressure."""


class LossOfHyperbolicity(SolverError):
    """The sound-speed radicand is non-positive."""


class EquilibriumConstructionError(SolverError):
    """Hydrostatic equilibrium marching failed to produce a valid state."""


class ConfigError(SolverError):
    """Inconsistent or unsupported run configuration."""
