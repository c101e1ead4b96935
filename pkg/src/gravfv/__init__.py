"""Finite-volume Euler solver with well-balanced gravity source terms."""

from .cases import (Case, build_case, case_names, convergence_table,
                    equilibrium_profile, error_norms, potential_temperature)
from .eos import IdealGas, IdealGasRadiation, VanDerWaals, make_eos
from .errors import (ConfigError, EquilibriumConstructionError,
                     InvalidThermodynamicState, InversionFailure,
                     LossOfHyperbolicity, SolverError, UnphysicalState)
from .gravity import (Potential, constant, constant_g_y, linear,
                      make_potential, potential_from_csv, quadratic, radial,
                      sine)
from .hydrostatic import (HydrostaticProfile, discrete_hydrostatic,
                          isothermal_profile, linearized_euler_1d,
                          ode_reference, polytropic_profile,
                          recurrence_residual)
from .solver1d import Grid1D, Simulation1D, SolverConfig
from .solver2d import Grid2D, Simulation2D

__version__ = "0.1.0"

__all__ = [
    "Case", "ConfigError", "EquilibriumConstructionError", "Grid1D", "Grid2D",
    "HydrostaticProfile", "IdealGas", "IdealGasRadiation",
    "InvalidThermodynamicState", "InversionFailure", "LossOfHyperbolicity",
    "Potential", "Simulation1D", "Simulation2D", "SolverConfig", "SolverError",
    "UnphysicalState", "VanDerWaals", "build_case", "case_names", "constant",
    "constant_g_y", "convergence_table", "discrete_hydrostatic",
    "equilibrium_profile", "error_norms", "isothermal_profile",
    "linear", "linearized_euler_1d", "make_eos", "make_potential",
    "ode_reference", "polytropic_profile", "potential_from_csv",
    "potential_temperature", "quadratic", "radial", "recurrence_residual",
    "sine",
]
