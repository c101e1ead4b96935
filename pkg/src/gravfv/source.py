"""Gravity source terms.

The well-balanced source evaluates the difference of local hydrostatic
face pressures, which cancels the flux gradient exactly on discrete
equilibria and is second-order consistent with -rho*phi' on smooth data.
The central-difference comparator is deliberately not well balanced.
"""

import numpy as np

from .gravity import hydrostatic_face_pressures


def wb_source_1d(p, theta, u, phi_m1, phi_0, phi_p1, dx):
    """Well-balanced momentum and energy sources for one row of cells."""
    pbar_plus, pbar_minus = hydrostatic_face_pressures(p, theta, phi_m1, phi_0, phi_p1)
    s = (pbar_plus - pbar_minus) / dx
    return s, s * np.asarray(u, dtype=float)


def nwb_source_1d(rho, u, phi_m1, phi_p1, dx):
    """Central-difference comparator: s = -rho*(phi_{i+1}-phi_{i-1})/(2*dx)."""
    s = -np.asarray(rho, dtype=float) * (
        np.asarray(phi_p1, dtype=float) - np.asarray(phi_m1, dtype=float)
    ) / (2.0 * dx)
    return s, s * np.asarray(u, dtype=float)
