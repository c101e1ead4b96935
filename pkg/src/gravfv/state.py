"""Primitive and conserved fluid states, plus the scaled face variables.

State arrays carry the variable index first: primitive [rho, u(, v), p],
conserved [rho, mom_x(, mom_y), E].  E is internal plus kinetic energy;
gravitational potential energy is not part of the conserved state.
"""

import numpy as np

from .errors import UnphysicalState


def _first_bad(ok):
    idx = np.argwhere(~np.asarray(ok))
    if idx.size == 0:
        return "?"
    j = tuple(int(k) for k in idx[0])
    return j[0] if len(j) == 1 else j


def prim_to_cons(v, eos):
    """Conserved [rho, momentum, E] from primitive [rho, velocities, p]."""
    v = np.asarray(v, dtype=float)
    rho, p = v[0], v[-1]
    T = eos.temperature(rho, p)
    q = np.empty_like(v)
    q[0] = rho
    q[1:-1] = rho * v[1:-1]
    q[-1] = eos.internal_energy(rho, T) + 0.5 * rho * np.sum(v[1:-1] ** 2, axis=0)
    return q


def cons_to_prim(q, eos):
    """Primitive [rho, velocities, p] from conserved [rho, momentum, E].

    Raises UnphysicalState (with the offending cell index) when density,
    internal energy or recovered pressure is non-positive.
    """
    q = np.asarray(q, dtype=float)
    rho = q[0]
    ok = rho > 0.0
    if not np.all(ok):
        raise UnphysicalState(f"non-positive density at cell {_first_bad(ok)}")
    vel = q[1:-1] / rho
    eint = q[-1] - 0.5 * rho * np.sum(vel**2, axis=0)
    ok = eint > 0.0
    if not np.all(ok):
        raise UnphysicalState(f"non-positive internal energy at cell {_first_bad(ok)}")
    p = eos.pressure_from_internal_energy(rho, eint)
    ok = p > 0.0
    if not np.all(ok):
        raise UnphysicalState(f"non-positive pressure at cell {_first_bad(ok)}")
    v = np.empty_like(q)
    v[0] = rho
    v[1:-1] = vel
    v[-1] = p
    return v


def to_w(v, psi):
    """Face-relative variables: scale rho and p by exp(-psi), keep velocities."""
    v = np.asarray(v, dtype=float)
    w = np.array(v, copy=True)
    scale = np.exp(-np.asarray(psi, dtype=float))
    w[0] = v[0] * scale
    w[-1] = v[-1] * scale
    return w


def from_w(w, psi):
    """Invert to_w by dividing out the identical exp(-psi) factor.

    Using the same factor keeps the round trip exact to the last unit in
    the last place (and bit-exact for psi = 0).
    """
    w = np.asarray(w, dtype=float)
    v = np.array(w, copy=True)
    scale = np.exp(-np.asarray(psi, dtype=float))
    v[0] = w[0] / scale
    v[-1] = w[-1] / scale
    return v
