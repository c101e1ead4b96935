"""Hydrostatic equilibria: discrete generator, ODE reference, acoustics oracle.

The discrete generator marches the scheme's own equilibrium recurrence

    p_i = p_{i-1} * exp(-(phi_i - phi_{i-1}) * (1/theta_{i-1} + 1/theta_i) / 2)

point by point with a safeguarded Newton solve, so the resulting profile
is stationary for the well-balanced scheme up to round-off.  The ODE
reference integrates the continuous balance dp/dx = -rho*phi' with RK4 on
a refined subgrid (closed forms are substituted for ideal-gas isothermal
and polytropic stratifications).  The linearized oracle propagates small
perturbations of a hydrostatic base state with central differences + RK4.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EquilibriumConstructionError, InversionFailure
from .eos import solve_increasing

NEWTON_TOL = 1e-13
NEWTON_MAXITER = 50


@dataclass
class HydrostaticProfile:
    """Pointwise hydrostatic state and how it was produced."""

    x: np.ndarray
    rho: np.ndarray
    p: np.ndarray
    T: np.ndarray
    provenance: str = "unknown"

    @property
    def theta(self):
        return self.p / self.rho


def _temperature_values(temperature, x):
    if callable(temperature):
        return np.asarray(temperature(x), dtype=float) * np.ones_like(x)
    return np.asarray(temperature, dtype=float) * np.ones_like(x)


def _anchor_state(eos, T_a, pressure, density):
    if (pressure is None) == (density is None):
        raise ConfigError("anchor needs exactly one of pressure or density")
    if pressure is not None:
        p_a = float(pressure)
        rho_a = float(eos.density_from_pT(p_a, T_a))
    else:
        rho_a = float(density)
        p_a = float(eos.pressure(rho_a, T_a))
    return rho_a, p_a


def _march_step(eos, p_prev, theta_prev, dphi, T_i, x0, index):
    """Solve the recurrence for the next point; x0 is the previous unknown."""
    K = 0.5 * float(dphi)
    inv_prev = 1.0 / theta_prev
    if eos.theta_arg == "p":
        def theta_of(x):
            return eos.theta(T_i, p=x)

        def value(x):
            return x

        def dvalue(x):
            return 1.0
    else:
        def theta_of(x):
            return eos.theta(T_i, rho=x)

        def value(x):
            return x * theta_of(x)

        def dvalue(x):
            return eos.dpressure_drho(x, T_i)

    def f(x):
        return value(x) - p_prev * np.exp(-K * (inv_prev + 1.0 / theta_of(x)))

    def df(x):
        th = theta_of(x)
        return dvalue(x) - p_prev * np.exp(-K * (inv_prev + 1.0 / th)) * K * eos.dtheta(x, T_i) / th**2

    lo, hi = 0.5 * x0, 2.0 * x0
    if eos.theta_arg == "rho":
        hi = min(hi, eos.rho_max * (1.0 - 1e-12))
    for _ in range(60):
        if f(lo) <= 0.0:
            break
        lo *= 0.5
    for _ in range(60):
        if f(hi) >= 0.0:
            break
        hi = min(2.0 * hi, eos.rho_max * (1.0 - 1e-12)) if eos.theta_arg == "rho" else 2.0 * hi
    try:
        x = float(
            solve_increasing(f, df, x0, lo, hi, "hydrostatic marching",
                             tol=NEWTON_TOL, maxiter=NEWTON_MAXITER)
        )
    except InversionFailure as exc:
        raise EquilibriumConstructionError(f"no convergence at point {index}: {exc}") from exc
    th = float(theta_of(x))
    if eos.theta_arg == "p":
        p_i, rho_i = x, x / th
    else:
        rho_i, p_i = x, x * th
    if not (rho_i > 0.0 and p_i > 0.0):
        raise EquilibriumConstructionError(f"unphysical state at point {index}")
    return rho_i, p_i, th


def discrete_hydrostatic(eos, x, phi, temperature, anchor_index=0,
                         pressure=None, density=None):
    """Discretely well-balanced equilibrium on the given points.

    phi holds the nodal potential at the points, temperature a scalar or
    per-point array; the anchor state (one of pressure/density) is applied
    at anchor_index and the recurrence is marched in both directions.
    """
    x = np.asarray(x, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if x.shape != phi.shape or x.ndim != 1:
        raise ConfigError("x and phi must be matching 1-D arrays")
    n = x.size
    if not 0 <= anchor_index < n:
        raise ConfigError("anchor_index out of range")
    T = _temperature_values(temperature, x)
    rho = np.empty(n)
    p = np.empty(n)
    rho[anchor_index], p[anchor_index] = _anchor_state(
        eos, T[anchor_index], pressure, density
    )
    theta_prev = p[anchor_index] / rho[anchor_index]
    prev_unknown = p[anchor_index] if eos.theta_arg == "p" else rho[anchor_index]
    for i in range(anchor_index + 1, n):
        rho[i], p[i], th = _march_step(
            eos, p[i - 1], theta_prev, phi[i] - phi[i - 1], T[i], prev_unknown, i
        )
        theta_prev = th
        prev_unknown = p[i] if eos.theta_arg == "p" else rho[i]
    theta_prev = p[anchor_index] / rho[anchor_index]
    prev_unknown = p[anchor_index] if eos.theta_arg == "p" else rho[anchor_index]
    for i in range(anchor_index - 1, -1, -1):
        rho[i], p[i], th = _march_step(
            eos, p[i + 1], theta_prev, phi[i] - phi[i + 1], T[i], prev_unknown, i
        )
        theta_prev = th
        prev_unknown = p[i] if eos.theta_arg == "p" else rho[i]
    return HydrostaticProfile(x, rho, p, T, provenance="discrete_newton")


def recurrence_residual(profile, phi):
    """Relative residual of the discrete equilibrium recurrence."""
    theta = profile.theta
    dphi = np.asarray(phi, dtype=float)[1:] - np.asarray(phi, dtype=float)[:-1]
    rhs = profile.p[:-1] * np.exp(-0.5 * dphi * (1.0 / theta[:-1] + 1.0 / theta[1:]))
    return np.abs(profile.p[1:] - rhs) / np.abs(profile.p[1:])


def isothermal_profile(eos, x, phi, T0, anchor_index=0, pressure=None, density=None):
    """Closed-form isothermal equilibrium of an ideal gas: p ~ exp(-phi/(R*T0))."""
    x = np.asarray(x, dtype=float)
    phi = np.asarray(phi, dtype=float)
    rho_a, p_a = _anchor_state(eos, T0, pressure, density)
    fac = np.exp(-(phi - phi[anchor_index]) / (eos.R * T0))
    T = np.full_like(x, float(T0))
    return HydrostaticProfile(x, rho_a * fac, p_a * fac, T, provenance="closed_form")


def polytropic_profile(eos, x, phi, nu, anchor_index=0, pressure=None, density=None,
                       T0=None):
    """Closed-form polytropic equilibrium p = K*rho^nu of an ideal gas.

    T(x) = T_a - (nu-1)/(nu*R) * (phi - phi_a); rho and p follow as powers
    of T/T_a.
    """
    if nu <= 1.0:
        raise ConfigError("polytropic exponent nu must exceed 1")
    x = np.asarray(x, dtype=float)
    phi = np.asarray(phi, dtype=float)
    T_a = float(T0) if T0 is not None else 1.0
    rho_a, p_a = _anchor_state(eos, T_a, pressure, density)
    T = T_a - (nu - 1.0) / (nu * eos.R) * (phi - phi[anchor_index])
    if not np.all(T > 0.0):
        raise EquilibriumConstructionError("polytropic temperature hits zero")
    ratio = T / T_a
    rho = rho_a * ratio ** (1.0 / (nu - 1.0))
    p = p_a * ratio ** (nu / (nu - 1.0))
    return HydrostaticProfile(x, rho, p, T, provenance="closed_form")


def ode_reference(eos, potential, x, temperature, anchor_index=0,
                  pressure=None, density=None, refinement=10, assume=None):
    """High-accuracy hydrostatic reference by RK4 on a refined subgrid.

    potential must provide an analytic gradient.  temperature is a scalar
    (isothermal) or a callable T(x).  refinement sub-steps are taken per
    output interval (>= 8).  assume='isothermal' or ('polytropic', nu)
    short-circuits to the ideal-gas closed forms.
    """
    x = np.asarray(x, dtype=float)
    if assume is not None:
        phi = np.asarray(potential(x), dtype=float)
        if assume == "isothermal":
            prof = isothermal_profile(eos, x, phi, float(temperature),
                                      anchor_index, pressure, density)
        else:
            kind, nu = assume
            if kind != "polytropic":
                raise ConfigError(f"unknown closed form: {assume!r}")
            prof = polytropic_profile(eos, x, phi, float(nu), anchor_index,
                                      pressure, density, T0=float(temperature)
                                      if np.ndim(temperature) == 0 else None)
        prof.provenance = "ode_reference"
        return prof
    refinement = int(refinement)
    if refinement < 8:
        raise ConfigError("ode_reference needs refinement >= 8")

    if callable(temperature):
        T_of = lambda s: float(temperature(s))

        def dT_of(s, h):
            return (T_of(s + h) - T_of(s - h)) / (2.0 * h)
    else:
        T_const = float(temperature)
        T_of = lambda s: T_const
        dT_of = lambda s, h: 0.0

    kind = eos.theta_arg

    def rhs(s, y, h):
        dphi = float(potential.grad(s))
        T = T_of(s)
        if kind == "p":
            th = float(eos.theta(T, p=y))
            return -y * dphi / th
        dpdrho = float(eos.dpressure_drho(y, T))
        dpdT = float(eos.dpressure_dT(y, T))
        return (-y * dphi - dpdT * dT_of(s, h)) / dpdrho

    T_anchor = T_of(float(x[anchor_index]))
    rho_a, p_a = _anchor_state(eos, T_anchor, pressure, density)
    y0 = p_a if kind == "p" else rho_a
    n = x.size
    y = np.empty(n)
    y[anchor_index] = y0

    def integrate(i_from, i_to):
        yi = y[i_from]
        h = (x[i_to] - x[i_from]) / refinement
        s = float(x[i_from])
        for _ in range(refinement):
            scale = abs(h)
            k1 = rhs(s, yi, scale)
            k2 = rhs(s + 0.5 * h, yi + 0.5 * h * k1, scale)
            k3 = rhs(s + 0.5 * h, yi + 0.5 * h * k2, scale)
            k4 = rhs(s + h, yi + h * k3, scale)
            yi = yi + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
            s += h
        y[i_to] = yi

    for i in range(anchor_index, n - 1):
        integrate(i, i + 1)
    for i in range(anchor_index, 0, -1):
        integrate(i, i - 1)

    T = np.array([T_of(float(s)) for s in x])
    if kind == "p":
        p = y
        rho = np.asarray(eos.density_from_pT(p, T), dtype=float)
    else:
        rho = y
        p = np.asarray(eos.pressure(rho, T), dtype=float)
    return HydrostaticProfile(x, rho, p, T, provenance="ode_reference")


def linearized_euler_1d(eos, potential, base, dp0, t_final, cfl=0.4,
                        bc="extrapolate"):
    """Linearized Euler evolution of a pressure perturbation on a base state.

    base is a HydrostaticProfile on uniformly spaced cell centers; dp0 the
    initial pressure perturbation (drho0 = du0 = 0).  Central second-order
    differences in space, classical RK4 in time.  Returns (drho, du, dp)
    at t_final.
    """
    x = base.x
    dx = x[1] - x[0]
    rho_b = base.rho
    c2 = np.asarray(eos.sound_speed(rho_b, base.p), dtype=float) ** 2
    dphi = np.asarray(potential.grad(x), dtype=float)
    n = x.size

    def pad(a):
        if bc == "periodic":
            return np.concatenate(([a[-1]], a, [a[0]]))
        if bc == "extrapolate":
            return np.concatenate(([a[0]], a, [a[-1]]))
        raise ConfigError(f"unknown oracle boundary treatment: {bc!r}")

    def ddx(a):
        ae = pad(a)
        return (ae[2:] - ae[:-2]) / (2.0 * dx)

    def rhs(y):
        drho, du, dp = y
        flux_u = ddx(rho_b * du)
        return np.array([
            -flux_u,
            -(ddx(dp) + dphi * drho) / rho_b,
            -rho_b * c2 * ddx(du) + rho_b * dphi * du,
        ])

    y = np.array([np.zeros(n), np.zeros(n), np.asarray(dp0, dtype=float)])
    cmax = float(np.max(np.sqrt(c2)))
    dt0 = cfl * dx / cmax
    t = 0.0
    while t < t_final - 1e-14 * max(1.0, t_final):
        dt = min(dt0, t_final - t)
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * dt * k1)
        k3 = rhs(y + 0.5 * dt * k2)
        k4 = rhs(y + dt * k3)
        y = y + dt * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        t += dt
    return y[0], y[1], y[2]
