"""Registry of benchmark problems for the well-balanced gravity solver.

Each case builder returns a configured simulation together with its
initial data, the unperturbed background state (when one exists), an
exact solution (when one is known) and per-case diagnostics.  Error
norms are cell-size-weighted averages so that machine-precision
equilibrium errors read directly as per-cell round-off levels.
"""

from dataclasses import dataclass

import numpy as np

from . import hydrostatic
from .eos import IdealGas, VanDerWaals
from .errors import ConfigError
from .gravity import constant_g_y, linear, quadratic, radial, sine
from .hydrostatic import HydrostaticProfile
from .solver1d import Grid1D, Simulation1D, SolverConfig
from .solver2d import Grid2D, Simulation2D

R_AIR = 287.058  # J/(kg K)
G_STD = 9.8      # m/s^2


# -- norms -----------------------------------------------------------------

def error_norms(field, reference, which="l1", weights=None):
    """Per-variable error norms; axis 0 of field/reference indexes variables.

    L1 = sum(w |e|) / sum(w) and L2 = sqrt(sum(w e^2) / sum(w)) with w the
    cell-size weights (uniform by default); Linf is the plain maximum.
    """
    field = np.asarray(field, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if field.shape != reference.shape:
        raise ConfigError(
            f"field shape {field.shape} != reference shape {reference.shape}"
        )
    err = (field - reference).reshape(field.shape[0], -1)
    which = str(which).lower()
    if which == "linf":
        return np.max(np.abs(err), axis=1)
    if weights is None:
        w = np.ones(err.shape[1])
    else:
        w = np.asarray(weights, dtype=float).reshape(-1)
        if w.size != err.shape[1]:
            raise ConfigError("weights do not match the field shape")
    total = np.sum(w)
    if which == "l1":
        return np.abs(err) @ (w / total)
    if which == "l2":
        return np.sqrt((err**2) @ (w / total))
    raise ConfigError(f"unknown norm: {which!r} (use l1, l2 or linf)")


def convergence_rate(err_coarse, err_fine, h_coarse, h_fine):
    """Observed order from two errors; None when the ratio is degenerate."""
    if not (err_coarse > 0.0 and err_fine > 0.0) or h_coarse == h_fine:
        return None
    return float(np.log(err_coarse / err_fine) / np.log(h_coarse / h_fine))


# -- case container ----------------------------------------------------------

class Case:
    """One registered problem instantiated on a grid, ready to run."""

    def __init__(self, name, sim, t_final=None, n_steps=None, description="",
                 background=None, exact=None, profile=None, params=None,
                 diagnostics=None):
        self.name = name
        self.sim = sim
        self.t_final = t_final
        self.n_steps = n_steps
        self.description = description
        self.background = background
        self.exact = exact
        self.profile = profile
        self.params = dict(params or {})
        self.diagnostics = dict(diagnostics or {})
        self.initial = sim.primitive()

    @property
    def dim(self):
        return 2 if isinstance(self.sim, Simulation2D) else 1

    def weights(self):
        if self.dim == 2:
            return self.sim.weights()
        return np.ones(self.sim.grid.n)

    def run(self, t_final=None, n_steps=None, callback=None):
        """Advance to the case's final time (or an override)."""
        if t_final is None and n_steps is None:
            t_final, n_steps = self.t_final, self.n_steps
        self.sim.advance(t_final=t_final, n_steps=n_steps, callback=callback)
        return self.sim.primitive()

    def errors(self, reference=None, which="l1"):
        """Norms of the current state against a reference (default: initial)."""
        ref = self.initial if reference is None else reference
        return error_norms(self.sim.primitive(), ref, which, self.weights())


# -- shared helpers ----------------------------------------------------------

def _gauss(x, center, sharpness=100.0):
    return np.exp(-sharpness * (x - center) ** 2)


_POTENTIALS_1D = {
    "linear": lambda: linear(1.0),
    "quadratic": lambda: quadratic(1.0),
    "sine": lambda: sine(1.0, 1.0),
}


def _potential_1d(spec):
    if hasattr(spec, "grad") or callable(spec):
        return spec
    try:
        return _POTENTIALS_1D[str(spec)]()
    except KeyError:
        raise ConfigError(
            f"unknown potential {spec!r}; pick one of {sorted(_POTENTIALS_1D)}"
        ) from None


def _sim1d(n, xmin, xmax, eos, pot, bc, config):
    return Simulation1D(Grid1D(int(n), xmin, xmax), eos, pot, bc=bc,
                        config=config)


def _polytropic_closed_form(phi, gamma):
    """Isentropic column: T = 1 - (gamma-1)/gamma * phi (R = 1)."""
    T = 1.0 - (gamma - 1.0) / gamma * phi
    if not np.all(T > 0.0):
        raise ConfigError("polytropic temperature reaches zero inside the domain")
    rho = T ** (1.0 / (gamma - 1.0))
    p = T ** (gamma / (gamma - 1.0))
    return rho, p, T


def _vdw_eos():
    return VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)


def _vdw_reference(eos, pot, x):
    """Isothermal van der Waals column anchored at rho = 1 on the left edge."""
    x = np.asarray(x, dtype=float)
    if x[0] > 0.0:
        xx = np.concatenate(([0.0], x))
        prof = hydrostatic.ode_reference(eos, pot, xx, temperature=1.0,
                                         anchor_index=0, density=1.0)
        return HydrostaticProfile(x, prof.rho[1:], prof.p[1:], prof.T[1:],
                                  provenance="ode_reference")
    return hydrostatic.ode_reference(eos, pot, x, temperature=1.0,
                                     anchor_index=0, density=1.0)


def potential_temperature(prim, eos, p_ref):
    """theta_pot = T * (p_ref / p)^((gamma-1)/gamma) from primitive fields."""
    rho, p = prim[0], prim[-1]
    T = eos.temperature(rho, p)
    return T * (p_ref / p) ** ((eos.gamma - 1.0) / eos.gamma)


# -- 1-D builders -------------------------------------------------------------

def _isothermal_state(sim):
    x = sim.grid.centers()
    rho = np.exp(-np.asarray(sim.potential(x), dtype=float))
    return np.array([rho, np.zeros_like(x), rho.copy()])


def _build_isothermal_wb(nx=None, ny=None, config=None, potential="linear",
                         t_final=2.0):
    pot = _potential_1d(potential)
    eos = IdealGas(R=1.0, gamma=1.4)
    sim = _sim1d(nx or 100, 0.0, 1.0, eos, pot, "transmissive", config)
    v = _isothermal_state(sim)
    sim.set_primitive(v)
    x = sim.grid.centers()
    profile = HydrostaticProfile(x, v[0].copy(), v[2].copy(), np.ones_like(x),
                                 provenance="closed_form")
    return Case("isothermal_wb", sim, t_final=t_final, background=v,
                profile=profile,
                description="isothermal ideal-gas column held at rest",
                params={"potential": getattr(pot, "name", "custom")})


def _build_isothermal_pert(nx=None, ny=None, config=None, eps=1e-5,
                           t_final=0.25):
    pot = linear(1.0)
    eos = IdealGas(R=1.0, gamma=1.4)
    sim = _sim1d(nx or 200, 0.0, 1.0, eos, pot, "transmissive", config)
    v = _isothermal_state(sim)
    background = v.copy()
    v[2] = v[2] + eps * _gauss(sim.grid.centers(), 0.5)
    sim.set_primitive(v)
    case = Case("isothermal_pert", sim, t_final=t_final, background=background,
                description="acoustic pulse on an isothermal column",
                params={"eps": eps})
    case.diagnostics["dp"] = lambda prim: prim[-1] - background[-1]
    return case


def _build_xing_steady(nx=None, ny=None, config=None, eps=1e-3,
                       n_steps=100000):
    L, phi0, T0, gamma = 64.0, 0.02, 0.6866, 5.0 / 3.0
    pot = sine(amplitude=-phi0 * L / (2.0 * np.pi), length=L)
    eos = IdealGas(R=1.0, gamma=gamma)
    sim = _sim1d(nx or 64, 0.0, L, eos, pot, "periodic", config)
    x = sim.grid.centers()
    rho = np.exp(-np.asarray(pot(x), dtype=float) / T0)
    background = np.array([rho, np.zeros_like(x), rho * T0])
    v = background.copy()
    v[2] = v[2] + eps * _gauss(x, 32.0)
    sim.set_primitive(v)
    case = Case("xing_steady", sim, n_steps=n_steps, background=background,
                description="gas settling toward a sine-potential equilibrium",
                params={"eps": eps, "T0": T0, "gamma": gamma})
    case.diagnostics["dp"] = lambda prim: prim[-1] - background[-1]
    return case


def _build_polytropic(nx=None, ny=None, config=None, potential="linear",
                      init="discrete", eta=0.0, t_final=2.0):
    pot = _potential_1d(potential)
    gamma = 1.4
    eos = IdealGas(R=1.0, gamma=gamma)
    sim = _sim1d(nx or 100, 0.0, 1.0, eos, pot, "wall", config)
    x = sim.grid.centers()
    phi = np.asarray(pot(x), dtype=float)
    rho_e, p_e, T = _polytropic_closed_form(phi, gamma)
    if init == "discrete":
        profile = hydrostatic.discrete_hydrostatic(eos, x, phi, T,
                                                   anchor_index=0,
                                                   pressure=p_e[0])
    elif init == "exact":
        profile = HydrostaticProfile(x, rho_e, p_e, T, provenance="closed_form")
    else:
        raise ConfigError(f"init must be 'discrete' or 'exact', got {init!r}")
    background = np.array([profile.rho, np.zeros_like(x), profile.p])
    v = background.copy()
    if eta:
        v[2] = v[2] + eta * _gauss(x, 0.5)
    sim.set_primitive(v)
    case = Case("polytropic", sim, t_final=t_final, background=background,
                profile=profile, exact=np.array([rho_e, np.zeros_like(x), p_e]),
                description="isentropic ideal-gas column between solid walls",
                params={"init": init, "eta": eta,
                        "potential": getattr(pot, "name", "custom")})
    if eta:
        case.diagnostics["dp"] = lambda prim: prim[-1] - background[-1]
    return case


def _build_vdw_hydro(nx=None, ny=None, config=None, init="discrete",
                     eta=0.0, t_final=2.0):
    eos = _vdw_eos()
    pot = linear(1.0)
    sim = _sim1d(nx or 100, 0.0, 1.0, eos, pot, "transmissive", config)
    x = sim.grid.centers()
    ref = _vdw_reference(eos, pot, x)
    if init == "discrete":
        profile = hydrostatic.discrete_hydrostatic(eos, x, np.asarray(pot(x)),
                                                   temperature=1.0,
                                                   anchor_index=0,
                                                   density=ref.rho[0])
    elif init == "exact":
        profile = ref
    else:
        raise ConfigError(f"init must be 'discrete' or 'exact', got {init!r}")
    background = np.array([profile.rho, np.zeros_like(x), profile.p])
    v = background.copy()
    if eta:
        v[2] = v[2] + eta * _gauss(x, 0.5)
    sim.set_primitive(v)
    case = Case("vdw_hydro", sim, t_final=t_final, background=background,
                profile=profile, exact=np.array([ref.rho, np.zeros_like(x), ref.p]),
                description="isothermal van der Waals column (a=0.4, b=0.001)",
                params={"init": init, "eta": eta})
    if eta:
        case.diagnostics["dp"] = lambda prim: prim[-1] - background[-1]
    return case


def _build_vdw_pert(nx=None, ny=None, config=None, eta=0.001, t_final=0.2):
    case = _build_vdw_hydro(nx=nx or 100, config=config, init="discrete",
                            eta=eta, t_final=t_final)
    case.name = "vdw_pert"
    case.description = "acoustic pulse on the van der Waals column"
    return case


def vdw_pulse_reference(eta=1e-5, n=3000, t_final=0.2, cfl=0.4):
    """Linearized reference evolution of the van der Waals pressure pulse.

    The base column only exists where dp/drho stays positive (it loses
    convexity just below x = 0), so the oracle lives on [0, 1]; the pulse
    never reaches the edges by t = 0.2.  Returns (x, dp).
    """
    eos = _vdw_eos()
    pot = linear(1.0)
    x = Grid1D(int(n), 0.0, 1.0).centers()
    base = _vdw_reference(eos, pot, x)
    dp0 = eta * _gauss(x, 0.5)
    _, _, dp = hydrostatic.linearized_euler_1d(eos, pot, base, dp0, t_final,
                                               cfl=cfl)
    return x, dp


def _riemann_1d(name, left, right, t_final, description, nx, config):
    pot = linear(1.0)
    eos = IdealGas(R=1.0, gamma=1.4)
    sim = _sim1d(nx, 0.0, 1.0, eos, pot, "wall", config)
    x = sim.grid.centers()
    v = np.where(x < 0.5, np.asarray(left)[:, None], np.asarray(right)[:, None])
    sim.set_primitive(v)
    return Case(name, sim, t_final=t_final, description=description,
                params={"left": tuple(left), "right": tuple(right)})


def _build_sod_gravity(nx=None, ny=None, config=None, t_final=0.2):
    return _riemann_1d("sod_gravity", (1.0, 0.0, 1.0), (0.125, 0.0, 0.1),
                       t_final, "shock-tube breakup in a linear potential",
                       nx or 200, config)


def _build_contact_gravity(nx=None, ny=None, config=None, t_final=0.6):
    return _riemann_1d("contact_gravity", (1.0, 0.0, 1.0), (10.0, 0.0, 1.0),
                       t_final, "density jump at uniform pressure under gravity",
                       nx or 200, config)


# -- 2-D builders -------------------------------------------------------------

def _sim2d(nx, ny, bounds, eos, pot, bc, config, dirichlet=None):
    grid = Grid2D(int(nx), int(ny), *bounds)
    return Simulation2D(grid, eos, pot, bc, config=config, dirichlet=dirichlet)


def _build_iso2d_pert(nx=None, ny=None, config=None, eta=0.001, t_final=0.15):
    rho0, p0 = 1.21, 1.0
    eos = IdealGas(R=1.0, gamma=1.4)
    pot = linear(1.0, gy=1.0)
    sim = _sim2d(nx or 51, ny or nx or 51, (0.0, 1.0, 0.0, 1.0), eos, pot,
                 "transmissive", config)
    X, Y = sim.grid.mesh()
    fac = np.exp(-rho0 * (X + Y) / p0)
    zeros = np.zeros_like(X)
    background = np.array([rho0 * fac, zeros, zeros, p0 * fac])
    v = background.copy()
    v[3] = v[3] + eta * np.exp(-100.0 * rho0 * ((X - 0.3) ** 2 + (Y - 0.3) ** 2) / p0)
    sim.set_primitive(v)
    case = Case("iso2d_pert", sim, t_final=t_final, background=background,
                description="pressure pulse on a 2-D isothermal atmosphere",
                params={"eta": eta, "rho0": rho0, "p0": p0})
    case.diagnostics["dp"] = lambda prim: prim[-1] - background[-1]
    return case


def _diagonal_discrete_polytropic(sim, gamma):
    """Discrete equilibrium constant along grid diagonals (needs dx == dy).

    With square cells, marching the one-cell recurrence on the diagonal
    coordinate s = x + y makes both directional recurrences hold exactly,
    so this state is a genuine 2-D discrete equilibrium.
    """
    g = sim.grid
    eos = sim.eos
    h = g.dx
    s = (g.xmin + g.ymin) + np.arange(g.nx + g.ny - 1) * h
    rho_e, p_e, T = _polytropic_closed_form(s, gamma)
    prof = hydrostatic.discrete_hydrostatic(eos, s, s, T, anchor_index=0,
                                            pressure=p_e[0])
    k = np.add.outer(np.arange(g.nx), np.arange(g.ny))
    return prof.rho[k], prof.p[k]


def _build_poly2d_pert(nx=None, ny=None, config=None, eta=0.001, t_final=0.15):
    gamma = 1.4
    eos = IdealGas(R=1.0, gamma=gamma)
    pot = linear(1.0, gy=1.0)
    sim = _sim2d(nx or 51, ny or nx or 51, (0.0, 1.0, 0.0, 1.0), eos, pot,
                 "transmissive", config)
    X, Y = sim.grid.mesh()
    if abs(sim.grid.dx - sim.grid.dy) < 1e-12 * sim.grid.dx:
        rho_b, p_b = _diagonal_discrete_polytropic(sim, gamma)
    else:
        rho_b, p_b, _ = _polytropic_closed_form(X + Y, gamma)
    zeros = np.zeros_like(X)
    background = np.array([rho_b, zeros, zeros, p_b])
    v = background.copy()
    v[3] = v[3] + eta * np.exp(-100.0 * ((X - 0.3) ** 2 + (Y - 0.3) ** 2))
    sim.set_primitive(v)
    case = Case("poly2d_pert", sim, t_final=t_final, background=background,
                description="pressure pulse on a 2-D isentropic atmosphere",
                params={"eta": eta})
    case.diagnostics["dp"] = lambda prim: prim[-1] - background[-1]
    return case


def _build_mms2d(nx=None, ny=None, config=None, t_final=0.1, u0=1.0, v0=1.0,
                 p0=4.5, recon="quadratic_upwind"):
    # the solution is smooth, so the convergence study defaults to the
    # unlimited quadratic-upwind reconstruction: the limited scheme clips
    # the traveling density extrema and its dispersive error dominates rho
    eos = IdealGas(R=1.0, gamma=1.4)
    pot = linear(1.0, gy=1.0)
    config = (config or SolverConfig()).with_options(recon=recon)

    def exact(t, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        arg = np.pi * (x + y - t * (u0 + v0))
        rho = 1.0 + 0.2 * np.sin(arg)
        p = p0 + t * (u0 + v0) - (x + y) + 0.2 * np.cos(arg) / np.pi
        shape = np.broadcast(x, y).shape
        return np.array([rho,
                         np.full(shape, u0),
                         np.full(shape, v0),
                         p])

    sim = _sim2d(nx or 101, ny or nx or 101, (0.0, 2.0, 0.0, 2.0), eos, pot,
                 "dirichlet", config, dirichlet=exact)
    X, Y = sim.grid.mesh()
    sim.set_primitive(exact(0.0, X, Y))

    def exact_on_grid(t):
        return exact(t, X, Y)

    return Case("mms2d", sim, t_final=t_final, exact=exact_on_grid,
                description="smooth traveling wave with an exact solution",
                params={"u0": u0, "v0": v0, "p0": p0})


def _build_radial_iso(nx=None, ny=None, config=None, t_final=1.0):
    eos = IdealGas(R=1.0, gamma=1.4)
    pot = radial(1.0)
    sim = _sim2d(nx or 51, ny or nx or 51, (-1.0, 1.0, -1.0, 1.0), eos, pot,
                 "transmissive", config)
    X, Y = sim.grid.mesh()
    fac = np.exp(-np.sqrt(X**2 + Y**2))
    background = np.array([fac, np.zeros_like(X), np.zeros_like(X), fac.copy()])
    sim.set_primitive(background)
    return Case("radial_iso", sim, t_final=t_final, background=background,
                description="isothermal atmosphere in a radial potential")


def _build_radial_poly(nx=None, ny=None, config=None, nu=1.2, t_final=50.0):
    eos = IdealGas(R=1.0, gamma=1.4)
    pot = radial(1.0)
    sim = _sim2d(nx or 51, ny or nx or 51, (-1.0, 1.0, -1.0, 1.0), eos, pot,
                 "transmissive", config)
    X, Y = sim.grid.mesh()
    r = np.sqrt(X**2 + Y**2)
    T = 1.0 - (nu - 1.0) / nu * r
    rho = T ** (1.0 / (nu - 1.0))
    background = np.array([rho, np.zeros_like(X), np.zeros_like(X), rho**nu])
    sim.set_primitive(background)
    return Case("radial_poly", sim, t_final=t_final, background=background,
                description="polytropic atmosphere in a radial potential",
                params={"nu": nu})


def _build_radial_vdw(nx=None, ny=None, config=None, t_final=250.0):
    from scipy.interpolate import CubicSpline

    eos = _vdw_eos()
    pot = radial(1.0)
    sim = _sim2d(nx or 201, ny or nx or 201, (-1.0, 1.0, -1.0, 1.0), eos, pot,
                 "transmissive", config)
    X, Y = sim.grid.mesh()
    r = np.sqrt(X**2 + Y**2)
    r_max = float(np.max(r)) * (1.0 + 1e-12)
    r_line = np.linspace(0.0, r_max, 2001)
    prof = hydrostatic.ode_reference(eos, linear(1.0), r_line, temperature=1.0,
                                     anchor_index=0, density=1.0)
    rho = CubicSpline(r_line, prof.rho)(r)
    p = CubicSpline(r_line, prof.p)(r)
    background = np.array([rho, np.zeros_like(X), np.zeros_like(X), p])
    sim.set_primitive(background)
    return Case("radial_vdw", sim, t_final=t_final, background=background,
                description="van der Waals atmosphere in a radial potential")


def _build_radial_rt(nx=None, ny=None, config=None, r0=0.6, eta=0.02,
                     drho=0.1, k=20, t_final=5.0):
    eos = IdealGas(R=1.0, gamma=1.4)
    pot = radial(1.0)
    sim = _sim2d(nx or 241, ny or nx or 241, (-1.0, 1.0, -1.0, 1.0), eos, pot,
                 "transmissive", config)
    X, Y = sim.grid.mesh()
    r = np.sqrt(X**2 + Y**2)
    alpha = np.exp(-r0) / (np.exp(-r0) + drho)
    outer = np.exp(-r / alpha + r0 * (1.0 - alpha) / alpha)
    p = np.where(r <= r0, np.exp(-r), outer)
    r_i = r0 * (1.0 + eta * np.cos(k * np.arctan2(Y, X)))
    rho = np.where(r <= r_i, np.exp(-r), outer / alpha)
    rho_b = np.where(r <= r0, np.exp(-r), outer / alpha)
    zeros = np.zeros_like(X)
    background = np.array([rho_b, zeros, zeros, p])
    sim.set_primitive(np.array([rho, zeros, zeros, p]))
    return Case("radial_rt", sim, t_final=t_final, background=background,
                description="heavy shell on a light core, wavy interface",
                params={"r0": r0, "eta": eta, "drho": drho, "k": k})


def _build_rising_bubble(nx=None, ny=None, config=None, theta_c=0.5,
                         r_c=250.0, center=(500.0, 350.0), t_final=700.0):
    gamma, theta0, p0 = 1.4, 300.0, 1.0e5
    eos = IdealGas(R=R_AIR, gamma=gamma)
    pot = constant_g_y(G_STD)
    sim = _sim2d(nx or 401, ny or nx or 401, (0.0, 1000.0, 0.0, 1000.0),
                 eos, pot, "wall", config)
    X, Y = sim.grid.mesh()
    rho0 = p0 / (R_AIR * theta0)
    Pi = 1.0 - (gamma - 1.0) * G_STD * Y / (gamma * R_AIR * theta0)
    pbar = p0 * Pi ** (gamma / (gamma - 1.0))
    rbar = rho0 * Pi ** (1.0 / (gamma - 1.0))
    r = np.sqrt((X - center[0]) ** 2 + (Y - center[1]) ** 2)
    dtheta = np.where(r < r_c, 0.5 * theta_c * (1.0 + np.cos(np.pi * r / r_c)),
                      0.0)
    zeros = np.zeros_like(X)
    background = np.array([rbar, zeros, zeros, pbar])
    v = background.copy()
    v[0] = rbar * theta0 / (theta0 + dtheta)
    sim.set_primitive(v)
    case = Case("rising_bubble", sim, t_final=t_final, background=background,
                description="buoyant warm bubble in a neutrally stratified box",
                params={"theta_c": theta_c, "r_c": r_c, "center": center,
                        "theta0": theta0, "p0": p0})
    case.diagnostics["delta_theta"] = (
        lambda prim: potential_temperature(prim, eos, p0) - theta0
    )
    return case


def _build_igw(nx=None, ny=None, config=None, theta_c=0.01, t_final=3000.0):
    gamma, theta0, p0, N, u0 = 1.4, 300.0, 1.0e5, 0.01, 20.0
    h_c, x_c, a_c = 1.0e4, 1.0e5, 5.0e3
    eos = IdealGas(R=R_AIR, gamma=gamma)
    pot = constant_g_y(G_STD)
    sim = _sim2d(nx or 1201, ny or 51, (0.0, 3.0e5, 0.0, 1.0e4), eos, pot,
                 ("periodic", "periodic", "wall", "wall"), config)
    X, Y = sim.grid.mesh()
    y = sim.grid.ynodes()
    decay = np.exp(-N**2 * y / G_STD)
    Pi = 1.0 + (gamma - 1.0) * G_STD**2 / (gamma * R_AIR * theta0 * N**2) * (decay - 1.0)
    # march the column through the discrete-equilibrium recurrence so the
    # unperturbed channel is an exact steady state on the coarse grid; the
    # interpolated closed form would radiate adjustment noise of the same
    # size as the wave signal
    T_bar = theta0 / decay * Pi
    prof = hydrostatic.discrete_hydrostatic(eos, y, G_STD * y, T_bar,
                                            anchor_index=0, pressure=p0)
    kap = (gamma - 1.0) / gamma
    theta_bar = np.broadcast_to((T_bar * (p0 / prof.p) ** kap)[None, :], X.shape)
    rbar = np.broadcast_to(prof.rho[None, :], X.shape)
    pbar = np.broadcast_to(prof.p[None, :], X.shape)
    dtheta = theta_c * np.sin(np.pi * Y / h_c) / (1.0 + ((X - x_c) / a_c) ** 2)
    zeros = np.zeros_like(X)
    background = np.array([rbar, np.full_like(X, u0), zeros, pbar])
    v = background.copy()
    v[0] = rbar * theta_bar / (theta_bar + dtheta)
    sim.set_primitive(v)
    case = Case("igw", sim, t_final=t_final, background=background,
                description="gravity-wave channel with a drifting warm anomaly",
                params={"theta_c": theta_c, "u0": u0, "N": N})
    case.diagnostics["delta_theta"] = (
        lambda prim: potential_temperature(prim, eos, p0) - theta_bar
    )
    return case


# -- convergence tables --------------------------------------------------------

def _polytropic_table(n, norm, config, params):
    # anchored at the top of the column, where the gas is lightest
    gamma = 1.4
    eos = IdealGas(R=1.0, gamma=gamma)
    x = Grid1D(n, 0.0, 1.0).centers()
    phi = x
    rho_e, p_e, T = _polytropic_closed_form(phi, gamma)
    prof = hydrostatic.discrete_hydrostatic(eos, x, phi, T, anchor_index=n - 1,
                                            pressure=p_e[-1])
    zeros = np.zeros_like(x)
    errs = error_norms(np.array([prof.rho, zeros, prof.p]),
                       np.array([rho_e, zeros, p_e]), norm)
    return 1.0 / n, dict(zip(("rho", "u", "p"), errs))


def _vdw_table(n, norm, config, params):
    eos = _vdw_eos()
    pot = linear(1.0)
    x = np.linspace(0.0, 1.0, n)
    prof = hydrostatic.discrete_hydrostatic(eos, x, x, temperature=1.0,
                                            anchor_index=0, density=1.0)
    ref = _vdw_reference(eos, pot, x)
    errs = error_norms(np.array([prof.rho, prof.p]),
                       np.array([ref.rho, ref.p]), norm)
    return 1.0 / (n - 1), dict(zip(("rho", "p"), errs))


def _mms_table(n, norm, config, params):
    case = _build_mms2d(nx=n, ny=n, config=config, **params)
    case.run()
    errs = error_norms(case.sim.primitive(), case.exact(case.t_final), norm,
                       case.weights())
    return 2.0 / (n - 1), dict(zip(("rho", "u", "v", "p"), errs))


def convergence_table(name, grids, norm="l2", config=None, **params):
    """Error-vs-resolution rows for a case with a reference solution."""
    entry = _entry(name)
    if entry.table is None:
        raise ConfigError(f"case {name!r} has no reference solution to refine "
                          "against")
    grids = [int(g) for g in grids]
    if len(grids) < 2:
        raise ConfigError("a convergence table needs at least two grids")
    rows = []
    prev = None
    for n in grids:
        h, errs = entry.table(n, norm, config or SolverConfig(), params)
        rates = {}
        for var, e in errs.items():
            rates[var] = (None if prev is None
                          else convergence_rate(prev[1][var], e, prev[0], h))
        rows.append({"n": n, "h": h, "errors": errs, "rates": rates})
        prev = (h, errs)
    return rows


# -- registry -------------------------------------------------------------------

@dataclass(frozen=True)
class CaseDef:
    builder: object
    dim: int
    grids: tuple
    description: str
    table: object = None
    equilibrium: bool = False


CASES = {
    "isothermal_wb": CaseDef(_build_isothermal_wb, 1, (100, 1000),
                             "isothermal column at rest; three potentials",
                             equilibrium=True),
    "isothermal_pert": CaseDef(_build_isothermal_pert, 1, (200, 2000),
                               "small pressure pulse on the isothermal column",
                               equilibrium=True),
    "xing_steady": CaseDef(_build_xing_steady, 1, (64,),
                           "long-run relaxation to a sine-potential equilibrium",
                           equilibrium=True),
    "polytropic": CaseDef(_build_polytropic, 1, (100, 1000),
                          "isentropic column; discrete/exact initial data",
                          table=_polytropic_table, equilibrium=True),
    "vdw_hydro": CaseDef(_build_vdw_hydro, 1, (100, 1000),
                         "van der Waals column; discrete/exact initial data",
                         table=_vdw_table, equilibrium=True),
    "vdw_pert": CaseDef(_build_vdw_pert, 1, (100, 1000),
                        "pressure pulse on the van der Waals column",
                        equilibrium=True),
    "sod_gravity": CaseDef(_build_sod_gravity, 1, (200, 2000),
                           "shock tube in a linear potential"),
    "contact_gravity": CaseDef(_build_contact_gravity, 1, (200, 2000),
                               "stationary-without-gravity contact between walls"),
    "iso2d_pert": CaseDef(_build_iso2d_pert, 2, (51,),
                          "pressure pulse on a diagonal isothermal atmosphere"),
    "poly2d_pert": CaseDef(_build_poly2d_pert, 2, (51,),
                           "pressure pulse on a diagonal isentropic atmosphere"),
    "mms2d": CaseDef(_build_mms2d, 2, (101, 201, 401, 801),
                     "manufactured traveling wave for order checks",
                     table=_mms_table),
    "radial_iso": CaseDef(_build_radial_iso, 2, (51, 101),
                          "radial isothermal atmosphere on a Cartesian grid"),
    "radial_poly": CaseDef(_build_radial_poly, 2, (51, 101),
                           "radial polytropic atmosphere (nu = 1.2)"),
    "radial_vdw": CaseDef(_build_radial_vdw, 2, (201,),
                          "radial van der Waals atmosphere"),
    "radial_rt": CaseDef(_build_radial_rt, 2, (241,),
                         "radial overturning of a perturbed density interface"),
    "rising_bubble": CaseDef(_build_rising_bubble, 2, (201, 401),
                             "warm bubble rising through still air (SI units)"),
    "igw": CaseDef(_build_igw, 2, (1201,),
                   "inertia-gravity wave in a stratified channel (SI units)"),
}


def _entry(name):
    try:
        return CASES[name]
    except KeyError:
        raise ConfigError(
            f"unknown case {name!r}; known cases: {', '.join(CASES)}"
        ) from None


def case_names():
    return list(CASES)


def build_case(name, nx=None, ny=None, config=None, **params):
    """Instantiate a registered case, optionally overriding grid/parameters."""
    entry = _entry(name)
    case = entry.builder(nx=nx, ny=ny, config=config, **params)
    return case


def equilibrium_profile(name, n=101, **params):
    """Discrete equilibrium of a 1-D case on n nodes spanning its domain."""
    entry = _entry(name)
    if not entry.equilibrium:
        raise ConfigError(f"case {name!r} has no one-dimensional equilibrium")
    case = build_case(name, **params)
    sim = case.sim
    eos, pot = sim.eos, sim.potential
    x = np.linspace(sim.grid.xmin, sim.grid.xmax, int(n))
    phi = np.asarray(pot(x), dtype=float)
    if name in ("vdw_hydro", "vdw_pert"):
        return hydrostatic.discrete_hydrostatic(eos, x, phi, temperature=1.0,
                                                anchor_index=0, density=1.0)
    if name == "polytropic":
        _, p_e, T = _polytropic_closed_form(phi, eos.gamma)
        return hydrostatic.discrete_hydrostatic(eos, x, phi, T, anchor_index=0,
                                                pressure=p_e[0])
    if name == "xing_steady":
        T0 = case.params["T0"]
        p0 = float(np.exp(-phi[0] / T0) * T0)
        return hydrostatic.discrete_hydrostatic(eos, x, phi, T0, anchor_index=0,
                                                pressure=p0)
    # isothermal family: T = 1, p(x0) = exp(-phi(x0))
    return hydrostatic.discrete_hydrostatic(eos, x, phi, temperature=1.0,
                                            anchor_index=0,
                                            pressure=float(np.exp(-phi[0])))
