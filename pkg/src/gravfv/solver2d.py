"""Two-dimensional finite volume driver on a cell-vertex grid.

Nodes sit on the domain boundary.  Wall boundaries turn the adjacent
node cells into half cells (quarter cells at wall-wall corners): the
wall face carries the exact pressure flux [0, n*p, 0], the source uses a
one-sided hydrostatic face-pressure difference, and the normal momentum
of wall nodes is pinned to zero after every stage.  Periodic directions
identify the first and last node line; transmissive sides copy the
face-relative scaled variables outward; Dirichlet sides evaluate a
caller-supplied exact solution at the stage time on the boundary nodes
and both ghost layers.
"""

from dataclasses import dataclass

import numpy as np

from . import state, sweeps
from .errors import ConfigError
from .gravity import hydrostatic_face_pressures
from .solver1d import SolverConfig

BC_KINDS = ("periodic", "wall", "transmissive", "dirichlet")
SIDES = ("left", "right", "bottom", "top")


@dataclass(frozen=True)
class Grid2D:
    """Uniform cell-vertex grid: nx*ny nodes, spacing (xmax-xmin)/(nx-1)."""

    nx: int
    ny: int
    xmin: float = 0.0
    xmax: float = 1.0
    ymin: float = 0.0
    ymax: float = 1.0

    def __post_init__(self):
        if self.nx < 5 or self.ny < 5:
            raise ConfigError("need at least 5 nodes per direction")
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ConfigError("domain bounds must be increasing")

    @property
    def dx(self):
        return (self.xmax - self.xmin) / (self.nx - 1)

    @property
    def dy(self):
        return (self.ymax - self.ymin) / (self.ny - 1)

    def xnodes(self):
        return self.xmin + np.arange(self.nx) * self.dx

    def ynodes(self):
        return self.ymin + np.arange(self.ny) * self.dy

    def mesh(self):
        return np.meshgrid(self.xnodes(), self.ynodes(), indexing="ij")


def _normalize_bc(bc):
    if isinstance(bc, str):
        bc = {side: bc for side in SIDES}
    elif not isinstance(bc, dict):
        bc = dict(zip(SIDES, bc))
    missing = set(SIDES) - set(bc)
    if missing:
        raise ConfigError(f"missing boundary sides: {sorted(missing)}")
    for side, kind in bc.items():
        if kind not in BC_KINDS:
            raise ConfigError(f"unsupported boundary condition {kind!r} on {side}")
    if (bc["left"] == "periodic") != (bc["right"] == "periodic"):
        raise ConfigError("periodic x boundaries must pair up")
    if (bc["bottom"] == "periodic") != (bc["top"] == "periodic"):
        raise ConfigError("periodic y boundaries must pair up")
    return {side: bc[side] for side in SIDES}


class Simulation2D:
    """Owns one 2-D grid, one equation of state and the evolving state."""

    def __init__(self, grid, eos, potential, bc, config=None, dirichlet=None):
        self.grid = grid
        self.eos = eos
        self.potential = potential
        self.config = config or SolverConfig()
        self.bc = _normalize_bc(bc)
        if any(kind == "dirichlet" for kind in self.bc.values()) and dirichlet is None:
            raise ConfigError("dirichlet boundaries need an exact-solution callable")
        self.dirichlet = dirichlet
        x, y = grid.xnodes(), grid.ynodes()
        self.phi = np.asarray(potential(x[:, None], y[None, :]), dtype=float)
        self.phi_x = self._extend_phi(axis=0)
        self.phi_y = self._extend_phi(axis=1)
        self.dx_eff = self._effective_spacing(grid.nx, grid.dx, "left", "right")
        self.dy_eff = self._effective_spacing(grid.ny, grid.dy, "bottom", "top")
        self.q = None
        self.t = 0.0
        self.n_steps = 0

    # -- geometry ------------------------------------------------------------

    def _effective_spacing(self, n, d, lo_side, hi_side):
        eff = np.full(n, d)
        if self.bc[lo_side] == "wall":
            eff[0] = 0.5 * d
        if self.bc[hi_side] == "wall":
            eff[-1] = 0.5 * d
        return eff

    def weights(self):
        """Node cell-size weights: 1/2 on wall and periodic ends, 1/4 corners."""

        def axis_weights(n, lo_side, hi_side):
            w = np.ones(n)
            if self.bc[lo_side] in ("wall", "periodic"):
                w[0] = 0.5
            if self.bc[hi_side] in ("wall", "periodic"):
                w[-1] = 0.5
            return w

        wx = axis_weights(self.grid.nx, "left", "right")
        wy = axis_weights(self.grid.ny, "bottom", "top")
        return wx[:, None] * wy[None, :]

    def _ghost_coords(self, axis, side):
        g = self.grid
        if axis == 0:
            lo = g.xmin - 2 * g.dx if side == "left" else g.xmax + g.dx
            return lo + np.arange(2) * g.dx
        lo = g.ymin - 2 * g.dy if side == "bottom" else g.ymax + g.dy
        return lo + np.arange(2) * g.dy

    def _extend_phi(self, axis):
        g = self.grid
        n = g.nx if axis == 0 else g.ny
        shape = (n + 4, g.ny) if axis == 0 else (g.nx, n + 4)
        ext = np.empty(shape)
        core = np.moveaxis(ext, axis, 0)
        phi = np.moveaxis(self.phi, axis, 0)
        core[2:-2] = phi
        lo_side, hi_side = ("left", "right") if axis == 0 else ("bottom", "top")
        other = g.ynodes() if axis == 0 else g.xnodes()
        for side, sl_ghost in ((lo_side, np.s_[0:2]), (hi_side, np.s_[-2:])):
            kind = self.bc[side]
            if kind == "periodic":
                core[sl_ghost] = phi[n - 3:n - 1] if side == lo_side else phi[1:3]
            elif kind == "wall":
                core[sl_ghost] = phi[0] if side == lo_side else phi[-1]
            else:
                coords = self._ghost_coords(axis, side)
                if axis == 0:
                    core[sl_ghost] = self.potential(coords[:, None], other[None, :])
                else:
                    core[sl_ghost] = self.potential(other[None, :], coords[:, None])
        return ext

    # -- state ---------------------------------------------------------------

    def set_primitive(self, v0, t0=0.0):
        v0 = np.asarray(v0, dtype=float)
        if v0.shape != (4, self.grid.nx, self.grid.ny):
            raise ConfigError(
                f"expected primitive shape (4, {self.grid.nx}, {self.grid.ny})"
            )
        self.t = float(t0)
        self.n_steps = 0
        self.q = state.prim_to_cons(v0, self.eos)
        self.apply_constraints(self.q, self.t)

    def primitive(self, q=None):
        return state.cons_to_prim(self.q if q is None else q, self.eos)

    def total_mass(self, q=None):
        q = self.q if q is None else q
        return float(np.sum(q[0] * self.weights()) * self.grid.dx * self.grid.dy)

    # -- ghosts ----------------------------------------------------------------

    def _extend_state(self, v, axis, t):
        """Primitive array with two boundary-aware ghost layers along axis."""
        g = self.grid
        n = g.nx if axis == 0 else g.ny
        shape = (4, n + 4, g.ny) if axis == 0 else (4, g.nx, n + 4)
        vext = np.empty(shape)
        core = np.moveaxis(vext, 1 + axis, 1)
        vin = np.moveaxis(v, 1 + axis, 1)
        core[:, 2:-2] = vin
        phie = np.moveaxis(self.phi_x if axis == 0 else self.phi_y, axis, 0)
        other = g.ynodes() if axis == 0 else g.xnodes()
        wb = self.config.scheme == "wb"
        lo_side, hi_side = ("left", "right") if axis == 0 else ("bottom", "top")
        for side, idx_ghost in ((lo_side, (0, 1)), (hi_side, (n + 2, n + 3))):
            kind = self.bc[side]
            b_ext = 2 if side == lo_side else n + 1
            if kind == "periodic":
                src = (n - 3, n - 2) if side == lo_side else (1, 2)
                for dst, s in zip(idx_ghost, src):
                    core[:, dst] = vin[:, s]
            elif kind == "wall":
                for dst in idx_ghost:
                    core[:, dst] = core[:, b_ext]
            elif kind == "transmissive":
                b = core[:, b_ext]
                for dst in idx_ghost:
                    if wb:
                        fac = np.exp(-(phie[dst] - phie[b_ext]) / (b[3] / b[0]))
                    else:
                        fac = 1.0
                    core[0, dst] = b[0] * fac
                    core[1, dst] = b[1]
                    core[2, dst] = b[2]
                    core[3, dst] = b[3] * fac
            else:  # dirichlet
                coords = self._ghost_coords(axis, side)
                for dst, c in zip(idx_ghost, coords):
                    if axis == 0:
                        core[:, dst] = self.dirichlet(t, c, other)
                    else:
                        core[:, dst] = self.dirichlet(t, other, c)
        return vext

    # -- semi-discrete operator -------------------------------------------------

    def _directional_update(self, v, axis, t):
        cfg, eos, g = self.config, self.eos, self.grid
        vext = self._extend_state(v, axis, t)
        phie = self.phi_x if axis == 0 else self.phi_y
        vs = np.moveaxis(vext, 1 + axis, -1)
        ps = np.moveaxis(phie, axis, -1)
        if cfg.scheme == "wb":
            ff = sweeps.wb_face_fluxes(vs, ps, eos, cfg.kappa, cfg.recon, axis=axis)
        else:
            qs = state.prim_to_cons(vs, eos)
            ff = sweeps.nwb_face_fluxes(qs, eos, cfg.kappa, cfg.recon, axis=axis)
        ff = np.moveaxis(ff, -1, 1 + axis)
        lo_side, hi_side = ("left", "right") if axis == 0 else ("bottom", "top")
        ffm = np.moveaxis(ff, 1 + axis, 1)
        vin = np.moveaxis(v, 1 + axis, 1)
        if self.bc[lo_side] == "wall":
            ffm[:, 0] = 0.0
            ffm[1 + axis, 0] = vin[3, 0]
        if self.bc[hi_side] == "wall":
            ffm[:, -1] = 0.0
            ffm[1 + axis, -1] = vin[3, -1]
        eff = self.dx_eff if axis == 0 else self.dy_eff
        if axis == 0:
            return -(ff[:, 1:, :] - ff[:, :-1, :]) / eff[None, :, None]
        return -(ff[:, :, 1:] - ff[:, :, :-1]) / eff[None, None, :]

    def _sources(self, v, axis):
        """Momentum source along axis; one-sided at wall nodes."""
        cfg, g = self.config, self.grid
        phie = self.phi_x if axis == 0 else self.phi_y
        pm = np.moveaxis(phie, axis, 0)
        n = g.nx if axis == 0 else g.ny
        phi_m1 = np.moveaxis(pm[1:n + 1], 0, axis)
        phi_0 = np.moveaxis(pm[2:n + 2], 0, axis)
        phi_p1 = np.moveaxis(pm[3:n + 3], 0, axis)
        rho, p = v[0], v[3]
        eff = self.dx_eff if axis == 0 else self.dy_eff
        eff = eff[:, None] if axis == 0 else eff[None, :]
        lo_side, hi_side = ("left", "right") if axis == 0 else ("bottom", "top")
        if cfg.scheme != "wb":
            d = g.dx if axis == 0 else g.dy
            return -rho * (phi_p1 - phi_m1) / (2.0 * d)
        theta = p / rho
        pbar_plus, pbar_minus = hydrostatic_face_pressures(
            p, theta, phi_m1, phi_0, phi_p1
        )
        pp = np.moveaxis(pbar_plus, axis, 0)
        pmn = np.moveaxis(pbar_minus, axis, 0)
        pv = np.moveaxis(p, axis, 0)
        if self.bc[lo_side] == "wall":
            pmn[0] = pv[0]
        if self.bc[hi_side] == "wall":
            pp[-1] = pv[-1]
        return (pbar_plus - pbar_minus) / eff

    def rhs(self, q, t=0.0):
        v = state.cons_to_prim(q, self.eos)
        dq = self._directional_update(v, 0, t) + self._directional_update(v, 1, t)
        alpha = self._sources(v, 0)
        beta = self._sources(v, 1)
        dq[1] += alpha
        dq[2] += beta
        dq[3] += v[1] * alpha + v[2] * beta
        return dq

    # -- constraints -------------------------------------------------------------

    def apply_constraints(self, q, t):
        """Dirichlet overwrite, wall normal-momentum pinning, periodic sync."""
        g = self.grid
        if self.dirichlet is not None:
            x, y = g.xnodes(), g.ynodes()
            if self.bc["left"] == "dirichlet":
                q[:, 0, :] = state.prim_to_cons(self.dirichlet(t, x[0], y), self.eos)
            if self.bc["right"] == "dirichlet":
                q[:, -1, :] = state.prim_to_cons(self.dirichlet(t, x[-1], y), self.eos)
            if self.bc["bottom"] == "dirichlet":
                q[:, :, 0] = state.prim_to_cons(self.dirichlet(t, x, y[0]), self.eos)
            if self.bc["top"] == "dirichlet":
                q[:, :, -1] = state.prim_to_cons(self.dirichlet(t, x, y[-1]), self.eos)
        if self.bc["left"] == "wall":
            q[1, 0, :] = 0.0
        if self.bc["right"] == "wall":
            q[1, -1, :] = 0.0
        if self.bc["bottom"] == "wall":
            q[2, :, 0] = 0.0
        if self.bc["top"] == "wall":
            q[2, :, -1] = 0.0
        if self.bc["left"] == "periodic":
            q[:, -1, :] = q[:, 0, :]
        if self.bc["bottom"] == "periodic":
            q[:, :, -1] = q[:, :, 0]
        return q

    # -- time stepping -------------------------------------------------------------

    def cfl_dt(self, q=None):
        v = self.primitive(q)
        c = self.eos.sound_speed(v[0], v[3])
        rate = (np.abs(v[1]) + c) / self.grid.dx + (np.abs(v[2]) + c) / self.grid.dy
        return self.config.cfl / float(np.max(rate))

    def step(self, dt):
        q0, t = self.q, self.t
        q1 = self.apply_constraints(q0 + dt * self.rhs(q0, t), t + dt)
        q2 = self.apply_constraints(
            0.75 * q0 + 0.25 * (q1 + dt * self.rhs(q1, t + dt)), t + 0.5 * dt
        )
        self.q = self.apply_constraints(
            (q0 + 2.0 * (q2 + dt * self.rhs(q2, t + 0.5 * dt))) / 3.0, t + dt
        )
        self.t = t + dt
        self.n_steps += 1

    def advance(self, t_final=None, n_steps=None, callback=None):
        if (t_final is None) == (n_steps is None):
            raise ConfigError("advance needs exactly one of t_final or n_steps")
        if callback is not None:
            callback(self)
        if n_steps is not None:
            for _ in range(n_steps):
                self.step(self.cfl_dt())
                if callback is not None:
                    callback(self)
            return
        tiny = 1e-12 * max(1.0, abs(t_final))
        while self.t < t_final - tiny:
            dt = min(self.cfl_dt(), t_final - self.t)
            self.step(dt)
            if callback is not None:
                callback(self)
        self.t = t_final
