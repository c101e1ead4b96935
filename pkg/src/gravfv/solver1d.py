"""One-dimensional finite volume driver with SSP-RK3 time stepping.

Cell-centered grid with two ghost cells per side.  Ghost filling is
boundary-aware in both the state and the nodal potential: transmissive
boundaries copy the face-relative scaled variables (density and pressure
pick up the local hydrostatic factor), walls mirror the state with the
velocity negated while also mirroring the potential, periodic wraps both.
"""

from dataclasses import dataclass, replace

import numpy as np

from . import source as source_mod
from . import state, sweeps
from .errors import ConfigError
from .reconstruct import SCHEMES as RECON_SCHEMES

BC_KINDS = ("periodic", "wall", "transmissive")


@dataclass(frozen=True)
class Grid1D:
    """Uniform cell-centered grid."""

    n: int
    xmin: float = 0.0
    xmax: float = 1.0

    def __post_init__(self):
        if self.n < 4:
            raise ConfigError("need at least 4 cells")
        if not self.xmax > self.xmin:
            raise ConfigError("xmax must exceed xmin")

    @property
    def dx(self):
        return (self.xmax - self.xmin) / self.n

    def centers(self):
        return self.xmin + (np.arange(self.n) + 0.5) * self.dx

    def centers_ext(self):
        """Cell centers including two ghost cells per side."""
        return self.xmin + (np.arange(-2, self.n + 2) + 0.5) * self.dx


@dataclass(frozen=True)
class SolverConfig:
    """Numerical options shared by the 1-D and 2-D drivers."""

    scheme: str = "wb"
    kappa: float = 2.0
    recon: str = "muscl_minmod"
    flux: str = "hllc"
    cfl: float = 0.45

    def __post_init__(self):
        if self.scheme not in ("wb", "nwb"):
            raise ConfigError(f"unknown scheme: {self.scheme!r}")
        if self.recon not in RECON_SCHEMES:
            raise ConfigError(f"unknown reconstruction scheme: {self.recon!r}")
        if self.flux != "hllc":
            raise ConfigError(f"unknown flux: {self.flux!r}")
        if not 0.0 < self.cfl <= 1.0:
            raise ConfigError("cfl must lie in (0, 1]")

    def with_options(self, **kw):
        return replace(self, **kw)


class Simulation1D:
    """Owns one grid, one equation of state and the evolving state array."""

    def __init__(self, grid, eos, potential, bc=("transmissive", "transmissive"),
                 config=None):
        self.grid = grid
        self.eos = eos
        self.potential = potential
        self.config = config or SolverConfig()
        if isinstance(bc, str):
            bc = (bc, bc)
        if bc[0] not in BC_KINDS or bc[1] not in BC_KINDS:
            raise ConfigError(f"unsupported boundary conditions: {bc!r}")
        if ("periodic" in bc) and bc[0] != bc[1]:
            raise ConfigError("periodic boundaries must be used on both ends")
        self.bc = tuple(bc)
        self.phi_ext = self._build_phi_ext()
        self.q = None
        self.t = 0.0
        self.n_steps = 0

    # -- potential ---------------------------------------------------------

    def _build_phi_ext(self):
        n = self.grid.n
        xe = self.grid.centers_ext()
        phi = np.empty(n + 4)
        phi[2:-2] = np.asarray(self.potential(xe[2:-2]), dtype=float)
        interior = phi[2:-2]
        if self.bc[0] == "periodic":
            phi[0:2] = interior[n - 2:n]
            phi[-2:] = interior[0:2]
            return phi
        if self.bc[0] == "wall":
            phi[1], phi[0] = interior[0], interior[1]
        else:
            phi[0:2] = np.asarray(self.potential(xe[0:2]), dtype=float)
        if self.bc[1] == "wall":
            phi[-2], phi[-1] = interior[-1], interior[-2]
        else:
            phi[-2:] = np.asarray(self.potential(xe[-2:]), dtype=float)
        return phi

    # -- state handling ----------------------------------------------------

    def set_primitive(self, v0):
        v0 = np.asarray(v0, dtype=float)
        if v0.shape != (3, self.grid.n):
            raise ConfigError(f"expected primitive shape (3, {self.grid.n})")
        self.q = state.prim_to_cons(v0, self.eos)
        self.t = 0.0
        self.n_steps = 0

    def primitive(self, q=None):
        return state.cons_to_prim(self.q if q is None else q, self.eos)

    def total_mass(self, q=None):
        q = self.q if q is None else q
        return float(np.sum(q[0]) * self.grid.dx)

    # -- ghosts ------------------------------------------------------------

    def _fill_ghosts(self, vint):
        """Primitive array with two boundary-aware ghost cells per side."""
        n = self.grid.n
        vext = np.empty((3, n + 4))
        vext[:, 2:-2] = vint
        wb = self.config.scheme == "wb"
        phi = self.phi_ext

        def mirror(src, dst):
            vext[:, dst] = vint[:, src]
            vext[1, dst] = -vint[1, src]

        def transmissive(dst_idx, b_ext):
            b = vext[:, b_ext]
            if wb:
                fac = np.exp(-(phi[dst_idx] - phi[b_ext]) / (b[2] / b[0]))
            else:
                fac = 1.0
            vext[0, dst_idx] = b[0] * fac
            vext[1, dst_idx] = b[1]
            vext[2, dst_idx] = b[2] * fac

        if self.bc[0] == "periodic":
            vext[:, 0:2] = vint[:, n - 2:n]
        elif self.bc[0] == "wall":
            mirror(0, 1)
            mirror(1, 0)
        else:
            transmissive([0, 1], 2)
        if self.bc[1] == "periodic":
            vext[:, -2:] = vint[:, 0:2]
        elif self.bc[1] == "wall":
            mirror(n - 1, n + 2)
            mirror(n - 2, n + 3)
        else:
            transmissive([n + 2, n + 3], n + 1)
        return vext

    # -- semi-discrete operator --------------------------------------------

    def rhs(self, q, t=0.0):
        grid, cfg, eos = self.grid, self.config, self.eos
        n, dx = grid.n, grid.dx
        vint = state.cons_to_prim(q, eos)
        vext = self._fill_ghosts(vint)
        phi = self.phi_ext
        if cfg.scheme == "wb":
            ff = sweeps.wb_face_fluxes(vext, phi, eos, cfg.kappa, cfg.recon)
            theta = vint[2] / vint[0]
            s_mom, s_en = source_mod.wb_source_1d(
                vint[2], theta, vint[1], phi[1:-3], phi[2:-2], phi[3:-1], dx
            )
        else:
            qext = state.prim_to_cons(vext, eos)
            ff = sweeps.nwb_face_fluxes(qext, eos, cfg.kappa, cfg.recon)
            s_mom, s_en = source_mod.nwb_source_1d(
                vint[0], vint[1], phi[1:-3], phi[3:-1], dx
            )
        dqdt = -(ff[:, 1:] - ff[:, :-1]) / dx
        dqdt[1] += s_mom
        dqdt[2] += s_en
        return dqdt

    # -- time stepping -------------------------------------------------------

    def cfl_dt(self, q=None):
        v = self.primitive(q)
        c = self.eos.sound_speed(v[0], v[2])
        return self.config.cfl * self.grid.dx / float(np.max(np.abs(v[1]) + c))

    def step(self, dt):
        """One SSP-RK3 step of size dt (frozen across stages)."""
        q0, t = self.q, self.t
        q1 = q0 + dt * self.rhs(q0, t)
        q2 = 0.75 * q0 + 0.25 * (q1 + dt * self.rhs(q1, t + dt))
        self.q = (q0 + 2.0 * (q2 + dt * self.rhs(q2, t + 0.5 * dt))) / 3.0
        self.t = t + dt
        self.n_steps += 1

    def advance(self, t_final=None, n_steps=None, callback=None):
        """Run to t_final (last step clipped) or for a fixed number of steps."""
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
