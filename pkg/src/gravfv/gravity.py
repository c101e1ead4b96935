"""Gravitational potentials and the face-relative psi machinery.

The scheme never stores a global psi.  For every face it measures the
psi of nearby cells relative to that face by integrating the
piecewise-linear potential (nodal values, face value = arithmetic mean
of the neighbours) against a piecewise-constant theta = p/rho.  Only
potential differences ever enter, so the gauge of phi is irrelevant.
"""

from typing import NamedTuple

import numpy as np

from .errors import ConfigError, InvalidThermodynamicState


class Potential:
    """Analytic gravitational potential with an optional gradient."""

    def __init__(self, name, fn, grad=None, dim=1, params=None):
        self.name = name
        self._fn = fn
        self._grad = grad
        self.dim = dim
        self.params = dict(params or {})

    def __call__(self, *coords):
        if len(coords) != self.dim:
            raise ConfigError(
                f"potential '{self.name}' expects {self.dim} coordinate(s)"
            )
        return self._fn(*coords)

    def grad(self, *coords):
        if self._grad is None:
            raise ConfigError(f"potential '{self.name}' has no analytic gradient")
        return self._grad(*coords)

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.params.items())
        return f"Potential({self.name}, {args}, dim={self.dim})"


def linear(g=1.0, gy=None):
    """phi = g*x in 1D; phi = g*x + gy*y when gy is given."""
    if gy is None:
        return Potential(
            "linear",
            lambda x: g * np.asarray(x, dtype=float),
            lambda x: np.full_like(np.asarray(x, dtype=float), g),
            dim=1,
            params={"g": g},
        )
    return Potential(
        "linear",
        lambda x, y: g * np.asarray(x, dtype=float) + gy * np.asarray(y, dtype=float),
        lambda x, y: (
            np.full_like(np.asarray(x, dtype=float), g),
            np.full_like(np.asarray(y, dtype=float), gy),
        ),
        dim=2,
        params={"g": g, "gy": gy},
    )


def quadratic(k=1.0):
    """phi = k*x^2/2."""
    return Potential(
        "quadratic",
        lambda x: 0.5 * k * np.asarray(x, dtype=float) ** 2,
        lambda x: k * np.asarray(x, dtype=float),
        dim=1,
        params={"k": k},
    )


def sine(amplitude=1.0, length=1.0):
    """phi = amplitude * sin(2*pi*x/length)."""
    w = 2.0 * np.pi / length
    return Potential(
        "sine",
        lambda x: amplitude * np.sin(w * np.asarray(x, dtype=float)),
        lambda x: amplitude * w * np.cos(w * np.asarray(x, dtype=float)),
        dim=1,
        params={"amplitude": amplitude, "length": length},
    )


def radial(g=1.0):
    """phi = g * sqrt(x^2 + y^2) (no gradient at the origin)."""
    return Potential(
        "radial",
        lambda x, y: g * np.sqrt(np.asarray(x, dtype=float) ** 2 + np.asarray(y, dtype=float) ** 2),
        None,
        dim=2,
        params={"g": g},
    )


def constant_g_y(g=9.8):
    """phi = g*y: uniform downward gravity in 2D."""
    return Potential(
        "constant-g-y",
        lambda x, y: g * np.asarray(y, dtype=float) + 0.0 * np.asarray(x, dtype=float),
        lambda x, y: (np.zeros_like(np.asarray(x, dtype=float)), np.full_like(np.asarray(y, dtype=float), g)),
        dim=2,
        params={"g": g},
    )


def constant(value=0.0, dim=1):
    """phi = const: gravity switched off."""
    if dim == 1:
        return Potential(
            "constant",
            lambda x: np.full_like(np.asarray(x, dtype=float), value),
            lambda x: np.zeros_like(np.asarray(x, dtype=float)),
            dim=1,
            params={"value": value},
        )
    return Potential(
        "constant",
        lambda x, y: np.full_like(np.asarray(x, dtype=float), value),
        lambda x, y: (np.zeros_like(np.asarray(x, dtype=float)), np.zeros_like(np.asarray(y, dtype=float))),
        dim=2,
        params={"value": value},
    )


class TabulatedPotential1D:
    """Nodal potential read from a table; linear interpolation/extrapolation."""

    name = "tabulated"
    dim = 1

    def __init__(self, x, phi):
        x = np.asarray(x, dtype=float)
        phi = np.asarray(phi, dtype=float)
        if x.ndim != 1 or x.shape != phi.shape or x.size < 2:
            raise ConfigError("tabulated potential needs matching 1-D x and phi")
        if not np.all(np.diff(x) > 0):
            raise ConfigError("tabulated potential abscissae must increase")
        self.x = x
        self.phi = phi
        self.params = {"points": int(x.size)}

    def __call__(self, xq):
        xq = np.asarray(xq, dtype=float)
        out = np.interp(xq, self.x, self.phi)
        # linear extrapolation past the table ends
        s0 = (self.phi[1] - self.phi[0]) / (self.x[1] - self.x[0])
        s1 = (self.phi[-1] - self.phi[-2]) / (self.x[-1] - self.x[-2])
        out = np.where(xq < self.x[0], self.phi[0] + s0 * (xq - self.x[0]), out)
        out = np.where(xq > self.x[-1], self.phi[-1] + s1 * (xq - self.x[-1]), out)
        return out

    def grad(self, *coords):
        raise ConfigError("tabulated potential has no analytic gradient")


def potential_from_csv(path):
    """Load a 1-D tabulated potential from a CSV file with columns x, phi."""
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    if data.shape[1] < 2:
        raise ConfigError(f"potential CSV {path!r} needs two columns: x, phi")
    return TabulatedPotential1D(data[:, 0], data[:, 1])


_BUILTINS = {
    "linear": linear,
    "quadratic": quadratic,
    "sine": sine,
    "radial": radial,
    "constant-g-y": constant_g_y,
    "constant_g_y": constant_g_y,
    "constant": constant,
}


def make_potential(name, **params):
    """Construct a potential from a config-style name.

    Builtin names: linear, quadratic, sine, radial, constant-g-y, constant.
    'csv:<path>' loads nodal values from a file.
    """
    name = str(name).strip()
    if name.startswith("csv:"):
        return potential_from_csv(name[4:])
    try:
        builder = _BUILTINS[name.lower()]
    except KeyError:
        raise ConfigError(f"unknown potential: {name!r}") from None
    return builder(**params)


class PsiStencil(NamedTuple):
    """Face-relative psi of the four cells around one face (psi_face = 0)."""

    m1: np.ndarray
    c0: np.ndarray
    p1: np.ndarray
    p2: np.ndarray


def psi_stencil(phi_m1, phi_0, phi_p1, phi_p2, th_m1, th_0, th_p1, th_p2):
    """psi of cells i-1, i, i+1, i+2 relative to the face between i and i+1.

    phi_* are the nodal potentials of the four cells, th_* their theta
    values.  Face potentials are averages of adjacent nodes, so psi is the
    exact integral of phi_h'/theta_h from each cell node to the face.
    """
    for th in (th_m1, th_0, th_p1, th_p2):
        if not np.all(np.asarray(th) > 0.0):
            raise InvalidThermodynamicState("theta must be positive in psi stencil")
    f_m = 0.5 * (np.asarray(phi_m1, dtype=float) + np.asarray(phi_0, dtype=float))
    f_0 = 0.5 * (np.asarray(phi_0, dtype=float) + np.asarray(phi_p1, dtype=float))
    f_p = 0.5 * (np.asarray(phi_p1, dtype=float) + np.asarray(phi_p2, dtype=float))
    psi_0 = -(phi_0 - f_0) / th_0
    psi_1 = -(phi_p1 - f_0) / th_p1
    psi_m = -(phi_m1 - f_m) / th_m1 - (f_m - f_0) / th_0
    psi_p = -(phi_p2 - f_p) / th_p2 - (f_p - f_0) / th_p1
    return PsiStencil(psi_m, psi_0, psi_1, psi_p)


def hydrostatic_face_pressures(p, theta, phi_m1, phi_0, phi_p1):
    """Local hydrostatic extrapolation of cell pressure to both faces.

    Returns (pbar_plus, pbar_minus): the pressure of cell i carried in
    local equilibrium to faces i+1/2 and i-1/2.
    """
    p = np.asarray(p, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if not np.all(theta > 0.0):
        raise InvalidThermodynamicState("theta must be positive")
    pbar_plus = p * np.exp(-(np.asarray(phi_p1, dtype=float) - phi_0) / (2.0 * theta))
    pbar_minus = p * np.exp((np.asarray(phi_0, dtype=float) - phi_m1) / (2.0 * theta))
    return pbar_plus, pbar_minus
