"""Equations of state in the split form p = rho * theta.

theta is the pressure-to-density ratio viewed as a thermodynamic
function: R*T for an ideal gas, theta(rho, T) for a van der Waals gas
and theta(p, T) for an ideal gas with radiation pressure.  Everything
is vectorized over numpy arrays, computes in float64 and raises on
invalid thermodynamic states rather than clamping.
"""

import numpy as np

from .errors import (
    ConfigError,
    InvalidThermodynamicState,
    InversionFailure,
    LossOfHyperbolicity,
)

NEWTON_TOL = 1e-13
NEWTON_MAXITER = 100


def _check(ok, message):
    if not np.all(ok):
        raise InvalidThermodynamicState(message)


def solve_increasing(f, df, x0, lo, hi, what, tol=NEWTON_TOL, maxiter=NEWTON_MAXITER):
    """Safeguarded Newton iteration for a monotonically increasing map.

    Vectorized: every argument may be an array.  [lo, hi] must bracket the
    root; Newton iterates that leave the current bracket (or fail to be
    finite) are replaced by bisection.  Convergence is a relative change
    <= tol on the unknown.
    """
    x, lo, hi = (np.array(a, dtype=float) for a in np.broadcast_arrays(x0, lo, hi))
    for _ in range(maxiter):
        fx = f(x)
        hi = np.where(fx > 0.0, x, hi)
        lo = np.where(fx <= 0.0, x, lo)
        with np.errstate(divide="ignore", invalid="ignore"):
            xn = x - fx / df(x)
        fallback = ~np.isfinite(xn) | (xn < lo) | (xn > hi)
        xn = np.where(fallback, 0.5 * (lo + hi), xn)
        done = np.abs(xn - x) <= tol * np.maximum(np.abs(x), np.abs(xn))
        x = xn
        if done.all():
            return x
    raise InversionFailure(f"{what}: no convergence after {maxiter} iterations")


class IdealGas:
    """Ideal gas, p = rho*R*T, with a constant specific-heat ratio."""

    variant = "ideal"
    theta_arg = "p"  # theta(p, T); actually independent of p

    def __init__(self, R=1.0, gamma=1.4):
        if not (R > 0.0 and gamma > 1.0):
            raise InvalidThermodynamicState("ideal gas requires R > 0 and gamma > 1")
        self.R = float(R)
        self.gamma = float(gamma)

    def theta(self, T, p=None, rho=None):
        T = np.asarray(T, dtype=float)
        _check(T > 0.0, "temperature must be positive")
        return self.R * T

    def dtheta(self, p, T):
        """d(theta)/dp at fixed T (identically zero)."""
        return np.zeros_like(np.asarray(p, dtype=float))

    def pressure(self, rho, T):
        rho = np.asarray(rho, dtype=float)
        _check(rho > 0.0, "density must be positive")
        return rho * self.theta(T)

    def temperature(self, rho, p):
        rho, p = np.asarray(rho, dtype=float), np.asarray(p, dtype=float)
        _check(rho > 0.0, "density must be positive")
        _check(p > 0.0, "pressure must be positive")
        return p / (rho * self.R)

    def internal_energy(self, rho, T):
        """Internal energy per unit volume (no kinetic, no gravitational part)."""
        return self.pressure(rho, T) / (self.gamma - 1.0)

    def pressure_from_internal_energy(self, rho, eint):
        return (self.gamma - 1.0) * np.asarray(eint, dtype=float)

    def density_from_pT(self, p, T):
        return np.asarray(p, dtype=float) / (self.R * np.asarray(T, dtype=float))

    def sound_speed(self, rho, p):
        rho, p = np.asarray(rho, dtype=float), np.asarray(p, dtype=float)
        rad = self.gamma * p / rho
        if not np.all(rad > 0.0):
            raise LossOfHyperbolicity("gamma*p/rho must be positive")
        return np.sqrt(rad)


class VanDerWaals:
    """Van der Waals gas with constant specific heat (attraction a, covolume b)."""

    variant = "van_der_waals"
    theta_arg = "rho"  # theta(rho, T)

    def __init__(self, a=0.0, b=0.0, M=1.0, Ru=1.0, gamma=1.4):
        if not (M > 0.0 and Ru > 0.0 and gamma > 1.0 and a >= 0.0 and b >= 0.0):
            raise InvalidThermodynamicState("invalid van der Waals parameters")
        self.a = float(a)
        self.b = float(b)
        self.M = float(M)
        self.Ru = float(Ru)
        self.gamma = float(gamma)

    @property
    def rho_max(self):
        return self.M / self.b if self.b > 0.0 else np.inf

    def _check_rho(self, rho):
        _check(rho > 0.0, "density must be positive")
        if self.b > 0.0:
            _check(rho < self.rho_max, "covolume bound exceeded: need rho < M/b")

    def theta(self, T, p=None, rho=None):
        if rho is None:
            raise InvalidThermodynamicState("van der Waals theta needs (rho, T)")
        rho, T = np.asarray(rho, dtype=float), np.asarray(T, dtype=float)
        self._check_rho(rho)
        _check(T > 0.0, "temperature must be positive")
        return self.Ru * T / (self.M - rho * self.b) - self.a * rho / self.M**2

    def dtheta(self, rho, T):
        """d(theta)/d(rho) at fixed T."""
        rho = np.asarray(rho, dtype=float)
        return self.Ru * T * self.b / (self.M - rho * self.b) ** 2 - self.a / self.M**2

    def pressure(self, rho, T):
        return np.asarray(rho, dtype=float) * self.theta(T, rho=rho)

    def dpressure_drho(self, rho, T):
        rho = np.asarray(rho, dtype=float)
        return (
            self.Ru * T * self.M / (self.M - rho * self.b) ** 2
            - 2.0 * self.a * rho / self.M**2
        )

    def dpressure_dT(self, rho, T):
        rho = np.asarray(rho, dtype=float)
        return rho * self.Ru / (self.M - rho * self.b)

    def temperature(self, rho, p):
        rho, p = np.asarray(rho, dtype=float), np.asarray(p, dtype=float)
        self._check_rho(rho)
        shifted = p + self.a * rho**2 / self.M**2
        _check(shifted > 0.0, "p + a*rho^2/M^2 must be positive")
        return shifted * (self.M - rho * self.b) / (rho * self.Ru)

    def internal_energy(self, rho, T):
        rho, T = np.asarray(rho, dtype=float), np.asarray(T, dtype=float)
        self._check_rho(rho)
        _check(T > 0.0, "temperature must be positive")
        return (
            rho * self.Ru * T / (self.M * (self.gamma - 1.0))
            - self.a * (rho / self.M) ** 2
        )

    def pressure_from_internal_energy(self, rho, eint):
        rho, eint = np.asarray(rho, dtype=float), np.asarray(eint, dtype=float)
        self._check_rho(rho)
        T = (
            (eint + self.a * (rho / self.M) ** 2)
            * self.M
            * (self.gamma - 1.0)
            / (rho * self.Ru)
        )
        _check(T > 0.0, "temperature recovered from internal energy is non-positive")
        return self.pressure(rho, T)

    def density_from_pT(self, p, T):
        p, T = np.asarray(p, dtype=float), np.asarray(T, dtype=float)
        _check(p > 0.0, "pressure must be positive")
        _check(T > 0.0, "temperature must be positive")

        def f(rho):  # raw formula so probe points need not be physical
            return (
                rho * self.Ru * T / (self.M - rho * self.b)
                - self.a * (rho / self.M) ** 2
                - p
            )

        def df(rho):
            return (
                self.Ru * T * self.M / (self.M - rho * self.b) ** 2
                - 2.0 * self.a * rho / self.M**2
            )

        guess = p * self.M / (self.Ru * T + p * self.b)
        hi_cap = self.rho_max * (1.0 - 1e-12) if self.b > 0.0 else np.inf
        hi = np.minimum(2.0 * guess, hi_cap)
        for _ in range(60):
            if np.all(f(hi) > 0.0):
                break
            hi = np.minimum(2.0 * hi, hi_cap)
        lo = np.zeros_like(np.asarray(guess, dtype=float))
        rho = solve_increasing(
            f, df, np.minimum(guess, hi), lo, hi, "van der Waals density from (p, T)"
        )
        self._check_rho(rho)
        return rho

    def sound_speed(self, rho, p):
        # c^2 = dp/drho|_T + T (dp/dT|_rho)^2 / (rho^2 cv), written in (rho, p)
        rho, p = np.asarray(rho, dtype=float), np.asarray(p, dtype=float)
        self._check_rho(rho)
        rad = self.gamma * self.M * (p + self.a * rho**2 / self.M**2) / (
            rho * (self.M - rho * self.b)
        ) - 2.0 * self.a * rho / self.M**2
        if not np.all(rad > 0.0):
            raise LossOfHyperbolicity("van der Waals sound-speed radicand non-positive")
        return np.sqrt(rad)


class IdealGasRadiation:
    """Ideal gas plus equilibrium radiation pressure, p = rho*R*T + a_rad*T^4/3.

    The sound speed uses the gas-only surrogate sqrt(gamma*p/rho), which is
    an upper-bound approximation adequate for wave-speed estimates; it is not
    the exact characteristic speed of the mixture.
    """

    variant = "ideal_radiation"
    theta_arg = "p"  # theta(p, T)

    def __init__(self, R=1.0, gamma=1.4, a_rad=0.0):
        if not (R > 0.0 and gamma > 1.0 and a_rad >= 0.0):
            raise InvalidThermodynamicState(
                "radiation gas requires R > 0, gamma > 1, a_rad >= 0"
            )
        self.R = float(R)
        self.gamma = float(gamma)
        self.a_rad = float(a_rad)

    def _prad(self, T):
        return self.a_rad * np.asarray(T, dtype=float) ** 4 / 3.0

    def theta(self, T, p=None, rho=None):
        if p is None:
            raise InvalidThermodynamicState("radiation theta needs (p, T)")
        p, T = np.asarray(p, dtype=float), np.asarray(T, dtype=float)
        _check(T > 0.0, "temperature must be positive")
        prad = self._prad(T)
        _check(p > prad, "radiation pressure must stay below the total pressure")
        return p * self.R * T / (p - prad)

    def dtheta(self, p, T):
        """d(theta)/dp at fixed T."""
        p, T = np.asarray(p, dtype=float), np.asarray(T, dtype=float)
        prad = self._prad(T)
        return -self.R * T * prad / (p - prad) ** 2

    def pressure(self, rho, T):
        rho, T = np.asarray(rho, dtype=float), np.asarray(T, dtype=float)
        _check(rho > 0.0, "density must be positive")
        _check(T > 0.0, "temperature must be positive")
        return rho * self.R * T + self._prad(T)

    def temperature(self, rho, p):
        rho, p = np.asarray(rho, dtype=float), np.asarray(p, dtype=float)
        _check(rho > 0.0, "density must be positive")
        _check(p > 0.0, "pressure must be positive")
        if self.a_rad == 0.0:
            return p / (rho * self.R)
        hi = np.minimum(p / (rho * self.R), (3.0 * p / self.a_rad) ** 0.25)
        return solve_increasing(
            lambda T: rho * self.R * T + self._prad(T) - p,
            lambda T: rho * self.R + 4.0 * self.a_rad * T**3 / 3.0,
            hi,
            np.zeros_like(hi),
            hi,
            "radiation temperature from (rho, p)",
        )

    def internal_energy(self, rho, T):
        rho, T = np.asarray(rho, dtype=float), np.asarray(T, dtype=float)
        _check(rho > 0.0, "density must be positive")
        _check(T > 0.0, "temperature must be positive")
        return rho * self.R * T / (self.gamma - 1.0) + self.a_rad * T**4

    def pressure_from_internal_energy(self, rho, eint):
        rho, eint = np.asarray(rho, dtype=float), np.asarray(eint, dtype=float)
        _check(rho > 0.0, "density must be positive")
        _check(eint > 0.0, "internal energy must be positive")
        if self.a_rad == 0.0:
            return (self.gamma - 1.0) * eint
        gas = rho * self.R / (self.gamma - 1.0)
        hi = np.minimum(eint / gas, (eint / self.a_rad) ** 0.25)
        T = solve_increasing(
            lambda T: gas * T + self.a_rad * T**4 - eint,
            lambda T: gas + 4.0 * self.a_rad * T**3,
            hi,
            np.zeros_like(hi),
            hi,
            "radiation temperature from internal energy",
        )
        return self.pressure(rho, T)

    def density_from_pT(self, p, T):
        p, T = np.asarray(p, dtype=float), np.asarray(T, dtype=float)
        prad = self._prad(T)
        _check(p > prad, "radiation pressure must stay below the total pressure")
        return (p - prad) / (self.R * T)

    def sound_speed(self, rho, p):
        rho, p = np.asarray(rho, dtype=float), np.asarray(p, dtype=float)
        rad = self.gamma * p / rho
        if not np.all(rad > 0.0):
            raise LossOfHyperbolicity("gamma*p/rho must be positive")
        return np.sqrt(rad)


_ALIASES = {
    "ideal": "ideal",
    "ideal_gas": "ideal",
    "vdw": "van_der_waals",
    "van_der_waals": "van_der_waals",
    "van-der-waals": "van_der_waals",
    "radiation": "ideal_radiation",
    "ideal_radiation": "ideal_radiation",
    "ideal-radiation": "ideal_radiation",
}


def make_eos(variant, **params):
    """Construct an equation of state from a config-style name and parameters."""
    key = _ALIASES.get(str(variant).strip().lower())
    if key == "ideal":
        return IdealGas(**params)
    if key == "van_der_waals":
        return VanDerWaals(**params)
    if key == "ideal_radiation":
        return IdealGasRadiation(**params)
    raise ConfigError(f"unknown equation of state variant: {variant!r}")
