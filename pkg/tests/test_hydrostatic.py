"""Equilibrium generator, references, and the linearized acoustics oracle."""

import numpy as np
import pytest

from gravfv import gravity, hydrostatic
from gravfv.eos import IdealGas, VanDerWaals
from gravfv.errors import ConfigError

IDEAL = IdealGas(R=1.0, gamma=1.4)
VDW = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)


def test_isothermal_discrete_equals_exact():
    # for an isothermal ideal gas the recurrence reproduces exp(-phi/(R*T))
    # exactly, on any grid and for any potential
    for pot in (gravity.linear(1.0), gravity.sine(0.5, 1.0)):
        x = np.linspace(0.0, 1.0, 37)
        phi = np.asarray(pot(x), dtype=float)
        prof = hydrostatic.discrete_hydrostatic(IDEAL, x, phi, 1.0,
                                                pressure=np.exp(-phi[0]))
        assert np.allclose(prof.p, np.exp(-phi), rtol=1e-13)
        assert np.allclose(prof.rho, np.exp(-phi), rtol=1e-13)


def test_discrete_recurrence_residual():
    x = np.linspace(0.0, 1.0, 50)
    phi = x
    T = 1.0 - 0.2 * x
    prof = hydrostatic.discrete_hydrostatic(IDEAL, x, phi, T, pressure=1.0)
    assert recur_max(prof, phi) < 1e-14
    # the pointwise closed form does not satisfy the discrete recurrence
    exact = hydrostatic.polytropic_profile(IDEAL, x, phi, 1.4, pressure=1.0)
    assert recur_max(exact, phi) > 1e-7


def recur_max(prof, phi):
    return float(np.max(hydrostatic.recurrence_residual(prof, phi)))


def test_anchor_forms_agree():
    x = np.linspace(0.0, 1.0, 21)
    by_p = hydrostatic.discrete_hydrostatic(IDEAL, x, x, 1.0, pressure=2.0)
    by_rho = hydrostatic.discrete_hydrostatic(IDEAL, x, x, 1.0, density=2.0)
    assert np.allclose(by_p.rho, by_rho.rho, rtol=1e-13)
    with pytest.raises(ConfigError):
        hydrostatic.discrete_hydrostatic(IDEAL, x, x, 1.0)
    with pytest.raises(ConfigError):
        hydrostatic.discrete_hydrostatic(IDEAL, x, x, 1.0, pressure=1.0,
                                         density=1.0)


def test_interior_anchor_marches_both_ways():
    x = np.linspace(0.0, 1.0, 31)
    prof = hydrostatic.discrete_hydrostatic(IDEAL, x, x, 1.0, anchor_index=15,
                                            pressure=1.0)
    assert np.isclose(prof.p[15], 1.0)
    assert recur_max(prof, x) < 1e-14
    assert np.all(np.diff(prof.p) < 0)  # pressure decreases uphill


def test_polytropic_profile_closed_form():
    x = np.linspace(0.0, 1.0, 11)
    prof = hydrostatic.polytropic_profile(IDEAL, x, x, 1.4, pressure=1.0)
    T = 1.0 - (0.4 / 1.4) * x
    assert np.allclose(prof.T, T, rtol=1e-15)
    assert np.allclose(prof.rho, T ** 2.5, rtol=1e-13)
    assert np.allclose(prof.p, T ** 3.5, rtol=1e-13)
    # p = K rho^nu with constant K
    K = prof.p / prof.rho**1.4
    assert np.allclose(K, K[0], rtol=1e-13)


def test_ode_reference_matches_closed_forms():
    pot = gravity.linear(1.0)
    x = np.linspace(0.0, 1.0, 26)
    rk4 = hydrostatic.ode_reference(IDEAL, pot, x, 1.0, pressure=1.0,
                                    refinement=32)
    assert np.allclose(rk4.p, np.exp(-x), rtol=1e-10)
    short = hydrostatic.ode_reference(IDEAL, pot, x, 1.0, pressure=1.0,
                                      assume="isothermal")
    assert np.allclose(short.p, np.exp(-x), rtol=1e-15)
    T_poly = lambda s: 1.0 - (0.4 / 1.4) * np.asarray(s)
    rk4 = hydrostatic.ode_reference(IDEAL, pot, x, T_poly, pressure=1.0,
                                    refinement=32)
    closed = hydrostatic.ode_reference(IDEAL, pot, x, 1.0, pressure=1.0,
                                       assume=("polytropic", 1.4))
    assert np.allclose(rk4.p, closed.p, rtol=1e-10)


def test_discrete_converges_to_ode_second_order():
    pot = gravity.linear(1.0)
    errs = []
    for n in (51, 101):
        x = np.linspace(0.0, 1.0, n)
        disc = hydrostatic.discrete_hydrostatic(VDW, x, x, 1.0, density=1.0)
        ref = hydrostatic.ode_reference(VDW, pot, x, 1.0, density=1.0,
                                        refinement=64)
        errs.append(np.max(np.abs(disc.rho - ref.rho)))
    rate = np.log2(errs[0] / errs[1])
    assert 1.8 < rate < 2.2


def test_vdw_discrete_anchor_value():
    x = np.linspace(0.0, 1.0, 101)
    prof = hydrostatic.discrete_hydrostatic(VDW, x, x, 1.0, density=1.0)
    assert np.isclose(prof.rho[0], 1.0)
    assert np.isclose(prof.p[0], 1.0 / 0.999 - 0.4, rtol=1e-14)
    assert recur_max(prof, x) < 1e-13
    assert np.allclose(prof.T, 1.0)


def test_linearized_oracle_dalembert():
    # no gravity, uniform base with c = 1: an initial pressure bump splits
    # into two half-amplitude pulses moving at unit speed
    pot = gravity.linear(0.0)
    n = 2001
    x = np.linspace(0.0, 1.0, n)
    base = hydrostatic.HydrostaticProfile(
        x, np.ones(n), np.full(n, 1.0 / 1.4), np.full(n, 1.0 / 1.4))
    bump = lambda s: np.exp(-(np.asarray(s) - 0.5) ** 2 / 0.002)
    dp0 = bump(x)
    t = 0.15
    drho, du, dp = hydrostatic.linearized_euler_1d(IDEAL, pot, base, dp0, t)
    expect = 0.5 * (bump(x - t) + bump(x + t))
    assert np.max(np.abs(dp - expect)) < 5e-3 * dp0.max()


def test_linearized_oracle_hydrostatic_base_stays_put():
    pot = gravity.linear(1.0)
    x = np.linspace(0.0, 1.0, 501)
    base = hydrostatic.isothermal_profile(IDEAL, x, x, 1.0, pressure=1.0)
    drho, du, dp = hydrostatic.linearized_euler_1d(IDEAL, pot, base,
                                                   np.zeros_like(x), 0.1)
    assert np.max(np.abs(dp)) < 1e-14
    assert np.max(np.abs(du)) < 1e-14
