"""Equation-of-state round trips, derivatives, and guard rails."""

import numpy as np
import pytest

from gravfv.eos import (
    IdealGas,
    IdealGasRadiation,
    VanDerWaals,
    make_eos,
    solve_increasing,
)
from gravfv.errors import (
    ConfigError,
    InvalidThermodynamicState,
    InversionFailure,
    LossOfHyperbolicity,
)


def test_solve_increasing_cube_root():
    f = lambda x: x**3 - 2.0
    df = lambda x: 3.0 * x**2
    x = solve_increasing(f, df, np.array([1.0, 5.0]), np.array([0.0, 0.0]),
                         np.array([10.0, 10.0]), "cube root")
    assert np.allclose(x, 2.0 ** (1.0 / 3.0), rtol=1e-14)


def test_solve_increasing_reports_failure():
    # df = 0 everywhere and f never crosses zero inside the bracket
    f = lambda x: np.asarray(x) * 0.0 + 1.0
    df = lambda x: np.asarray(x) * 0.0
    with pytest.raises(InversionFailure):
        solve_increasing(f, df, np.array([0.5]), np.array([0.0]),
                         np.array([1.0]), "flat", maxiter=8)


# -- ideal gas ---------------------------------------------------------------

def test_ideal_gas_round_trips():
    eos = IdealGas(R=1.0, gamma=1.4)
    rng = np.random.default_rng(3)
    rho = rng.uniform(0.1, 5.0, 40)
    T = rng.uniform(0.2, 4.0, 40)
    p = eos.pressure(rho, T)
    assert np.allclose(p, rho * T, rtol=1e-15)
    assert np.allclose(eos.temperature(rho, p), T, rtol=1e-14)
    assert np.allclose(eos.density_from_pT(p, T), rho, rtol=1e-14)
    e = eos.internal_energy(rho, T)
    assert np.allclose(e, p / 0.4, rtol=1e-15)
    assert np.allclose(eos.pressure_from_internal_energy(rho, e), p, rtol=1e-15)


def test_ideal_gas_theta_is_p_over_rho():
    eos = IdealGas(R=2.0, gamma=1.4)
    rho, T = 1.3, 0.7
    p = eos.pressure(rho, T)
    assert np.isclose(eos.theta(T, p=p), p / rho, rtol=1e-15)
    assert eos.dtheta(p, T) == 0.0


def test_ideal_gas_sound_speed():
    eos = IdealGas(R=1.0, gamma=1.4)
    assert np.isclose(eos.sound_speed(1.0, 1.0), np.sqrt(1.4), rtol=1e-15)


def test_ideal_gas_rejects_nonpositive():
    eos = IdealGas()
    with pytest.raises(InvalidThermodynamicState):
        eos.pressure(np.array([-1.0]), np.array([1.0]))
    with pytest.raises(InvalidThermodynamicState):
        eos.temperature(np.array([1.0]), np.array([0.0]))


# -- van der Waals -----------------------------------------------------------

def test_vdw_theta_hand_value():
    # theta = Ru T / (M - rho b) - a rho / M^2 at rho = T = 1
    eos = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    expect = 1.0 / 0.999 - 0.4
    assert np.isclose(eos.theta(1.0, rho=1.0), expect, rtol=1e-15)
    assert np.isclose(eos.pressure(1.0, 1.0), expect, rtol=1e-15)


def test_vdw_reduces_to_ideal_when_a_b_zero():
    vdw = VanDerWaals(a=0.0, b=0.0, M=1.0, Ru=1.0, gamma=1.4)
    ideal = IdealGas(R=1.0, gamma=1.4)
    rng = np.random.default_rng(5)
    rho = rng.uniform(0.1, 3.0, 20)
    T = rng.uniform(0.2, 3.0, 20)
    assert np.allclose(vdw.pressure(rho, T), ideal.pressure(rho, T), rtol=1e-15)
    assert np.allclose(vdw.sound_speed(rho, vdw.pressure(rho, T)),
                       ideal.sound_speed(rho, ideal.pressure(rho, T)), rtol=1e-14)
    assert np.allclose(vdw.internal_energy(rho, T), ideal.internal_energy(rho, T),
                       rtol=1e-15)


def test_vdw_round_trips():
    # T >= 1 keeps rho <= 1 on the monotone branch of the isotherm, so the
    # (p, T) -> rho inversion is single-valued over the sample
    eos = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    rng = np.random.default_rng(7)
    rho = rng.uniform(0.1, 1.0, 40)
    T = rng.uniform(1.0, 2.0, 40)
    p = eos.pressure(rho, T)
    assert np.allclose(eos.temperature(rho, p), T, rtol=1e-13)
    assert np.allclose(eos.density_from_pT(p, T), rho, rtol=1e-12)
    e = eos.internal_energy(rho, T)
    assert np.allclose(eos.pressure_from_internal_energy(rho, e), p, rtol=1e-13)


def test_vdw_derivatives_match_finite_differences():
    eos = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    rho, T = 0.8, 1.3
    h = 1e-6
    dp_drho = (eos.pressure(rho + h, T) - eos.pressure(rho - h, T)) / (2 * h)
    dp_dT = (eos.pressure(rho, T + h) - eos.pressure(rho, T - h)) / (2 * h)
    assert np.isclose(eos.dpressure_drho(rho, T), dp_drho, rtol=1e-8)
    assert np.isclose(eos.dpressure_dT(rho, T), dp_dT, rtol=1e-8)
    dth = (eos.theta(T, rho=rho + h) - eos.theta(T, rho=rho - h)) / (2 * h)
    assert np.isclose(eos.dtheta(rho, T), dth, rtol=1e-8)


def test_vdw_sound_speed_thermodynamic_identity():
    # c^2 = dp/drho|_T + T (dp/dT|_rho)^2 / (rho^2 cv) with cv = Ru/(M (gamma-1))
    eos = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    rng = np.random.default_rng(11)
    rho = rng.uniform(0.1, 1.0, 30)
    T = rng.uniform(0.5, 2.0, 30)
    p = eos.pressure(rho, T)
    cv = eos.Ru / (eos.M * (eos.gamma - 1.0))
    c2 = eos.dpressure_drho(rho, T) + T * eos.dpressure_dT(rho, T) ** 2 / (rho**2 * cv)
    assert np.allclose(eos.sound_speed(rho, p) ** 2, c2, rtol=1e-13)
    # spot value at rho = T = 1
    assert np.isclose(eos.sound_speed(1.0, eos.pressure(1.0, 1.0)) ** 2,
                      0.6028042056070084, rtol=1e-14)


def test_vdw_covolume_and_spinodal_guards():
    eos = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    assert np.isclose(eos.rho_max, 1000.0)
    with pytest.raises(InvalidThermodynamicState):
        eos.pressure(np.array([1000.0]), np.array([1.0]))
    # strong attraction: c^2 < 0 inside the spinodal region
    sticky = VanDerWaals(a=10.0, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    with pytest.raises(LossOfHyperbolicity):
        sticky.sound_speed(np.array([1.0]), np.array([0.1]))


# -- ideal gas + radiation ---------------------------------------------------

def test_radiation_reduces_to_ideal_when_a_rad_zero():
    rad = IdealGasRadiation(R=1.0, gamma=1.4, a_rad=0.0)
    ideal = IdealGas(R=1.0, gamma=1.4)
    rho, T = 1.2, 0.9
    assert np.isclose(rad.pressure(rho, T), ideal.pressure(rho, T), rtol=1e-15)
    assert np.isclose(rad.internal_energy(rho, T), ideal.internal_energy(rho, T),
                      rtol=1e-15)


def test_radiation_round_trips():
    eos = IdealGasRadiation(R=1.0, gamma=1.4, a_rad=0.5)
    rng = np.random.default_rng(13)
    rho = rng.uniform(0.1, 3.0, 40)
    T = rng.uniform(0.2, 2.0, 40)
    p = eos.pressure(rho, T)
    assert np.allclose(p, rho * T + 0.5 * T**4 / 3.0, rtol=1e-15)
    assert np.allclose(eos.temperature(rho, p), T, rtol=1e-12)
    assert np.allclose(eos.density_from_pT(p, T), rho, rtol=1e-13)
    e = eos.internal_energy(rho, T)
    assert np.allclose(e, rho * T / 0.4 + 0.5 * T**4, rtol=1e-15)
    assert np.allclose(eos.pressure_from_internal_energy(rho, e), p, rtol=1e-12)


def test_radiation_theta_consistency():
    # rho * theta(T, p) must reproduce the total pressure
    eos = IdealGasRadiation(R=1.0, gamma=1.4, a_rad=0.3)
    rho, T = 0.7, 1.4
    p = eos.pressure(rho, T)
    assert np.isclose(rho * eos.theta(T, p=p), p, rtol=1e-14)


def test_radiation_sound_speed_surrogate():
    eos = IdealGasRadiation(R=1.0, gamma=1.4, a_rad=0.3)
    assert np.isclose(eos.sound_speed(2.0, 3.0), np.sqrt(1.4 * 3.0 / 2.0), rtol=1e-15)


# -- factory -----------------------------------------------------------------

def test_make_eos_aliases():
    assert isinstance(make_eos("ideal"), IdealGas)
    assert isinstance(make_eos("ideal_gas", gamma=1.67), IdealGas)
    assert isinstance(make_eos("vdw", a=0.4, b=0.001), VanDerWaals)
    assert isinstance(make_eos("van-der-waals"), VanDerWaals)
    assert isinstance(make_eos("radiation", a_rad=0.1), IdealGasRadiation)
    assert make_eos("ideal", gamma=1.67).gamma == 1.67


def test_make_eos_rejects_unknown():
    with pytest.raises(ConfigError):
        make_eos("stiffened")
    with pytest.raises(TypeError):
        make_eos("ideal", covolume=0.1)
