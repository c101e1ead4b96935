"""Euler fluxes and HLLC properties."""

import numpy as np
import pytest

from gravfv.errors import ConfigError
from gravfv.eos import IdealGas, VanDerWaals
from gravfv.flux import hllc, physical_flux, wave_speeds

IDEAL = IdealGas(R=1.0, gamma=1.4)


def test_physical_flux_hand_values():
    # rho = u = p = 1, gamma = 1.4: E = 1/0.4 + 1/2 = 3, flux = (1, 2, 4)
    f = physical_flux(np.array([[1.0], [1.0], [1.0]]), IDEAL)
    assert np.allclose(f[:, 0], [1.0, 2.0, 4.0], rtol=1e-15)


def test_physical_flux_2d_axes():
    v = np.array([[2.0], [1.0], [3.0], [1.0]])  # rho, u, v, p
    E = 1.0 / 0.4 + 0.5 * 2.0 * (1.0 + 9.0)
    fx = physical_flux(v, IDEAL, axis=0)
    assert np.allclose(fx[:, 0], [2.0, 2.0 + 1.0, 6.0, (E + 1.0) * 1.0])
    fy = physical_flux(v, IDEAL, axis=1)
    assert np.allclose(fy[:, 0], [6.0, 6.0, 18.0 + 1.0, (E + 1.0) * 3.0])


@pytest.mark.parametrize("estimate", ["pressure", "davis"])
def test_hllc_consistency(estimate):
    rng = np.random.default_rng(31)
    v = np.empty((3, 20))
    v[0] = rng.uniform(0.2, 2.0, 20)
    v[1] = rng.normal(0.0, 0.5, 20)
    v[2] = rng.uniform(0.5, 3.0, 20)
    f = hllc(v, v, IDEAL, estimate=estimate)
    assert np.allclose(f, physical_flux(v, IDEAL), rtol=1e-12, atol=1e-13)


@pytest.mark.parametrize("estimate", ["pressure", "davis"])
def test_hllc_resolves_stationary_contact(estimate):
    # u = 0 on both sides with equal pressure: flux is exactly (0, p, 0)
    vL = np.array([[1.0], [0.0], [2.0]])
    vR = np.array([[5.0], [0.0], [2.0]])
    f = hllc(vL, vR, IDEAL, estimate=estimate)
    assert np.allclose(f[:, 0], [0.0, 2.0, 0.0], atol=1e-14)


def test_hllc_supersonic_upwinds():
    vL = np.array([[1.0], [10.0], [1.0]])
    vR = np.array([[0.5], [10.0], [0.8]])
    assert np.allclose(hllc(vL, vR, IDEAL), physical_flux(vL, IDEAL), rtol=1e-14)
    vL[1] = vR[1] = -10.0
    assert np.allclose(hllc(vL, vR, IDEAL), physical_flux(vR, IDEAL), rtol=1e-14)


def test_hllc_mirror_symmetry():
    vL = np.array([[1.0], [0.3], [1.0]])
    vR = np.array([[0.7], [-0.2], [1.4]])
    f = hllc(vL, vR, IDEAL)
    mL = vR.copy()
    mL[1] = -vR[1]
    mR = vL.copy()
    mR[1] = -vL[1]
    g = hllc(mL, mR, IDEAL)
    assert np.allclose(g[0], -f[0], atol=1e-14)
    assert np.allclose(g[1], f[1], atol=1e-14)
    assert np.allclose(g[2], -f[2], atol=1e-14)


def test_wave_speeds_bracket_and_options():
    vL = np.array([[1.0], [0.0], [1.0]])
    vR = np.array([[1.0], [0.0], [1.0]])
    c = np.sqrt(1.4)
    for estimate in ("pressure", "davis"):
        sL, sR = wave_speeds(vL, vR, IDEAL, estimate=estimate)
        # equal states: p* = p, so both estimates give the acoustic speeds
        assert np.isclose(sL[0], -c) and np.isclose(sR[0], c)
    # colliding streams raise p* above both pressures, so the shock correction
    # pushes each estimate beyond its own one-sided acoustic speed
    vL = np.array([[1.0], [2.0], [1.0]])
    vR = np.array([[1.0], [-2.0], [1.0]])
    sLp, sRp = wave_speeds(vL, vR, IDEAL, estimate="pressure")
    assert sLp[0] < vL[1, 0] - c and sRp[0] > vR[1, 0] + c
    with pytest.raises(ConfigError):
        wave_speeds(vL, vR, IDEAL, estimate="roe")


def test_hllc_contact_with_real_gas():
    eos = VanDerWaals(a=0.4, b=0.001, M=1.0, Ru=1.0, gamma=1.4)
    vL = np.array([[0.4], [0.0], [1.2]])
    vR = np.array([[0.9], [0.0], [1.2]])
    f = hllc(vL, vR, eos)
    assert np.allclose(f[:, 0], [0.0, 1.2, 0.0], atol=1e-14)
