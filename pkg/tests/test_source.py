"""Gravity source terms: hand values, equilibrium cancellation, consistency."""

import numpy as np

from gravfv.eos import IdealGas
from gravfv.source import nwb_source_1d, wb_source_1d


def test_wb_source_hand_value():
    # p = theta = 1, phi = x on unit spacing: s = e^{-1/2} - e^{1/2}
    s, se = wb_source_1d(1.0, 1.0, 2.0, -1.0, 0.0, 1.0, 1.0)
    expect = np.exp(-0.5) - np.exp(0.5)
    assert np.isclose(s, expect, rtol=1e-15)
    assert np.isclose(se, 2.0 * expect, rtol=1e-15)
    assert np.isclose(s, -1.0421906109874948, rtol=1e-15)


def test_nwb_source_is_central_difference():
    s, se = nwb_source_1d(2.0, 3.0, 0.1, 0.5, 0.25)
    assert np.isclose(s, -2.0 * 0.4 / 0.5)
    assert np.isclose(se, 3.0 * s)


def test_wb_source_second_order_consistent():
    # on smooth data the source converges to -rho*phi' at second order
    eos = IdealGas()
    x0, rho0 = 0.3, None
    errs = []
    for dx in (0.02, 0.01):
        xm, x, xp = x0 - dx, x0, x0 + dx
        phi = lambda s: np.sin(s)
        T = 1.0 + 0.2 * x
        p = np.exp(-x) * (1.0 + 0.1 * x)
        rho = p / T
        s, _ = wb_source_1d(p, T, 0.0, phi(xm), phi(x), phi(xp), dx)
        errs.append(abs(s - (-rho * np.cos(x0))))
    assert errs[0] / errs[1] > 3.5  # ~4 for second order


def test_both_sources_vanish_without_gravity():
    s, se = wb_source_1d(1.3, 0.9, 0.5, 2.0, 2.0, 2.0, 0.1)
    assert s == 0.0 and se == 0.0
    s, se = nwb_source_1d(1.3, 0.5, 2.0, 2.0, 0.1)
    assert s == 0.0 and se == 0.0
