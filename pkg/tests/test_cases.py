"""Tests for the case registry, norms helpers, and initial states."""

import numpy as np
import pytest

from gravfv import cases, hydrostatic
from gravfv.errors import ConfigError

ALL_CASES = [
    "isothermal_wb", "isothermal_pert", "xing_steady", "polytropic",
    "vdw_hydro", "vdw_pert", "sod_gravity", "contact_gravity",
    "iso2d_pert", "poly2d_pert", "mms2d", "radial_iso", "radial_poly",
    "radial_vdw", "radial_rt", "rising_bubble", "igw",
]


def test_registry_names():
    assert sorted(cases.CASES) == sorted(ALL_CASES)


def test_registry_dims():
    for name in ("isothermal_wb", "polytropic", "vdw_hydro", "sod_gravity"):
        assert cases.CASES[name].dim == 1
    for name in ("mms2d", "radial_rt", "rising_bubble", "igw"):
        assert cases.CASES[name].dim == 2


def test_unknown_case_raises():
    with pytest.raises(ConfigError, match="unknown case"):
        cases.build_case("nope")


@pytest.mark.parametrize("name", ["isothermal_wb", "isothermal_pert",
                                  "polytropic", "vdw_hydro", "vdw_pert",
                                  "sod_gravity", "contact_gravity",
                                  "xing_steady"])
def test_1d_cases_build_and_step(name):
    case = cases.build_case(name, nx=32)
    assert case.dim == 1
    v0 = case.sim.primitive()
    assert np.all(np.isfinite(v0))
    assert np.all(v0[0] > 0) and np.all(v0[2] > 0)
    case.run(n_steps=2)
    v = case.sim.primitive()
    assert np.all(np.isfinite(v))
    assert np.all(v[0] > 0) and np.all(v[2] > 0)


@pytest.mark.parametrize("name", ["iso2d_pert", "poly2d_pert", "mms2d",
                                  "radial_iso", "rising_bubble"])
def test_2d_cases_build_and_step(name):
    case = cases.build_case(name, nx=15, ny=15)
    assert case.dim == 2
    case.run(n_steps=2)
    v = case.sim.primitive()
    assert np.all(np.isfinite(v))
    assert np.all(v[0] > 0) and np.all(v[3] > 0)


def test_error_norms_hand_values():
    w = np.array([0.5, 1.0, 0.5])
    f = np.array([[1.0, 2.0, 3.0]])
    r = np.array([[1.0, 1.0, 1.0]])
    # errors (0, 1, 2); weighted mean uses sum(w) = 2
    assert cases.error_norms(f, r, "l1", w) == pytest.approx([1.0])
    assert cases.error_norms(f, r, "l2", w) == pytest.approx([np.sqrt(1.5)])
    assert cases.error_norms(f, r, "linf", w) == pytest.approx([2.0])


def test_error_norms_default_weights():
    f = np.array([[0.0, 0.0, 3.0]])
    r = np.zeros((1, 3))
    assert cases.error_norms(f, r, "l1") == pytest.approx([1.0])


def test_error_norms_unknown_norm():
    f = np.zeros((1, 3))
    with pytest.raises(ConfigError, match="unknown norm"):
        cases.error_norms(f, f, "l3")


def test_convergence_rate():
    assert cases.convergence_rate(4e-4, 1e-4, 0.02, 0.01) == pytest.approx(2.0)
    assert cases.convergence_rate(0.0, 0.0, 0.02, 0.01) is None


def test_polytropic_discrete_init_satisfies_recurrence():
    case = cases.build_case("polytropic", nx=41, init="discrete")
    phi = case.sim.grid.centers()  # linear potential phi = x
    resid = hydrostatic.recurrence_residual(case.profile, phi)
    assert resid.max() < 1e-13


def test_polytropic_exact_init_misses_recurrence():
    case = cases.build_case("polytropic", nx=41, init="exact")
    phi = case.sim.grid.centers()
    resid = hydrostatic.recurrence_residual(case.profile, phi)
    assert resid.max() > 1e-8


def test_vdw_case_is_isothermal_anchored_to_reference():
    case = cases.build_case("vdw_hydro", nx=31)
    assert np.array_equal(case.profile.T, np.ones(31))
    # discrete profile shares its anchor with the ODE reference solution
    assert case.profile.rho[0] == pytest.approx(case.exact[0][0], rel=1e-14)
    phi = case.sim.grid.centers()  # linear unit-slope potential
    assert hydrostatic.recurrence_residual(case.profile, phi).max() < 1e-13


def test_equilibrium_profile_vdw_anchor():
    prof = cases.equilibrium_profile("vdw_hydro", n=31)
    assert prof.rho[0] == pytest.approx(1.0, rel=1e-14)
    # p(rho=1, T=1) = Ru/(M - b) - a with a=0.4, b=0.001
    assert prof.p[0] == pytest.approx(1.0 / 0.999 - 0.4, rel=1e-14)


def test_equilibrium_profile_rejects_non_equilibrium_case():
    with pytest.raises(ConfigError, match="equilibrium"):
        cases.equilibrium_profile("sod_gravity")


def test_xing_background_is_isothermal():
    case = cases.build_case("xing_steady", nx=64)
    T0 = case.params["T0"]
    assert np.abs(case.background[2] - case.background[0] * T0).max() == 0.0
    # the initial pressure bump is tiny at these cell centers
    dp = case.diagnostics["dp"](case.sim.primitive())
    assert np.abs(dp).max() < 1e-12


def test_bubble_initial_perturbation():
    # density is reduced at constant pressure, so the potential-temperature
    # bump equals theta_c exactly at the bubble center
    case = cases.build_case("rising_bubble", nx=21, ny=21)
    d0 = case.diagnostics["delta_theta"](case.sim.primitive())
    assert d0.max() == pytest.approx(0.5, abs=1e-10)
    assert d0.min() > -1e-10


def test_igw_initial_perturbation():
    case = cases.build_case("igw", nx=31, ny=7)
    d0 = case.diagnostics["delta_theta"](case.sim.primitive())
    assert d0.max() == pytest.approx(0.01, abs=1e-10)
    assert d0.min() > -1e-10
    # background flows at 20 m/s
    assert np.all(case.sim.primitive()[1] == pytest.approx(20.0, rel=1e-14))


def test_mms_exact_matches_initial_state():
    case = cases.build_case("mms2d", nx=11, ny=11)
    assert np.abs(case.exact(0.0) - case.initial).max() < 1e-14
    # smooth-problem default: unlimited quadratic reconstruction
    assert case.sim.config.recon == "quadratic_upwind"


def test_case_errors_against_exact():
    case = cases.build_case("mms2d", nx=11, ny=11)
    err = case.errors(reference=case.exact(0.0), which="linf")
    assert np.max(err) < 1e-14


def test_case_run_override():
    case = cases.build_case("isothermal_wb", nx=32)
    case.run(n_steps=3)
    assert case.sim.n_steps == 3
