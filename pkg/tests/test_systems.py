import numpy as np
import pytest
from scipy.integrate import quad

from copmaint import systems
from copmaint.copulas import CopulaFamily, CopulaModel
from copmaint.errors import ParameterError
from copmaint.lifetimes import LifetimeModel
from copmaint.systems import (SystemSpec, Topology, cumulative_survival,
                              hazard_limit, mttf, system_hazard,
                              system_survival)

WEIB = LifetimeModel.weibull(0.4, 2.5)


def series(n, theta=2.0):
    cop = (CopulaModel.independence(n) if theta == 1.0
           else CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, theta, n))
    return SystemSpec(Topology.SERIES, (WEIB,) * n, cop)


def parallel(n, theta=2.0):
    s = series(n, theta)
    return SystemSpec(Topology.PARALLEL, s.components, s.copula)


def test_dimension_mismatch():
    with pytest.raises(ParameterError):
        SystemSpec(Topology.SERIES, (WEIB,) * 2, CopulaModel.independence(3))


def test_survival_bounds_against_marginals():
    """Series survival cannot exceed any marginal; parallel cannot be below."""
    from copmaint import lifetimes
    t = np.linspace(0.05, 4.0, 40)
    marg = lifetimes.survival(WEIB, t)
    assert np.all(system_survival(series(3), t) <= marg + 1e-12)
    assert np.all(system_survival(parallel(3), t) >= marg - 1e-12)


def test_series_parallel_order():
    t = np.linspace(0.05, 4.0, 40)
    assert np.all(system_survival(series(4), t) <= system_survival(parallel(4), t) + 1e-12)


def test_constant_hazard_identity():
    """Exponential + Gumbel-Hougaard series: h_sys = lam * n**(1/theta)."""
    exp = LifetimeModel.exponential(0.5)
    s = SystemSpec(Topology.SERIES, (exp,) * 3,
                   CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, 2.0, 3))
    t = np.geomspace(0.01, 10.0, 20)
    np.testing.assert_allclose(system_hazard(s, t), 0.5 * 3 ** 0.5, rtol=1e-9)


def test_hazard_integrates_to_log_survival():
    s = parallel(3)
    T = 1.7
    integral = quad(lambda t: system_hazard(s, t), 1e-9, T, limit=200)[0]
    assert integral == pytest.approx(-np.log(system_survival(s, T)), rel=1e-6)


def test_gumbel_hougaard_series_survival_closed_form():
    # homogeneous GH series: S(t) = exp(-n**(1/theta) * (lam t)**shape)
    s = series(4, theta=2.0)
    t = np.linspace(0.1, 3.0, 15)
    expect = np.exp(-(4 ** 0.5) * (0.4 * t) ** 2.5)
    np.testing.assert_allclose(system_survival(s, t), expect, rtol=1e-12)


def test_cumulative_survival_matches_quad():
    s = parallel(2)
    tab = cumulative_survival(s)
    for T in (0.3, 1.1, 2.6):
        expect = quad(lambda t: system_survival(s, t), 0.0, T,
                      epsabs=1e-13, epsrel=1e-13)[0]
        assert tab(T) == pytest.approx(expect, rel=1e-11)


def test_cumulative_survival_monotone_and_saturates():
    tab = cumulative_survival(series(3))
    vals = [tab(T) for T in np.linspace(0.0, tab.t_max * 1.2, 50)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(tab.total)


def test_mttf_closed_form():
    # homogeneous GH series Weibull: MTTF = Gamma(1+1/shape)/(lam*n**(1/(theta*shape)))
    from scipy.special import gamma
    s = series(4, theta=2.0)
    expect = gamma(1 + 1 / 2.5) / (0.4 * 4 ** (1 / (2.0 * 2.5)))
    assert mttf(s) == pytest.approx(expect, rel=1e-9)


def test_cache_returns_same_table():
    s = series(2)
    assert cumulative_survival(s) is cumulative_survival(series(2))


def test_hazard_limit_analytic_exponential():
    exp = LifetimeModel.exponential(0.3)
    s = SystemSpec(Topology.SERIES, (exp,) * 4,
                   CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, 2.0, 4))
    hl = hazard_limit(s)
    assert hl.verdict == "analytic"
    assert hl.value == pytest.approx(0.3 * 2.0, rel=1e-12)  # 0.3 * 4**0.5


def test_hazard_limit_infinite_for_strict_ifr():
    assert hazard_limit(parallel(3)).infinite


def test_hazard_limit_numeric_parallel_exponential():
    # independent parallel exponentials: h(t) -> min rate = 0.5
    comps = (LifetimeModel.exponential(0.5), LifetimeModel.exponential(2.0))
    s = SystemSpec(Topology.PARALLEL, comps, CopulaModel.independence(2))
    hl = hazard_limit(s)
    assert hl.verdict == "numeric"
    assert hl.value == pytest.approx(0.5, rel=1e-2)
