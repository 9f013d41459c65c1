import numpy as np
import pytest

from copmaint.copulas import CopulaFamily, CopulaModel
from copmaint.cost_models import CostParams, age_cost_rate, periodic_cost_rate
from copmaint.errors import NoInteriorOptimumError
from copmaint.lifetimes import LifetimeModel
from copmaint.optimizers import (ThresholdStatus, check_conditions,
                                 first_order_residual, optimize_age,
                                 optimize_periodic)
from copmaint.systems import SystemSpec, Topology

WEIB = LifetimeModel.weibull(0.4, 2.5)


def make(topology, n=2, theta=2.0, c_d=(0.0, 0.0)):
    cop = CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, theta, n)
    s = SystemSpec(topology, (WEIB,) * n, cop)
    c = CostParams.uniform(100.0, 5.0, n, *c_d)
    return s, c


def test_optimum_is_local_minimum():
    for topo in Topology:
        s, c = make(topo)
        r = optimize_age(s, c)
        for d in (-1e-3, 1e-3):
            assert age_cost_rate(s, c, r.optimum + d) >= r.cost_rate - 1e-12


def test_residual_zero_at_optimum():
    s, c = make(Topology.SERIES, c_d=(2.0, 1.0))
    r = optimize_age(s, c, deviation=True)
    assert abs(first_order_residual(s, c, r.optimum, deviation=True)) < 1e-6


def test_residual_sign_change_around_optimum():
    s, c = make(Topology.PARALLEL)
    r = optimize_age(s, c)
    assert first_order_residual(s, c, 0.5 * r.optimum) < 0
    assert first_order_residual(s, c, 1.5 * r.optimum) > 0


def test_conditions_report_series():
    s, c = make(Topology.SERIES)
    rep = check_conditions(s, c, deviation=False)
    assert rep.satisfied
    # strict IFR Weibull -> hazard limit infinite -> threshold trivial
    assert rep.threshold_satisfied is ThresholdStatus.TRIVIALLY_INFINITE_HAZARD


def test_conditions_deviation_skips_threshold():
    s, c = make(Topology.SERIES, c_d=(2.0, 1.0))
    rep = check_conditions(s, c, deviation=True)
    assert rep.threshold_satisfied is ThresholdStatus.NOT_REQUIRED


def test_threshold_failure_reported_and_no_optimum():
    """Exponential components: finite hazard limit.  With cheap enough
    failures the threshold fails and the residual never crosses zero."""
    exp = LifetimeModel.exponential(1.0)
    s = SystemSpec(Topology.SERIES, (exp,) * 2,
                   CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, 2.0, 2))
    c = CostParams.uniform(100.0, 5.0, 2)
    rep = check_conditions(s, c, deviation=False)
    # h(inf)*MTTF = 1 for any constant-hazard system, rhs = 100/90 > 1
    assert rep.threshold_satisfied is ThresholdStatus.NO
    assert rep.threshold_lhs == pytest.approx(1.0, rel=1e-9)
    with pytest.raises(NoInteriorOptimumError):
        optimize_age(s, c)


def test_exponential_deviation_has_finite_optimum():
    """Deviation costs create an interior optimum even with constant hazard."""
    exp = LifetimeModel.exponential(1.0)
    s = SystemSpec(Topology.SERIES, (exp,) * 2,
                   CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, 2.0, 2))
    c = CostParams.uniform(100.0, 5.0, 2, c_d1=10.0, c_d2=50.0)
    r = optimize_age(s, c, deviation=True)
    assert np.isfinite(r.optimum)
    assert r.cost_rate < age_cost_rate(s, c, 1e3, deviation=True)


def test_periodic_matches_bruteforce_scan():
    s, c = make(Topology.PARALLEL, n=3)
    r = optimize_periodic(s, c, 0.1)
    costs = [periodic_cost_rate(s, c, k, 0.1) for k in range(1, 60)]
    assert r.optimum == int(np.argmin(costs)) + 1
    assert r.cost_rate == pytest.approx(min(costs), rel=1e-12)


def test_periodic_bounded_below_by_age():
    for topo in Topology:
        for c_d in ((0.0, 0.0), (2.0, 1.0)):
            s, c = make(topo, c_d=c_d)
            dev = c_d != (0.0, 0.0)
            ra = optimize_age(s, c, deviation=dev)
            rp = optimize_periodic(s, c, 0.1, deviation=dev)
            assert rp.cost_rate >= ra.cost_rate - 1e-9
            assert abs(rp.optimum * 0.1 - ra.optimum) <= 0.1 + 1e-9


def test_coarser_lattice_costs_more():
    s, c = make(Topology.SERIES)
    fine = optimize_periodic(s, c, 0.05)
    coarse = optimize_periodic(s, c, 0.4)
    assert fine.cost_rate <= coarse.cost_rate + 1e-12


def test_result_carries_conditions():
    s, c = make(Topology.SERIES)
    r = optimize_age(s, c)
    assert r.uniqueness_guaranteed
    assert r.method_trace.bracket[0] < r.optimum < r.method_trace.bracket[1]
