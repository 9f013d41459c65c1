import numpy as np
import pytest
from scipy.integrate import quad

from copmaint.copulas import CopulaFamily, CopulaModel
from copmaint.cost_models import (CostParams, PolicyKind, PolicyQuery,
                                  age_cost_rate, deviation_expected_time,
                                  periodic_cost_rate)
from copmaint.errors import DomainError, ParameterError
from copmaint.lifetimes import LifetimeModel
from copmaint.systems import SystemSpec, Topology, cumulative_survival, mttf, system_survival

WEIB = LifetimeModel.weibull(0.4, 2.5)
SYS = SystemSpec(Topology.SERIES, (WEIB,) * 2,
                 CopulaModel(CopulaFamily.GUMBEL_HOUGAARD, 2.0, 2))
COSTS = CostParams.uniform(100.0, 5.0, 2)
COSTS_DEV = CostParams.uniform(100.0, 5.0, 2, c_d1=2.0, c_d2=1.0)


def test_cost_params_validation():
    with pytest.raises(ParameterError):
        CostParams(0.0, (1.0,))
    with pytest.raises(ParameterError):
        CostParams(10.0, (6.0, 6.0))  # preventive total >= corrective
    with pytest.raises(ParameterError):
        CostParams(10.0, (1.0,), c_d1=-1.0)


def test_policy_query_validation():
    with pytest.raises(ParameterError):
        PolicyQuery(PolicyKind.AGE)  # missing T
    with pytest.raises(ParameterError):
        PolicyQuery(PolicyKind.PERIODIC, K=0, tau=0.1)
    q = PolicyQuery(PolicyKind.PERIODIC, K=5, tau=0.1)
    assert q.replacement_time == pytest.approx(0.5)


def test_component_count_checked():
    with pytest.raises(ParameterError):
        age_cost_rate(SYS, CostParams.uniform(100.0, 5.0, 3), 1.0)


def test_plain_cost_rate_first_principles():
    """C(T) = [c_f F(T) + sum(c_p) S(T)] / E[min(X,T)]."""
    T = 0.9
    s_T = system_survival(SYS, T)
    e_min = quad(lambda t: system_survival(SYS, t), 0, T, epsabs=1e-13)[0]
    expect = (100.0 * (1 - s_T) + 10.0 * s_T) / e_min
    assert age_cost_rate(SYS, COSTS, T) == pytest.approx(expect, rel=1e-10)


def test_deviation_cost_rate_first_principles():
    """Numerator adds c_d1*E(T-X)^+ + c_d2*E(X-T)^+ over the same cycle."""
    T = 0.9
    s_T = system_survival(SYS, T)
    I = cumulative_survival(SYS)(T)
    mu = mttf(SYS)
    early = T - I       # E(T - X)^+
    late = mu - I       # E(X - T)^+
    expect = (100.0 * (1 - s_T) + 10.0 * s_T + 2.0 * early + 1.0 * late) / I
    assert age_cost_rate(SYS, COSTS_DEV, T, deviation=True) == pytest.approx(expect, rel=1e-10)


def test_deviation_degenerates_to_plain():
    T = 1.2
    plain = age_cost_rate(SYS, COSTS, T)
    zero_dev = age_cost_rate(SYS, COSTS, T, deviation=True)
    assert zero_dev == pytest.approx(plain, rel=1e-12)


def test_periodic_is_age_on_lattice():
    for K in (1, 5, 11):
        assert periodic_cost_rate(SYS, COSTS, K, 0.1) == pytest.approx(
            age_cost_rate(SYS, COSTS, K * 0.1), rel=1e-14)
        assert periodic_cost_rate(SYS, COSTS_DEV, K, 0.1, deviation=True) == pytest.approx(
            age_cost_rate(SYS, COSTS_DEV, K * 0.1, deviation=True), rel=1e-14)


def test_cost_rate_limits():
    # T -> 0: preventive-dominated, cost rate blows up; T -> inf: c_f / MTTF
    assert age_cost_rate(SYS, COSTS, 1e-4) > age_cost_rate(SYS, COSTS, 0.5)
    assert age_cost_rate(SYS, COSTS, 1e3) == pytest.approx(100.0 / mttf(SYS), rel=1e-6)


def test_invalid_arguments():
    with pytest.raises(DomainError):
        age_cost_rate(SYS, COSTS, 0.0)
    with pytest.raises(DomainError):
        periodic_cost_rate(SYS, COSTS, 3, -0.1)


def test_deviation_expected_time():
    T = 0.9
    expect = quad(lambda t: abs(T - t) * _density(t), 0, 50, limit=300)[0]
    assert deviation_expected_time(SYS, T) == pytest.approx(expect, rel=1e-6)


def _density(t, h=1e-6):
    return (system_survival(SYS, max(t - h, 0.0)) - system_survival(SYS, t + h)) / (2 * h)
