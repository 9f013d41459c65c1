"""Optimal replacement times and period counts, with the existence and
uniqueness condition checks attached to every result.

The continuous optimizer finds the zero of the first-order-condition
residual, which is strictly increasing whenever the condition checks pass, so
a geometric bracket plus Brent refinement is robust.  The discrete optimizer
scans K and stops at the first cost increase, cross-checking against the
equivalent monotone-predicate form of the stopping inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from scipy.optimize import brentq, minimize_scalar

from . import copulas, lifetimes, systems
from .copulas import MonotonicityReport
from .cost_models import CostParams, age_cost_rate, periodic_cost_rate, _check_costs
from .errors import (DomainError, NoFiniteOptimumError, NoInteriorOptimumError,
                     NumericsError)
from .systems import SystemSpec, Topology

_NAN = float("nan")


class ThresholdStatus(Enum):
    YES = "yes"
    NO = "no"
    TRIVIALLY_INFINITE_HAZARD = "trivially-infinite-hazard"
    NOT_REQUIRED = "not-required"


@dataclass(frozen=True)
class ConditionReport:
    """Aggregated existence/uniqueness conditions for the chosen model."""

    components_ifr: tuple[bool, ...]
    monotonicity: MonotonicityReport
    threshold_satisfied: ThresholdStatus
    threshold_lhs: float = _NAN  # h(inf) * MTTF
    threshold_rhs: float = _NAN  # c_f / (c_f - sum c_p)

    @property
    def satisfied(self) -> bool:
        thr_ok = self.threshold_satisfied in (
            ThresholdStatus.YES,
            ThresholdStatus.TRIVIALLY_INFINITE_HAZARD,
            ThresholdStatus.NOT_REQUIRED,
        )
        return all(self.components_ifr) and self.monotonicity.verdict.passed and thr_ok


@dataclass(frozen=True)
class MethodTrace:
    bracket: tuple[float, float]
    iterations: int
    residual: float
    notes: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class PolicyResult:
    optimum: float | int
    cost_rate: float
    condition_report: ConditionReport
    method_trace: MethodTrace

    @property
    def uniqueness_guaranteed(self) -> bool:
        return self.condition_report.satisfied


def check_conditions(s: SystemSpec, c: CostParams, deviation: bool) -> ConditionReport:
    """Component IFR flags, the topology-appropriate copula monotonicity
    check, and (plain models only) the hazard-limit threshold."""
    _check_costs(s, c)
    ifr = tuple(lifetimes.is_ifr(m) for m in s.components)
    if s.topology is Topology.SERIES:
        mono = copulas.check_alpha_decreasing(s.copula, homogeneous=s.homogeneous)
    else:
        mono = copulas.check_eta_increasing(s.copula, homogeneous=s.homogeneous)
    if deviation:
        return ConditionReport(ifr, mono, ThresholdStatus.NOT_REQUIRED)

    rhs = c.c_f / (c.c_f - c.c_p_total)
    hl = systems.hazard_limit(s)
    if hl.infinite:
        return ConditionReport(ifr, mono, ThresholdStatus.TRIVIALLY_INFINITE_HAZARD,
                               float("inf"), rhs)
    if math.isnan(hl.value):
        return ConditionReport(ifr, mono, ThresholdStatus.NO, _NAN, rhs)
    lhs = hl.value * systems.mttf(s)
    status = ThresholdStatus.YES if lhs > rhs else ThresholdStatus.NO
    return ConditionReport(ifr, mono, status, lhs, rhs)


def first_order_residual(s: SystemSpec, c: CostParams, T: float,
                         deviation: bool = False) -> float:
    """Left-minus-right of the stationarity condition; strictly increasing in
    T under the uniqueness conditions, with a negative limit at T -> 0+.

    With Q(T) = h(T)*I(T) + S(T) the plain condition reads
    Q(T) = c_f/(c_f - sum c_p); the deviation condition reads
    (c_f - sum c_p)*Q(T) + c_d1*phi(T) = c_f + c_d2*MTTF with
    phi(T) = (1-S)/S * I(T) - (T - I(T)).  Both topologies reduce to these
    forms through the system survival.
    """
    _check_costs(s, c)
    tab = systems.cumulative_survival(s)
    surv = systems.system_survival(s, T)
    integral = tab(T)
    q = systems.system_hazard(s, T) * integral + surv
    cp = c.c_p_total
    if not deviation:
        return q - c.c_f / (c.c_f - cp)
    phi = (1.0 - surv) / surv * integral - (T - integral)
    return (c.c_f - cp) * q + c.c_d1 * phi - c.c_f - c.c_d2 * tab.total


def optimize_age(s: SystemSpec, c: CostParams, deviation: bool = False) -> PolicyResult:
    """Unique stationary point of the age cost rate via residual bracketing."""
    report = check_conditions(s, c, deviation)
    scale = systems.mttf(s)
    notes: list[str] = []
    if not report.satisfied:
        notes.append("uniqueness not guaranteed: condition check failed")

    t_lo = scale / 1024.0
    t_hi_cap = 1e3 * scale
    lo, f_lo = t_lo, first_order_residual(s, c, t_lo, deviation)
    hi, f_hi, iters = lo, f_lo, 0
    while f_hi < 0.0 and hi < t_hi_cap:
        lo, f_lo = hi, f_hi
        hi *= 2.0
        try:
            f_hi = first_order_residual(s, c, hi, deviation)
        except DomainError:
            # survival underflowed to zero while the residual was still
            # negative: the cost rate keeps decreasing toward T = inf
            break
        iters += 1
    if f_hi < 0.0:
        raise NoInteriorOptimumError(
            "no sign change of the first-order residual up to "
            f"T={t_hi_cap:g}: the cost rate decreases toward T=inf "
            "(never replace preventively)")
    while f_lo > 0.0 and lo > 1e-12 * scale:
        # residual already positive at the smallest grid point; shrink
        lo /= 4.0
        f_lo = first_order_residual(s, c, lo, deviation)

    t_star, res = brentq(lambda T: first_order_residual(s, c, T, deviation),
                         lo, hi, xtol=1e-8 * scale, full_output=True)
    cost = age_cost_rate(s, c, t_star, deviation)

    delta = 1e-3 * t_star
    if (age_cost_rate(s, c, t_star - delta, deviation) < cost
            or age_cost_rate(s, c, t_star + delta, deviation) < cost):
        # residual root is not a local minimum; fall back to direct search
        notes.append("residual root failed the local-minimum cross-check; "
                     "golden-section fallback used")
        r = minimize_scalar(lambda T: age_cost_rate(s, c, T, deviation),
                            bounds=(t_star / 4.0, 4.0 * t_star), method="bounded",
                            options={"xatol": 1e-10 * scale})
        t_star, cost = float(r.x), float(r.fun)

    trace = MethodTrace((lo, hi), iters + res.iterations,
                        first_order_residual(s, c, t_star, deviation), tuple(notes))
    return PolicyResult(float(t_star), float(cost), report, trace)


def _discrete_predicate(s: SystemSpec, c: CostParams, K: int, tau: float,
                        deviation: bool) -> bool:
    """Monotone stopping predicate equivalent to C(K+1) >= C(K).

    H(K) = N(K)*I(K tau) + S(K tau) with
    N(K) = [S(K tau) - S((K+1) tau)] / [I((K+1) tau) - I(K tau)];
    plain stops when H(K) >= c_f/(c_f - sum c_p), the deviation form adds
    c_d1 * J(K) with J(K) = M(K)*I(K tau) - (K tau - I(K tau)) and
    M(K) = (tau - dI)/dI.
    """
    tab = systems.cumulative_survival(s)
    t0, t1 = K * tau, (K + 1) * tau
    i0, i1 = tab(t0), tab(t1)
    d_i = i1 - i0
    if d_i <= 0.0:  # survival fully decayed within one period
        return True
    s0, s1 = systems.system_survival(s, t0), systems.system_survival(s, t1)
    h_pred = (s0 - s1) / d_i * i0 + s0
    cp = c.c_p_total
    if not deviation:
        return h_pred >= c.c_f / (c.c_f - cp)
    j_pred = (tau - d_i) / d_i * i0 - (t0 - i0)
    return (c.c_f - cp) * h_pred + c.c_d1 * j_pred >= c.c_f + c.c_d2 * tab.total


def optimize_periodic(s: SystemSpec, c: CostParams, tau: float,
                      deviation: bool = False) -> PolicyResult:
    """Smallest K with periodic_cost_rate(K+1) >= periodic_cost_rate(K)."""
    report = check_conditions(s, c, deviation)
    notes: list[str] = []
    if not report.satisfied:
        notes.append("uniqueness not guaranteed: condition check failed")
    cap = max(1, math.ceil(1e3 * systems.mttf(s) / tau))
    cost_k = periodic_cost_rate(s, c, 1, tau, deviation)
    for K in range(1, cap + 1):
        cost_next = periodic_cost_rate(s, c, K + 1, tau, deviation)
        stop = cost_next >= cost_k
        pred = _discrete_predicate(s, c, K, tau, deviation)
        if stop != pred:
            gap = abs(cost_next - cost_k) / max(abs(cost_k), 1e-300)
            if gap > 1e-9:
                raise NumericsError(
                    f"direct cost comparison and H/J predicate disagree at K={K}")
            stop = True  # exact tie up to roundoff; take the smaller K
        if stop:
            trace = MethodTrace((float(K), float(K + 1)), K,
                                cost_next - cost_k, tuple(notes))
            return PolicyResult(K, float(cost_k), report, trace)
        cost_k = cost_next
    raise NoFiniteOptimumError(
        f"no finite optimal period count up to the cap K={cap}")
