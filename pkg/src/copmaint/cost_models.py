"""Expected-cost-rate functionals for age and periodic replacement.

Written in terms of the system survival S(t) and its cumulative integral
I(T) = int_0^T S, the series and parallel functionals coincide:

    plain:      C(T) = [c_f - (c_f - sum c_p) * S(T)] / I(T)
    deviation:  C(T) = [c_f - (c_f - sum c_p) * S(T)
                        + c_d1 * (T - I(T)) + c_d2 * MTTF] / I(T) - c_d2

(for a parallel system S(t) = 1 - C(F_1(t),...,F_n(t)), which turns the
published parallel numerators into the same expression).  The periodic
functionals are the age functionals restricted to the lattice T = K*tau, so
they share this code path exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import systems
from .errors import DomainError, ParameterError
from .systems import SystemSpec


@dataclass(frozen=True)
class CostParams:
    """Corrective cost, per-component preventive costs and deviation rates."""

    c_f: float
    c_p: tuple[float, ...]
    c_d1: float = 0.0
    c_d2: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "c_p", tuple(float(x) for x in np.atleast_1d(self.c_p)))
        if self.c_f <= 0:
            raise ParameterError("c_f must be positive")
        if any(x < 0 for x in self.c_p):
            raise ParameterError("preventive costs must be nonnegative")
        if sum(self.c_p) >= self.c_f:
            raise ParameterError("sum of preventive costs must be < c_f")
        if self.c_d1 < 0 or self.c_d2 < 0:
            raise ParameterError("deviation cost rates must be nonnegative")

    @property
    def c_p_total(self) -> float:
        return sum(self.c_p)

    @staticmethod
    def uniform(c_f: float, c_p_each: float, n: int,
                c_d1: float = 0.0, c_d2: float = 0.0) -> "CostParams":
        return CostParams(c_f, (c_p_each,) * n, c_d1, c_d2)


class PolicyKind(Enum):
    AGE = "age"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class PolicyQuery:
    """A replacement policy to evaluate: age T, or periodic (K, tau)."""

    kind: PolicyKind
    deviation: bool = False
    T: float | None = None
    K: int | None = None
    tau: float | None = None

    def __post_init__(self):
        if self.kind is PolicyKind.AGE:
            if self.T is None or self.T <= 0:
                raise ParameterError("age policy requires T > 0")
        else:
            if self.K is None or self.K < 1 or int(self.K) != self.K:
                raise ParameterError("periodic policy requires integer K >= 1")
            if self.tau is None or self.tau <= 0:
                raise ParameterError("periodic policy requires tau > 0")

    @property
    def replacement_time(self) -> float:
        return self.T if self.kind is PolicyKind.AGE else self.K * self.tau


def _check_costs(s: SystemSpec, c: CostParams):
    if len(c.c_p) != s.n:
        raise ParameterError(
            f"expected {s.n} preventive costs, got {len(c.c_p)}")


def age_cost_rate(s: SystemSpec, c: CostParams, T: float, deviation: bool = False) -> float:
    """Long-run expected cost per unit time under age replacement at T."""
    _check_costs(s, c)
    if T <= 0:
        raise DomainError("replacement time T must be positive")
    tab = systems.cumulative_survival(s)
    surv = systems.system_survival(s, T)
    integral = tab(T)
    num = c.c_f - (c.c_f - c.c_p_total) * surv
    if not deviation:
        return num / integral
    num += c.c_d1 * (T - integral) + c.c_d2 * tab.total
    return num / integral - c.c_d2


def periodic_cost_rate(s: SystemSpec, c: CostParams, K: int, tau: float,
                       deviation: bool = False) -> float:
    """Cost rate of periodic replacement at K*tau: the age functional on the
    lattice (identical code path)."""
    if K < 1 or int(K) != K:
        raise DomainError("K must be a positive integer")
    if tau <= 0:
        raise DomainError("tau must be positive")
    return age_cost_rate(s, c, K * tau, deviation)


def deviation_expected_time(s: SystemSpec, T: float) -> float:
    """E|T - X| for the system lifetime X:
    int_0^T (1 - S) + int_T^inf S = T + MTTF - 2*I(T)."""
    if T < 0:
        raise DomainError("T must be nonnegative")
    tab = systems.cumulative_survival(s)
    return T + tab.total - 2.0 * tab(T)
