"""Parametric component lifetime distributions.

Exponential and Weibull marginals with the cdf/survival/hazard functions the
cost models consume.  The Weibull is parameterized as F(t) = 1 - exp(-(lam*t)**shape),
so Exponential is the shape=1 special case.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, ParameterError


class Family(Enum):
    EXPONENTIAL = "exponential"
    WEIBULL = "weibull"


@dataclass(frozen=True)
class LifetimeModel:
    """A component lifetime, either Exponential(rate) or Weibull(rate, shape).

    ``rate`` is the scale parameter lam (1/time), ``shape`` the dimensionless
    Weibull exponent (fixed to 1 for the exponential family).
    """

    family: Family
    rate: float
    shape: float = 1.0

    def __post_init__(self):
        if self.rate <= 0:
            raise ParameterError(f"rate must be positive, got {self.rate}")
        if self.shape <= 0:
            raise ParameterError(f"shape must be positive, got {self.shape}")
        if self.family is Family.EXPONENTIAL and self.shape != 1.0:
            raise ParameterError("exponential lifetimes have shape fixed to 1")

    @staticmethod
    def exponential(rate: float) -> "LifetimeModel":
        return LifetimeModel(Family.EXPONENTIAL, rate)

    @staticmethod
    def weibull(rate: float, shape: float) -> "LifetimeModel":
        return LifetimeModel(Family.WEIBULL, rate, shape)


def _check_t(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("time must be nonnegative")
    return t


def cdf(model: LifetimeModel, t):
    """F(t) = 1 - exp(-(lam*t)**shape)."""
    t = _check_t(t)
    return -np.expm1(-((model.rate * t) ** model.shape))


def survival(model: LifetimeModel, t):
    """Survival computed directly as exp(-(lam*t)**shape) to avoid tail
    cancellation."""
    t = _check_t(t)
    return np.exp(-((model.rate * t) ** model.shape))


def pdf(model: LifetimeModel, t):
    t = _check_t(t)
    lam, a = model.rate, model.shape
    with np.errstate(divide="ignore", invalid="ignore"):
        h = a * lam * (lam * t) ** (a - 1.0)
    return h * np.exp(-((lam * t) ** a))


def hazard(model: LifetimeModel, t):
    """h(t) = shape*lam*(lam*t)**(shape-1); constant lam for exponentials.

    Raises at t=0 for shape < 1 where the power hazard is singular.
    """
    t = _check_t(t)
    lam, a = model.rate, model.shape
    if a < 1.0 and np.any(t == 0):
        raise DomainError("hazard is singular at t=0 for shape < 1")
    if a == 1.0:
        return np.broadcast_to(np.asarray(lam), t.shape).copy() if t.ndim else lam
    return a * lam * (lam * t) ** (a - 1.0)


def is_ifr(model: LifetimeModel) -> bool:
    """True iff the hazard is nondecreasing (constant hazard counts)."""
    return model.shape >= 1.0
