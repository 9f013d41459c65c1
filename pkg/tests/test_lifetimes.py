import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copmaint import lifetimes
from copmaint.errors import DomainError, ParameterError
from copmaint.lifetimes import Family, LifetimeModel

rates = st.floats(0.05, 20.0)
shapes = st.floats(0.3, 6.0)
times = st.floats(0.0, 50.0)


def test_constructors():
    e = LifetimeModel.exponential(0.4)
    assert e.family is Family.EXPONENTIAL and e.shape == 1.0
    w = LifetimeModel.weibull(0.4, 2.5)
    assert w.family is Family.WEIBULL and w.shape == 2.5


@pytest.mark.parametrize("bad", [
    lambda: LifetimeModel.exponential(0.0),
    lambda: LifetimeModel.weibull(-1.0, 2.0),
    lambda: LifetimeModel.weibull(1.0, 0.0),
    lambda: LifetimeModel(Family.EXPONENTIAL, 1.0, shape=2.0),
])
def test_invalid_parameters(bad):
    with pytest.raises(ParameterError):
        bad()


def test_negative_time_rejected():
    m = LifetimeModel.weibull(1.0, 2.0)
    with pytest.raises(DomainError):
        lifetimes.cdf(m, -0.1)


@given(rates, shapes, times)
def test_cdf_survival_complementary(rate, shape, t):
    m = LifetimeModel.weibull(rate, shape)
    assert lifetimes.cdf(m, t) + lifetimes.survival(m, t) == pytest.approx(1.0)


@given(rates, shapes, st.floats(0.01, 30.0))
def test_pdf_is_hazard_times_survival(rate, shape, t):
    m = LifetimeModel.weibull(rate, shape)
    expect = lifetimes.hazard(m, t) * lifetimes.survival(m, t)
    assert lifetimes.pdf(m, t) == pytest.approx(expect, rel=1e-12, abs=1e-300)


@settings(max_examples=30)
@given(rates, shapes)
def test_pdf_matches_cdf_derivative(rate, shape):
    m = LifetimeModel.weibull(rate, shape)
    t = np.array([0.2, 0.7, 1.9]) / rate
    h = 1e-6 / rate
    numeric = (lifetimes.cdf(m, t + h) - lifetimes.cdf(m, t - h)) / (2 * h)
    np.testing.assert_allclose(lifetimes.pdf(m, t), numeric, rtol=1e-4, atol=1e-9)


def test_exponential_hazard_constant():
    m = LifetimeModel.exponential(0.7)
    np.testing.assert_allclose(lifetimes.hazard(m, np.array([0.1, 1.0, 9.0])), 0.7)


def test_dfr_hazard_singular_at_origin():
    m = LifetimeModel.weibull(1.0, 0.5)
    with pytest.raises(DomainError):
        lifetimes.hazard(m, 0.0)


def test_ifr_flag():
    assert lifetimes.is_ifr(LifetimeModel.exponential(1.0))
    assert lifetimes.is_ifr(LifetimeModel.weibull(1.0, 2.5))
    assert not lifetimes.is_ifr(LifetimeModel.weibull(1.0, 0.9))
