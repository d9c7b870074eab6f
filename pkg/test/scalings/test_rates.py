import math

import numpy as np
import pytest

from lrdpyground.exceptions import ParameterDomainError, UnsupportedBoundaryError
from lrdpyground.scalings import (
    Regime,
    SecondOrderRank,
    d_np,
    is_rate_boundary,
    k_star,
    regime_for,
    second_order_rank,
    xi_rate,
)


@pytest.mark.parametrize("beta, expected", [(0.8, 1), (0.7, 2), (0.6, 5), (0.55, 10)])
def test_k_star(beta, expected):
    assert k_star(beta) == expected


def test_k_star_is_the_integer_part():
    for beta in np.random.default_rng(0).uniform(0.501, 0.999, size=200):
        k = k_star(float(beta))
        assert k * (2 * beta - 1) <= 1 + 1e-12
        assert (k + 1) * (2 * beta - 1) > 1


@pytest.mark.parametrize(
    "beta, lambda2, expected",
    [
        (0.8, 0.0, SecondOrderRank.RANK_2),
        (0.8, 0.4, SecondOrderRank.RANK_2),
        (0.7, 0.0, SecondOrderRank.RANK_GT_2),
        (0.7, 1e-9, SecondOrderRank.RANK_GT_2),
        (0.7, 0.3, SecondOrderRank.RANK_2),
        (0.7, -0.3, SecondOrderRank.RANK_2),
    ],
)
def test_second_order_rank(beta, lambda2, expected):
    assert second_order_rank(beta, lambda2) is expected


def test_second_order_rank_needs_positive_tolerance():
    with pytest.raises(ParameterDomainError):
        second_order_rank(0.7, 0.0, tol=0.0)


@pytest.mark.parametrize(
    "beta, expected", [(0.6, Regime.BETA_BELOW_3_4), (0.7499, Regime.BETA_BELOW_3_4), (0.8, Regime.BETA_ABOVE_3_4)]
)
def test_regime(beta, expected):
    assert regime_for(beta) is expected


def test_regime_boundary():
    with pytest.raises(UnsupportedBoundaryError):
        regime_for(0.75)


def test_d_np_fast_branch():
    n = 15
    log_n = math.log(n)
    expected = n**-0.2 * log_n**2.5 * math.log(log_n) ** 0.75
    assert d_np(n, 0.8, 2) == pytest.approx(expected, rel=1e-12)


def test_d_np_slow_branch():
    n = 4096
    log_n = math.log(n)
    expected = n**-0.3 * log_n**0.5 * math.log(log_n) ** 0.75
    assert d_np(n, 0.65, 2) == pytest.approx(expected, rel=1e-12)


def test_rate_boundary():
    assert is_rate_boundary(2 / 3, 2)
    assert not is_rate_boundary(0.65, 2)
    with pytest.raises(UnsupportedBoundaryError):
        d_np(1024, 2 / 3, 2)
    with pytest.raises(UnsupportedBoundaryError):
        xi_rate(1024, 2 / 3, 2)


def test_d_np_needs_log_log():
    with pytest.raises(ParameterDomainError):
        d_np(2, 0.65, 2)


@pytest.mark.parametrize(
    "n, beta, p, expected",
    [(1024, 0.8, 2, 1024.0), (1024, 0.65, 2, 1024.0**1.1), (1024, 0.8, 0, 1024.0**1.4)],
)
def test_xi_rate(n, beta, p, expected):
    assert xi_rate(n, beta, p) == pytest.approx(expected, rel=1e-12)


def test_xi_rate_full_bound():
    assert xi_rate(1024, 0.8, 2, full=True) == pytest.approx(1024 + 1024 * math.log(1024) ** 2)
