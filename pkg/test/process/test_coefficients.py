import math

import numpy as np
import pytest

from lrdpyground.exceptions import ParameterDomainError
from lrdpyground.process import gen_coefficients


def test_first_coefficients():
    coeffs = gen_coefficients(0.7, 10)
    assert coeffs.c[0] == 1.0
    assert coeffs.c[1] == pytest.approx(2**-0.7, abs=1e-12)
    assert coeffs.c[1] == pytest.approx(0.615572, abs=1e-6)
    assert coeffs.trunc_k == 10
    assert len(coeffs.c) == 11


def test_coefficients_positive_and_decreasing():
    coeffs = gen_coefficients(0.55, 1000)
    assert np.all(coeffs.c > 0)
    assert np.all(np.diff(coeffs.c) < 0)


def test_regular_variation_ratio():
    coeffs = gen_coefficients(0.7, 10**5)
    assert coeffs.regular_variation_ratio(5 * 10**4) == pytest.approx(2**-0.7, abs=1e-4)


def test_regular_variation_ratio_out_of_range():
    with pytest.raises(ParameterDomainError):
        gen_coefficients(0.7, 10).regular_variation_ratio(6)


@pytest.mark.parametrize("beta", [0.5, 1.0, 1.2, -0.3, float("nan")])
def test_beta_outside_long_memory_range(beta):
    with pytest.raises(ParameterDomainError) as err:
        gen_coefficients(beta, 10)
    assert "(1/2, 1)" in str(err.value)


def test_negative_truncation():
    with pytest.raises(ParameterDomainError):
        gen_coefficients(0.7, -1)


def test_white_noise_coefficients():
    coeffs = gen_coefficients(0.7, 0)
    assert coeffs.c.tolist() == [1.0]
    assert coeffs.variance() == 1.0


def test_coefficients_are_read_only():
    coeffs = gen_coefficients(0.7, 4)
    with pytest.raises(ValueError):
        coeffs.c[0] = 2.0


def test_variance_and_tail():
    coeffs = gen_coefficients(0.7, 10**4)
    expected = sum((k + 1) ** -1.4 for k in range(10**4 + 1))
    assert coeffs.variance() == pytest.approx(expected, rel=1e-12)
    # Extending the truncation adds at most the reported tail.
    longer = gen_coefficients(0.7, 2 * 10**4)
    added = longer.variance() - coeffs.variance()
    assert 0 < added < coeffs.tail_variance()


def test_autocovariances_match_direct_sum():
    coeffs = gen_coefficients(0.65, 50)
    rho = coeffs.autocovariances(60)
    c = coeffs.c
    for k in (0, 1, 7, 50):
        assert rho[k] == pytest.approx(float(np.sum(c[: len(c) - k] * c[k:])), rel=1e-10)
    assert rho[51:].tolist() == [0.0] * 10
    assert rho[0] == pytest.approx(coeffs.variance(), rel=1e-12)


def test_autocovariance_power_law():
    beta = 0.7
    coeffs = gen_coefficients(beta, 2**20)
    rho = coeffs.autocovariances(10**4)
    limit = coeffs.autocovariance_limit()
    assert limit == pytest.approx(
        math.gamma(2 * beta - 1) * math.gamma(1 - beta) / math.gamma(beta), rel=1e-10
    )
    # Discretization and truncation both bias the finite sums downwards.
    for k in (10**3, 10**4):
        ratio = rho[k] * k ** (2 * beta - 1) / limit
        assert 0.8 < ratio < 1.0
