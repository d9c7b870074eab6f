import numpy as np
import pytest

from lrdpyground.exceptions import ConsistencyError, ParameterDomainError
from lrdpyground.multilinear import MultilinearSums, compute_sums
from lrdpyground.multilinear.oracles import brute_force_y2
from lrdpyground.process import ProcessConfig, gen_coefficients, generate_path, replication_seed

SIZES = range(2, 17)


@pytest.mark.parametrize("n", SIZES)
@pytest.mark.parametrize("trunc_k", SIZES)
def test_second_order_sum_matches_brute_force(n, trunc_k):
    coeffs = gen_coefficients(0.7, trunc_k)
    config = ProcessConfig(beta=0.7, trunc_k=trunc_k)
    for index in range(3):
        path = generate_path(config.with_seed(replication_seed(11, n, index)), n, coeffs=coeffs)
        expected = brute_force_y2(path.eps, coeffs.c, n)
        assert compute_sums(path, coeffs).y2 == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_first_orders():
    coeffs = gen_coefficients(0.6, 20)
    path = generate_path(ProcessConfig(beta=0.6, trunc_k=20, mu=5.0, seed=4), 50, coeffs=coeffs)
    sums = compute_sums(path, coeffs)
    assert sums.y0 == 50
    # Y_{n,1} sums X, never the shifted observations Y.
    assert sums.y1 == pytest.approx(float(np.sum(path.x)), rel=1e-12)
    assert [sums.order(r) for r in range(3)] == [sums.y0, sums.y1, sums.y2]


def test_white_noise_has_no_pairs():
    coeffs = gen_coefficients(0.7, 0)
    path = generate_path(ProcessConfig(beta=0.7, trunc_k=0, seed=1), 30, coeffs=coeffs)
    assert compute_sums(path, coeffs).y2 == pytest.approx(0.0, abs=1e-12)


def test_invalid_order():
    with pytest.raises(ParameterDomainError):
        MultilinearSums(y0=1, y1=0.0, y2=0.0).order(3)


def test_coefficients_of_another_model():
    path = generate_path(ProcessConfig(beta=0.7, trunc_k=4), 8)
    with pytest.raises(ConsistencyError):
        compute_sums(path, gen_coefficients(0.8, 4))
