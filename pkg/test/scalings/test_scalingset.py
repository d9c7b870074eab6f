import math

import numpy as np
import pytest

from lrdpyground.exceptions import DegenerateModelError, UnsupportedBoundaryError
from lrdpyground.multilinear import exact_sigma1_sq, exact_sigma2_sq
from lrdpyground.process import ProcessConfig, gen_coefficients
from lrdpyground.scalings import Regime, build_scaling_set


def test_fields_are_consistent():
    config = ProcessConfig(beta=0.7, trunc_k=256)
    scalings = build_scaling_set(config, 512)
    coeffs = gen_coefficients(0.7, 256)
    assert scalings.sigma_n1 == pytest.approx(math.sqrt(exact_sigma1_sq(512, coeffs)), rel=1e-12)
    assert scalings.sigma_n2 == pytest.approx(math.sqrt(exact_sigma2_sq(512, coeffs)), rel=1e-12)
    assert scalings.a_n * scalings.sigma_n1 == pytest.approx(scalings.sigma_n2, rel=1e-14)
    assert scalings.c_n == pytest.approx(
        scalings.sigma_n1**2 / (512 * scalings.sigma_n2), rel=1e-14
    )
    assert scalings.first_order_scale == pytest.approx(512 / scalings.sigma_n1)
    assert scalings.second_order_scale == pytest.approx(512 / scalings.sigma_n2)
    assert scalings.sqrt_n == pytest.approx(math.sqrt(512))


def test_regime_and_rank_constants():
    above = build_scaling_set(ProcessConfig(beta=0.8, trunc_k=64), 128)
    below = build_scaling_set(ProcessConfig(beta=0.7, trunc_k=64), 128)
    assert (above.k_star, above.regime) == (1, Regime.BETA_ABOVE_3_4)
    assert (below.k_star, below.regime) == (2, Regime.BETA_BELOW_3_4)


def test_white_noise_is_degenerate():
    with pytest.raises(DegenerateModelError):
        build_scaling_set(ProcessConfig(beta=0.7, trunc_k=0), 64)


def test_boundary_is_rejected():
    with pytest.raises(UnsupportedBoundaryError):
        build_scaling_set(ProcessConfig(beta=0.75, trunc_k=64), 64)


def test_d_n2_undefined_on_the_rate_boundary():
    assert build_scaling_set(ProcessConfig(beta=2 / 3, trunc_k=64), 64).d_n2 is None
    assert build_scaling_set(ProcessConfig(beta=0.65, trunc_k=64), 64).d_n2 is not None


@pytest.mark.parametrize("method", ["exact", "autocovariance"])
def test_methods_agree(method):
    config = ProcessConfig(beta=0.65, trunc_k=300)
    reference = build_scaling_set(config, 700, sigma2_method="exact")
    assert build_scaling_set(config, 700, sigma2_method=method).sigma_n2 == pytest.approx(
        reference.sigma_n2, rel=1e-9
    )


def test_monte_carlo_method():
    config = ProcessConfig(beta=0.7, trunc_k=32, seed=4)
    estimated = build_scaling_set(config, 64, sigma2_method="monte_carlo", mc_reps=400)
    exact = build_scaling_set(config, 64, sigma2_method="exact")
    assert estimated.sigma_n2 == pytest.approx(exact.sigma_n2, rel=0.15)


def test_auto_switches_beyond_the_budget():
    config = ProcessConfig(beta=0.7, trunc_k=2**13)
    scalings = build_scaling_set(config, 2**10)
    assert scalings.sigma_n2 == pytest.approx(
        build_scaling_set(config, 2**10, sigma2_method="autocovariance").sigma_n2, rel=1e-14
    )


def test_to_dict_keys():
    scalings = build_scaling_set(ProcessConfig(beta=0.8, trunc_k=64), 128)
    document = scalings.to_dict()
    assert set(document) == {
        "n", "beta", "sigma_n1", "sigma_n2", "a_n", "c_n", "d_n2", "k_star", "regime"
    }
    assert document["regime"] == "beta_above_3_4"
    assert document["k_star"] == 1


def test_a_n_vanishes_like_a_power_of_n():
    config = ProcessConfig(beta=0.7)
    sizes = [2**p for p in range(8, 15)]
    a_n = [build_scaling_set(config, n).a_n for n in sizes]
    assert np.all(np.diff(a_n) < 0)
    slope = np.polyfit(np.log(sizes), np.log(a_n), 1)[0]
    # Asymptotically -(beta - 1/2), finite sizes flatten it slightly.
    assert -0.3 < slope < -0.1


def test_c_n_stabilizes():
    config = ProcessConfig(beta=0.65)
    c_n = [build_scaling_set(config, 2**p).c_n for p in (11, 12, 13)]
    assert max(c_n) / min(c_n) < 1.3
    assert min(c_n) > 0
