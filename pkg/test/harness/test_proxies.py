import pytest

from lrdpyground.harness import limit_proxies, v1_proxy
from lrdpyground.multilinear import compute_sums
from lrdpyground.process import ProcessConfig, gen_coefficients, generate_path
from lrdpyground.scalings import build_scaling_set


def test_proxies_of_a_path():
    coeffs = gen_coefficients(0.65, 64)
    config = ProcessConfig(beta=0.65, trunc_k=64, seed=2)
    path = generate_path(config, 128, coeffs=coeffs)
    sums = compute_sums(path, coeffs)
    scalings = build_scaling_set(config, 128)
    proxies = limit_proxies(sums, scalings)
    assert proxies.z1_n == pytest.approx(sums.y1 / scalings.sigma_n1)
    # c_n z1^2 / 2 is the square of the first order term brought to the second order scale.
    correction = 0.5 * sums.y1**2 / (128 * scalings.sigma_n2)
    assert proxies.v_n == pytest.approx(sums.y2 / scalings.sigma_n2 - correction)


def test_v1_proxy():
    scalings = build_scaling_set(ProcessConfig(beta=0.65, trunc_k=64), 256)
    expected = 256 * 0.01 / scalings.sigma_n2
    assert v1_proxy(1.01, 1.0, scalings) == pytest.approx(expected)
    assert v1_proxy(1.0, 1.01, scalings) == pytest.approx(-expected)
    assert v1_proxy(2.0, 2.0, scalings) == 0.0
