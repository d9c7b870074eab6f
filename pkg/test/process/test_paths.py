import numpy as np
import pytest

from lrdpyground.exceptions import ConsistencyError, ParameterDomainError
from lrdpyground.process import (
    ProcessConfig,
    gen_coefficients,
    generate_path,
    path_from_innovations,
    replication_seed,
)


def test_same_seed_same_path():
    config = ProcessConfig(beta=0.7, trunc_k=128, seed=2024)
    first = generate_path(config, 256)
    second = generate_path(config, 256)
    for name in ("eps", "x", "y", "u", "q"):
        assert np.array_equal(getattr(first, name), getattr(second, name))


def test_different_seed_different_path():
    config = ProcessConfig(beta=0.7, trunc_k=16, seed=1)
    assert not np.array_equal(
        generate_path(config, 32).x, generate_path(config.with_seed(2), 32).x
    )


def test_path_shapes():
    path = generate_path(ProcessConfig(beta=0.7, trunc_k=10, seed=0), 25)
    assert path.n == 25
    assert len(path.eps) == 35
    assert len(path.newest_innovations) == 25


def test_zero_innovations():
    config = ProcessConfig(beta=0.7, trunc_k=5)
    path = path_from_innovations(config, np.zeros(12))
    assert path.x.tolist() == [0.0] * 7
    assert path.u.tolist() == [0.0] * 7
    assert path.q.tolist() == [0.0] * 7


def test_white_noise():
    path = generate_path(ProcessConfig(beta=0.7, trunc_k=0, seed=3), 10)
    assert np.array_equal(path.x, path.eps)
    assert not path.u.any() and not path.q.any()


def test_definitions_against_loops():
    config = ProcessConfig(beta=0.65, trunc_k=6, mu=2.0, sigma=-1.5, seed=8)
    coeffs = gen_coefficients(0.65, 6)
    path = generate_path(config, 9, method="direct")
    c, eps, k = coeffs.c, path.eps, config.trunc_k
    for i in range(path.n):
        # Position j of eps holds eps_{j+1-K}, observation i+1 uses eps_{i+1-k}.
        window = [eps[i + k - lag] for lag in range(k + 1)]
        expected_x = sum(c[lag] * window[lag] for lag in range(k + 1))
        expected_u = sum(c[lag] * window[lag] for lag in range(1, k + 1))
        expected_q = sum(c[lag] ** 2 * window[lag] ** 2 for lag in range(1, k + 1))
        assert path.x[i] == pytest.approx(expected_x, rel=1e-12)
        assert path.u[i] == pytest.approx(expected_u, rel=1e-12, abs=1e-15)
        assert path.q[i] == pytest.approx(expected_q, rel=1e-12, abs=1e-15)
    assert np.allclose(path.x, c[0] * path.newest_innovations + path.u, rtol=0, atol=1e-12)
    assert np.allclose(path.y, -1.5 * path.x + 2.0, rtol=0, atol=1e-12)


@pytest.mark.parametrize("n, trunc_k", [(1, 1), (17, 3), (300, 1024), (1024, 1024)])
def test_fft_and_direct_agree(n, trunc_k):
    config = ProcessConfig(beta=0.7, trunc_k=trunc_k, seed=n + trunc_k)
    fast = generate_path(config, n, method="fft")
    direct = generate_path(config, n, method="direct")
    scale = np.max(np.abs(direct.x))
    assert np.max(np.abs(fast.x - direct.x)) <= 1e-10 * scale
    assert np.max(np.abs(fast.u - direct.u)) <= 1e-10 * scale
    assert np.max(np.abs(fast.q - direct.q)) <= 1e-10 * np.max(np.abs(direct.q))


@pytest.mark.parametrize("n", [0, -3, 2.5])
def test_invalid_sizes(n):
    with pytest.raises(ParameterDomainError):
        generate_path(ProcessConfig(beta=0.7, trunc_k=4), n)


def test_invalid_method():
    with pytest.raises(ParameterDomainError):
        generate_path(ProcessConfig(beta=0.7, trunc_k=4), 4, method="loop")


def test_mismatched_coefficients():
    with pytest.raises(ConsistencyError):
        generate_path(ProcessConfig(beta=0.7, trunc_k=4), 4, coeffs=gen_coefficients(0.7, 5))


def test_too_few_innovations():
    with pytest.raises(ParameterDomainError):
        path_from_innovations(ProcessConfig(beta=0.7, trunc_k=4), np.zeros(4))


def test_path_arrays_are_read_only():
    path = generate_path(ProcessConfig(beta=0.7, trunc_k=4), 4)
    with pytest.raises(ValueError):
        path.y[0] = 1.0


def test_to_table():
    path = generate_path(ProcessConfig(beta=0.7, trunc_k=4, seed=5), 6)
    table = path.to_table()
    assert table.column_names == ["i", "x", "y"]
    assert table.column("i").to_pylist() == [1, 2, 3, 4, 5, 6]
    assert table.column("y").to_pylist() == path.y.tolist()


def test_second_moment_matches_marginal_variance():
    beta, trunc_k, n = 0.7, 2**12, 2**12
    coeffs = gen_coefficients(beta, trunc_k)
    config = ProcessConfig(beta=beta, trunc_k=trunc_k)
    moments = [
        np.mean(generate_path(config.with_seed(replication_seed(5, n, r)), n, coeffs=coeffs).x ** 2)
        for r in range(200)
    ]
    assert np.mean(moments) == pytest.approx(coeffs.variance(), rel=0.05)
