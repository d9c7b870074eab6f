import pytest

from lrdpyground.exceptions import ParameterDomainError
from lrdpyground.process import DEFAULT_TRUNCATION, Innovation, ProcessConfig


def test_defaults():
    config = ProcessConfig(beta=0.7)
    assert config.trunc_k == DEFAULT_TRUNCATION == 2**16
    assert config.innovation is Innovation.STANDARD_GAUSSIAN
    assert (config.mu, config.sigma, config.seed) == (0.0, 1.0, 0)


def test_innovation_from_string():
    config = ProcessConfig(beta=0.7, innovation="standard_gaussian")
    assert config.innovation is Innovation.STANDARD_GAUSSIAN


@pytest.mark.parametrize(
    "kwargs, name",
    [
        ({"beta": 1.2}, "beta"),
        ({"beta": 0.5}, "beta"),
        ({"beta": 0.7, "sigma": 0.0}, "sigma"),
        ({"beta": 0.7, "trunc_k": -5}, "trunc_k"),
        ({"beta": 0.7, "innovation": "student"}, "innovation"),
        ({"beta": 0.7, "seed": -1}, "seed"),
        ({"beta": 0.7, "seed": 2**64}, "seed"),
        ({"beta": 0.7, "mu": float("inf")}, "mu"),
    ],
)
def test_invalid_parameters(kwargs, name):
    with pytest.raises(ParameterDomainError) as err:
        ProcessConfig(**kwargs)
    assert err.value.name == name


def test_negative_scale_is_accepted():
    assert ProcessConfig(beta=0.7, sigma=-2.0).sigma == -2.0


def test_with_seed_keeps_the_model():
    config = ProcessConfig(beta=0.8, trunc_k=32, mu=1.0, sigma=3.0, seed=1)
    other = config.with_seed(99)
    assert other.seed == 99
    assert other == ProcessConfig(beta=0.8, trunc_k=32, mu=1.0, sigma=3.0, seed=99)


def test_to_dict():
    assert ProcessConfig(beta=0.7, trunc_k=8, seed=3).to_dict() == {
        "beta": 0.7,
        "trunc_k": 8,
        "innovation": "standard_gaussian",
        "mu": 0.0,
        "sigma": 1.0,
        "seed": 3,
    }
