import pytest

from lrdpyground.process import replication_seed, replication_seeds


def test_seeds_are_reproducible():
    assert replication_seeds(7, 1024, 5) == replication_seeds(7, 1024, 5)


@pytest.mark.parametrize("other", [(8, 1024, 0), (7, 2048, 0), (7, 1024, 1)])
def test_seeds_depend_on_every_key(other):
    assert replication_seed(7, 1024, 0) != replication_seed(*other)


def test_seeds_are_64_bit():
    seeds = replication_seeds(0, 64, 100)
    assert len(set(seeds)) == 100
    assert all(0 <= seed < 2**64 for seed in seeds)
