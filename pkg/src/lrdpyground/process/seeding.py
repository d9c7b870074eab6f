"""Deterministic seeds for independent replications.

Replications of a Monte Carlo experiment must be independent and
reproducible regardless of the order (or the process) in which they run.
Each replication therefore gets its own seed, derived from the master seed
through :class:`numpy.random.SeedSequence` using the sample size and the
replication index as the spawn key. Two different keys give statistically
independent streams, the same key always gives the same stream.

>>> replication_seed(42, 256, 0) == replication_seed(42, 256, 0)
True
>>> replication_seed(42, 256, 0) == replication_seed(42, 256, 1)
False
"""

import numpy as np

__all__ = ("replication_seed", "replication_seeds")


def replication_seed(master_seed: int, n: int, index: int) -> int:
    """Derive the 64-bit seed of replication ``index`` at sample size ``n``."""
    sequence = np.random.SeedSequence(int(master_seed), spawn_key=(int(n), int(index)))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def replication_seeds(master_seed: int, n: int, reps: int) -> list[int]:
    """Seeds of replications ``0 .. reps-1`` at sample size ``n``."""
    return [replication_seed(master_seed, n, index) for index in range(reps)]
