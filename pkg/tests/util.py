"""Shared helpers for the test suite."""

import random

from polysat.poset import Poset, bits


def random_poset(rng, n, prob=0.3):
    """A random n-element poset in topological indexing."""
    up = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if rng.random() < prob:
                up[x] |= 1 << y
    for x in range(n - 1, -1, -1):
        for y in bits(up[x]):
            up[x] |= up[y]
    return Poset(n, up)


def seeded(seed=0):
    return random.Random(seed)
