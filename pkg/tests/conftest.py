"""Shared helpers for the test suite.

The catalog constructors are memoized, so tests obtain arrangements by
calling ``catalog.get`` directly; intersection lattices, NBC bases and
rank caches are then shared across the whole pytest run.
"""

import random
from fractions import Fraction

from oscoh import catalog

# Every catalog entry, with the parametrized family pinned to one size.
CATALOG_NAMES = [
    "boolean(4)",
    "ceva3",
    "ceva3-section",
    "example-lstrict",
    "maclane",
    "maclane-matroid",
    "maclane-section",
    "product-example",
]


def next_prime(m: int) -> int:
    """Smallest prime strictly greater than m."""

    def is_prime(x):
        if x < 2:
            return False
        f = 2
        while f * f <= x:
            if x % f == 0:
                return False
            f += 1
        return True

    p = m + 1
    while not is_prime(p):
        p += 1
    return p


def random_weight_vector(rng: random.Random, n: int, denominators=(2, 3, 5, 7)):
    """Random nonzero rational weight vector with prime denominators."""
    while True:
        lam = tuple(
            Fraction(rng.randint(-3, 3), rng.choice(denominators))
            for _ in range(n)
        )
        if any(lam):
            return lam


def catalog_arrangements():
    """(name, arrangement) pairs for every catalog entry."""
    return [(name, catalog.get(name)) for name in CATALOG_NAMES]
