"""Deterministic diagram corpora shared by the test modules."""

import random
from functools import lru_cache
from math import gcd

from lensgrid import InvalidDiagram, validate


def random_diagram(rng: random.Random, nmax: int = 3, pmax: int = 5, nmin: int = 1):
    while True:
        p = rng.randint(2, pmax)
        q = rng.randint(1, p - 1)
        if gcd(p, q) != 1:
            continue
        n = rng.randint(nmin, nmax)
        zc = list(range(n))
        wc = list(range(n))
        rng.shuffle(zc)
        rng.shuffle(wc)
        z = [c + n * rng.randrange(p) for c in zc]
        w = [c + n * rng.randrange(p) for c in wc]
        try:
            return validate(p, q, z, w)
        except InvalidDiagram:
            continue


@lru_cache(maxsize=None)
def corpus(size: int = 100, nmax: int = 3, pmax: int = 5, seed: int = 2024):
    rng = random.Random(seed)
    return tuple(random_diagram(rng, nmax, pmax) for _ in range(size))


def lens_pairs(pmax: int, pmin: int = 2):
    return [(p, q) for p in range(pmin, pmax + 1) for q in range(1, p) if gcd(p, q) == 1]
