"""Correction terms of lens spaces."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError


def d_invariant(p: int, q: int, i: int) -> Fraction:
    """d(p, q, i) by the reciprocity recursion, with d(1, 0, 0) = 0."""
    if (p, q, i) == (1, 0, 0):
        return Fraction(0)
    if p < 1 or not (0 <= q < p) or not (0 <= i < p + q):
        raise DomainError(f"d({p}, {q}, {i}) is outside the recursion domain")
    if q == 0:
        raise DomainError(f"d({p}, 0, {i}) needs p = 1")
    if gcd(p, q) != 1:
        raise DomainError(f"d({p}, {q}, {i}): p and q are not coprime")
    return _d(p, q, i)


@lru_cache(maxsize=None)
def _d(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    head = Fraction(p * q - (2 * i + 1 - p - q) ** 2, 4 * p * q)
    return head - _d(q, p % q, i % q)
