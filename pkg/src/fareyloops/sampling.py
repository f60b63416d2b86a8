"""Seeded generators for the randomized scans.

All scans draw from ``random.Random(seed)`` instances so that reports are
reproducible bit for bit.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .contfrac import CFExpansion


def random_finite_cf(
    rng: random.Random,
    min_len: int = 2,
    max_len: int = 8,
    max_entry: int = 9,
    a0_max: int = 3,
    inf_tail: bool = False,
) -> CFExpansion:
    length = rng.randint(min_len, max_len)
    body = [rng.randint(1, max_entry) for _ in range(length)]
    if body[-1] == 1:
        body[-1] += 1  # canonical form does not end in 1
    return CFExpansion(rng.randint(0, a0_max), tuple(body), None, inf_tail)


def random_periodic_cf(
    rng: random.Random,
    max_pre: int = 2,
    max_period: int = 3,
    max_entry: int = 6,
    a0_max: int = 2,
) -> CFExpansion:
    pre = [rng.randint(1, max_entry) for _ in range(rng.randint(0, max_pre))]
    period = [rng.randint(1, max_entry) for _ in range(rng.randint(1, max_period))]
    return CFExpansion(rng.randint(0, a0_max), tuple(pre), tuple(period))


def random_unit_rational(rng: random.Random, q_max: int = 500) -> Fraction:
    """A rational strictly inside (0, 1)."""
    while True:
        q = rng.randint(3, q_max)
        p = rng.randint(1, q - 1)
        x = Fraction(p, q)
        if 0 < x < 1:
            return x
