"""Deterministic sequence generators for the identity checks.

Random rationals draw numerators from -9..9 and denominators from 1..9.
The special families follow their defining recurrences exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import BadParameter
from .sequences import FiniteSeq, RationalLike, as_rational


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_nonzero_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-9, -8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8, 9]),
                    rng.randint(1, 9))


def random_rational_sequence(length: int, rng: random.Random) -> FiniteSeq:
    return FiniteSeq(random_rational(rng) for _ in range(length))


def random_zero_free_sequence(length: int, rng: random.Random) -> FiniteSeq:
    # Resample whole sequences until no entry is zero; terminates almost
    # surely since each entry is zero with probability < 1.
    while True:
        seq = random_rational_sequence(length, rng)
        if all(v != 0 for v in seq):
            return seq


def arithmetic_sequence(start: RationalLike, d: RationalLike, length: int) -> FiniteSeq:
    a = as_rational(start)
    step = as_rational(d)
    return FiniteSeq(a + i * step for i in range(length))


def geometric_sequence(start: RationalLike, q: RationalLike, length: int) -> FiniteSeq:
    ratio = as_rational(q)
    if ratio == 0:
        raise BadParameter("geometric ratio q must be nonzero")
    a = as_rational(start)
    values = []
    for _ in range(length):
        values.append(a)
        a = a * ratio
    return FiniteSeq(values)


def constant_sequence(value: RationalLike, length: int) -> FiniteSeq:
    return FiniteSeq.constant(value, length)
