"""Discrete derivative, antiderivative and definite integral.

The derivative of S is the difference sequence DS(i) = S(i+1) - S(i); its
right inverse is the cumulative-sum antiderivative whose free constant is
stored at index 1.  The definite integral from a to b is the inclusive sum
of S(a)..S(b).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvertedBounds, OutOfRange
from .sequences import FiniteSeq, RationalLike, as_rational


def derivative(seq: FiniteSeq, order: int = 1) -> FiniteSeq:
    """order-fold difference; empty when order >= len(seq), S itself at order 0."""
    if order < 0:
        raise OutOfRange(f"derivative order must be >= 0, got {order}")
    values = list(seq.values)
    for _ in range(order):
        if len(values) == 0:
            break
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return FiniteSeq(values)


def antiderivative(seq: FiniteSeq, constant: RationalLike = 0) -> FiniteSeq:
    """Cumulative sums of S prefixed by the integration constant.

    The result J has length n+1 with J(1) = constant and
    J(i) = constant + S(1) + ... + S(i-1); derivative(J) == S exactly.
    """
    c = as_rational(constant)
    values = [c]
    acc = c
    for v in seq.values:
        acc += v
        values.append(acc)
    return FiniteSeq(values)


def definite_integral(seq: FiniteSeq, a: int, b: int) -> Fraction:
    """Inclusive sum S(a) + ... + S(b) with 1 <= a <= b <= len(seq)."""
    n = len(seq)
    if a > b:
        raise InvertedBounds(a, b)
    if a < 1 or b > n:
        raise OutOfRange(f"bounds {a}..{b} outside 1..{n}")
    return sum(seq.values[a - 1 : b], Fraction(0))
