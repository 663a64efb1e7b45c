"""Sign-based classification of sequences by first and second differences.

Convexity here means the second difference is everywhere >= 0 (strictly
convex: > 0; continuously convex: strictly convex with a nowhere-zero first
difference).  Concave flags are the same tests on -S.  The collinearity
determinant of three consecutive graph points equals the second difference
at that index and twice the signed triangle area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import derivative
from .errors import OutOfRange, TooShort
from .sequences import FiniteSeq


@dataclass(frozen=True)
class MonotonicityReport:
    strictly_increasing: bool
    strictly_decreasing: bool
    increasing: bool
    decreasing: bool
    constant: bool


@dataclass(frozen=True)
class ConvexityReport:
    convex: bool
    concave: bool
    strictly_convex: bool
    strictly_concave: bool
    continuously_convex: bool
    continuously_concave: bool
    second_derivative: FiniteSeq


def classify_monotonicity(seq: FiniteSeq) -> MonotonicityReport:
    if len(seq) < 2:
        raise TooShort(len(seq), 2)
    diffs = derivative(seq).values
    return MonotonicityReport(
        strictly_increasing=all(d > 0 for d in diffs),
        strictly_decreasing=all(d < 0 for d in diffs),
        increasing=all(d >= 0 for d in diffs),
        decreasing=all(d <= 0 for d in diffs),
        constant=all(d == 0 for d in diffs),
    )


def classify_convexity(seq: FiniteSeq) -> ConvexityReport:
    if len(seq) < 3:
        raise TooShort(len(seq), 3)
    first = derivative(seq).values
    second = derivative(seq, 2)
    d2 = second.values
    strictly_convex = all(d > 0 for d in d2)
    strictly_concave = all(d < 0 for d in d2)
    nonzero_slope = all(d != 0 for d in first)
    return ConvexityReport(
        convex=all(d >= 0 for d in d2),
        concave=all(d <= 0 for d in d2),
        strictly_convex=strictly_convex,
        strictly_concave=strictly_concave,
        continuously_convex=strictly_convex and nonzero_slope,
        continuously_concave=strictly_concave and nonzero_slope,
        second_derivative=second,
    )


def collinearity_determinant(seq: FiniteSeq, i: int) -> Fraction:
    """det of rows (i, S(i), 1), (i+1, S(i+1), 1), (i+2, S(i+2), 1).

    Zero exactly when the three graph points are collinear; |det|/2 is the
    triangle area; the value equals derivative(seq, 2)(i).
    """
    n = len(seq)
    if not 1 <= i <= n - 2:
        raise OutOfRange(f"index {i} outside 1..{n - 2}")
    x = [Fraction(i), Fraction(i + 1), Fraction(i + 2)]
    y = [seq.at(i), seq.at(i + 1), seq.at(i + 2)]
    return (
        x[0] * (y[1] - y[2])
        - y[0] * (x[1] - x[2])
        + (x[1] * y[2] - x[2] * y[1])
    )
