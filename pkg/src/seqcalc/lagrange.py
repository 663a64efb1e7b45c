"""Exact interpolation through consecutive graph points of a sequence.

The interpolating polynomial through (j, S(j)) for j = n0..n0+m is found by
exact Gaussian elimination on the Vandermonde system; its degree-m
coefficient times m! equals the m-th difference of S at n0, which gives a
determinant route to higher derivatives via Cramer's rule:

    D^m S(i) = m! * det(M_S) / det(V)

where V has rows ((i+r)^m, ..., (i+r), 1) and M_S replaces the first column
with S(i+r).  det(V) is a column-reversed Vandermonde determinant, so it is
never zero but equals m! in absolute value only for m <= 2; the bare
det(M_S) therefore does not equal D^m S for m >= 3 (the verifier pins this).
Determinants are evaluated by fraction-free (Bareiss) elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import OutOfRange
from .sequences import FiniteSeq, RationalLike, as_rational


@dataclass(frozen=True)
class Polynomial:
    """Dense rational coefficients, index k holding the x^k coefficient.

    Trailing zeros are trimmed; the zero polynomial has no coefficients and
    degree -1.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Sequence[RationalLike] = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def evaluate(self, x: RationalLike) -> Fraction:
        xq = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * xq + c
        return acc

    def render(self) -> str:
        """Ascending powers, zero terms skipped: "1 - 2*x + x^2"."""
        if not self.coefficients:
            return "0"
        pieces = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<Polynomial {self.render()}>"


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over the rationals; the system must be square
    and nonsingular (always true for distinct interpolation nodes)."""
    n = len(matrix)
    aug = [row[:] + [rhs[r]] for r, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def bareiss_determinant(matrix: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Fraction-free determinant; exact for rational entries."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [[as_rational(v) for v in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _check_window(seq: FiniteSeq, start: int, m: int) -> None:
    if m < 0:
        raise OutOfRange(f"order must be >= 0, got {m}")
    if start < 1 or start + m > len(seq):
        raise OutOfRange(
            f"window {start}..{start + m} outside sequence of length {len(seq)}"
        )


def lagrange_poly(seq: FiniteSeq, n0: int, m: int) -> Polynomial:
    """Unique polynomial of degree <= m through (j, S(j)), j = n0..n0+m."""
    _check_window(seq, n0, m)
    nodes = [Fraction(n0 + r) for r in range(m + 1)]
    matrix = [[x**k for k in range(m + 1)] for x in nodes]
    rhs = [seq.at(n0 + r) for r in range(m + 1)]
    return Polynomial(_solve_exact(matrix, rhs))


def lagrange_mth_derivative(seq: FiniteSeq, n0: int, m: int) -> Fraction:
    """m! times the degree-m coefficient; equals derivative(seq, m)(n0)."""
    poly = lagrange_poly(seq, n0, m)
    return factorial(m) * poly.coefficient(m)


def effective_degree(seq: FiniteSeq, n0: int, m: int) -> int:
    """Degree of the interpolant; equals m exactly when D^m S(n0) != 0."""
    return lagrange_poly(seq, n0, m).degree


def interpolation_determinants(seq: FiniteSeq, i: int, m: int) -> tuple[Fraction, Fraction]:
    """(det(M_S), det(V)) for the descending-power node matrix at window i."""
    _check_window(seq, i, m)
    nodes = [Fraction(i + r) for r in range(m + 1)]
    v_matrix = [[x ** (m - k) for k in range(m + 1)] for x in nodes]
    ms_matrix = [[seq.at(i + r)] + v_matrix[r][1:] for r in range(m + 1)]
    return bareiss_determinant(ms_matrix), bareiss_determinant(v_matrix)


def dm_via_determinant(seq: FiniteSeq, i: int, m: int) -> Fraction:
    """Cramer-normalized determinant route: m! * det(M_S) / det(V)."""
    if m < 1:
        raise OutOfRange(f"determinant route needs order >= 1, got {m}")
    det_ms, det_v = interpolation_determinants(seq, i, m)
    return factorial(m) * det_ms / det_v
