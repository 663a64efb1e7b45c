#!/usr/bin/env python3
"""Exact step-refinement demo for the discrete derivative on a grid.

Tabulates the sup-norm error of the discrete derivative against the true
derivative for f(x) = x^2 and f(x) = x^3 on [0, 2], halving the step each
row.  Everything is exact rational arithmetic, so the x^2 error is exactly
h and the x^3 error is exactly h*(3X - 2h).
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from seqcalc import FiniteSeq, derivative_error, sample_function  # noqa: E402

X_MAX = Fraction(2)


def error_for(fn, d_fn, h):
    count = int(X_MAX / h) + 1
    grid = sample_function(fn, 0, h, count)
    truth = FiniteSeq(d_fn(grid.point(i)) for i in range(1, count))
    return derivative_error(grid, truth)


def main() -> None:
    steps = [Fraction(1, 2**k) for k in range(6)]
    print(f"{'h':>8}  {'error x^2':>12}  {'error x^3':>12}  {'x^3 ratio':>10}")
    previous = None
    for h in steps:
        square = error_for(lambda x: x * x, lambda x: 2 * x, h)
        cube = error_for(lambda x: x**3, lambda x: 3 * x * x, h)
        ratio = "" if previous is None else str(cube / previous)
        print(f"{str(h):>8}  {str(square):>12}  {str(cube):>12}  {ratio:>10}")
        previous = cube
    print("\nx^2 error equals h exactly; x^3 halving ratios approach 1/2 from above.")


if __name__ == "__main__":
    main()
