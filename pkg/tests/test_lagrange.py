"""Interpolation, coefficient laws, and the determinant route to D^m."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqcalc import (
    DIFFERENCE,
    FiniteSeq,
    Polynomial,
    derivative,
    dm_via_determinant,
    effective_degree,
    lagrange_mth_derivative,
    lagrange_poly,
)
from seqcalc.errors import OutOfRange
from seqcalc.lagrange import bareiss_determinant, interpolation_determinants

from strategies import finite_seqs, rationals


def cofactor_oracle(matrix):
    if len(matrix) == 1:
        return matrix[0][0]
    total = Fraction(0)
    for c, entry in enumerate(matrix[0]):
        minor = [row[:c] + row[c + 1 :] for row in matrix[1:]]
        total += (-1) ** c * entry * cofactor_oracle(minor)
    return total


def basis_form_oracle(xs, ys, x):
    total = Fraction(0)
    for j, yj in enumerate(ys):
        term = yj
        for k, xk in enumerate(xs):
            if k != j:
                term *= Fraction(x - xk, xs[j] - xk)
        total += term
    return total


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 2, 0, 0]).coefficients == (Fraction(1), Fraction(2))
        assert Polynomial([0, 0]).degree == -1
        assert Polynomial([]).degree == -1
        assert Polynomial([5]).degree == 0

    def test_evaluate(self):
        p = Polynomial([1, -2, 1])  # (x-1)^2
        assert p.evaluate(1) == 0
        assert p.evaluate("3/2") == Fraction(1, 4)

    @pytest.mark.parametrize(
        "coeffs,text",
        [
            ([], "0"),
            ([5], "5"),
            ([0, 0, 1], "x^2"),
            ([1, -2, 1], "1 - 2*x + x^2"),
            (["-1/2", 0, "3/4"], "-1/2 + 3/4*x^2"),
        ],
    )
    def test_render(self, coeffs, text):
        assert Polynomial(coeffs).render() == text


def test_interpolation_examples():
    squares = FiniteSeq([1, 4, 9, 16])
    poly = lagrange_poly(squares, 1, 2)
    assert poly.coefficients == (Fraction(0), Fraction(0), Fraction(1))
    assert factorial(2) * poly.coefficient(2) == derivative(squares, 2).at(1) == 2

    constant = FiniteSeq([7, 7, 7])
    flat = lagrange_poly(constant, 1, 2)
    assert flat.degree == 0
    assert flat.coefficient(0) == 7

    assert lagrange_poly(squares, 3, 0).coefficients == (Fraction(9),)


def test_mth_derivative_examples():
    cubes = FiniteSeq([1, 8, 27, 64])
    assert lagrange_mth_derivative(cubes, 1, 3) == 6
    assert derivative(cubes, 3).at(1) == 6
    s = FiniteSeq([2, "7/2", -1])
    assert lagrange_mth_derivative(s, 1, 1) == s.at(2) - s.at(1)
    assert lagrange_mth_derivative(FiniteSeq([1, 4, 9, 16]), 1, 2) == 2


def test_effective_degree_examples():
    assert effective_degree(FiniteSeq([0, 1, 2]), 1, 2) == 1
    assert effective_degree(FiniteSeq([1, 4, 9]), 1, 2) == 2
    assert effective_degree(FiniteSeq([3, 3, 3]), 1, 2) == 0


def test_window_bounds():
    s = FiniteSeq([1, 2, 3])
    with pytest.raises(OutOfRange):
        lagrange_poly(s, 0, 2)
    with pytest.raises(OutOfRange):
        lagrange_poly(s, 2, 2)
    with pytest.raises(OutOfRange):
        dm_via_determinant(s, 1, 0)


def test_determinant_route_examples():
    # m=1: det(V) = -1 and det(M_S) = S(i) - S(i+1)
    s = FiniteSeq([5, "7/3"])
    det_ms, det_v = interpolation_determinants(s, 1, 1)
    assert det_v == -1
    assert det_ms == s.at(1) - s.at(2)
    assert dm_via_determinant(s, 1, 1) == s.at(2) - s.at(1)

    assert dm_via_determinant(FiniteSeq([1, 4, 9]), 1, 2) == 2

    cubes = FiniteSeq([1, 8, 27, 64])
    det_ms, det_v = interpolation_determinants(cubes, 1, 3)
    assert dm_via_determinant(cubes, 1, 3) == 6
    assert det_ms == 12  # bare determinant is off by |det V| / 3! = 2
    assert abs(det_v) == 12


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
def test_bareiss_matches_cofactor_expansion(rows):
    assert bareiss_determinant(rows) == cofactor_oracle(rows)


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=50)
def test_bareiss_matches_cofactor_expansion_4x4(rows):
    assert bareiss_determinant(rows) == cofactor_oracle(rows)


@given(finite_seqs(min_size=1, max_size=10), st.data())
def test_interpolation_hits_every_node(s, data):
    m = data.draw(st.integers(0, min(6, len(s) - 1)))
    n0 = data.draw(st.integers(1, len(s) - m))
    poly = lagrange_poly(s, n0, m)
    xs = list(range(n0, n0 + m + 1))
    for j in xs:
        assert poly.evaluate(j) == s.at(j)
    probe = data.draw(rationals)
    assert poly.evaluate(probe) == basis_form_oracle(xs, [s.at(j) for j in xs], probe)


@given(finite_seqs(min_size=1, max_size=10), st.data())
def test_leading_coefficient_law(s, data):
    m = data.draw(st.integers(0, min(6, len(s) - 1)))
    n0 = data.draw(st.integers(1, len(s) - m))
    poly = lagrange_poly(s, n0, m)
    target = derivative(s, m).at(n0)
    assert factorial(m) * poly.coefficient(m) == target
    assert lagrange_mth_derivative(s, n0, m) == target
    assert (effective_degree(s, n0, m) == m) == (target != 0)


@given(finite_seqs(min_size=2, max_size=10), st.data())
def test_route_agreement(s, data):
    m = data.draw(st.integers(1, min(5, len(s) - 1)))
    i = data.draw(st.integers(1, len(s) - m))
    by_difference = derivative(s, m).at(i)
    by_operator = (DIFFERENCE**m).apply(s).at(i)
    assert dm_via_determinant(s, i, m) == by_difference == by_operator
