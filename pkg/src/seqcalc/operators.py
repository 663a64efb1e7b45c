"""The symbolic operator ring acting on finite sequences.

Every operator here is a commutative polynomial in two generators with
rational coefficients: the *top* generator (drop the last term) and the
*bottom* generator (drop the first term, a unit shift).  The familiar
operators are ring elements:

    identity   1            = T^0 B^0
    top        I            (generator)
    bottom     E            (generator)
    middle     M = (I+E)/2
    difference D = E - I

Ring arithmetic keeps the sparse term map canonical (no zero coefficients),
so two expressions denote the same operator exactly when their term maps are
equal.  Note the identity and the top generator are *symbolically* distinct
even though their applications agree after truncation.

Applying a polynomial with maximum total degree d to a sequence of length n
yields a sequence of length max(n - d, 0): each monomial T^a B^b contributes
S(i + b), and lower-degree monomials are evaluated on the same truncated
index range 1..n-d.  The canonical zero operator maps S to the zero sequence
of the same length (it acts as the scalar 0).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NegativePower
from .sequences import FiniteSeq, RationalLike, as_rational

Monomial = tuple[int, int]  # (top exponent, bottom exponent)


class OperatorPoly:
    """Canonical sparse polynomial over the top/bottom generators."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, RationalLike] = ()):
        clean: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), coeff in items:
            if a < 0 or b < 0:
                raise NegativePower(min(a, b))
            c = as_rational(coeff)
            if c != 0:
                clean[(a, b)] = clean.get((a, b), Fraction(0)) + c
                if clean[(a, b)] == 0:
                    del clean[(a, b)]
        self._terms = clean

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @staticmethod
    def zero() -> OperatorPoly:
        return OperatorPoly()

    @staticmethod
    def scalar(value: RationalLike) -> OperatorPoly:
        return OperatorPoly({(0, 0): as_rational(value)})

    @staticmethod
    def generator(top_power: int = 0, bottom_power: int = 0) -> OperatorPoly:
        return OperatorPoly({(top_power, bottom_power): 1})

    def max_degree(self) -> int:
        """Largest total degree among the terms, -1 for the zero operator."""
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        """True when every monomial shares one total degree (or zero)."""
        degrees = {a + b for a, b in self._terms}
        return len(degrees) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Union[OperatorPoly, RationalLike]) -> OperatorPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return OperatorPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> OperatorPoly:
        return OperatorPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Union[OperatorPoly, RationalLike]) -> OperatorPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> OperatorPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: Union[OperatorPoly, RationalLike]) -> OperatorPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product: dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                product[key] = product.get(key, Fraction(0)) + c1 * c2
        return OperatorPoly(product)

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> OperatorPoly:
        s = as_rational(scalar)
        return OperatorPoly({k: c / s for k, c in self._terms.items()})

    def __pow__(self, exponent: int) -> OperatorPoly:
        if not isinstance(exponent, int):
            raise TypeError("operator exponents must be integers")
        if exponent < 0:
            raise NegativePower(exponent)
        result = OperatorPoly.scalar(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, seq: FiniteSeq) -> FiniteSeq:
        """Act on a finite sequence with the truncation convention."""
        if self.is_zero():
            return FiniteSeq([Fraction(0)] * len(seq))
        d = self.max_degree()
        n = len(seq)
        out_len = max(n - d, 0)
        values = []
        for i in range(out_len):
            acc = Fraction(0)
            for (_, b), coeff in self._terms.items():
                acc += coeff * seq.values[i + b]
            values.append(acc)
        return FiniteSeq(values)

    def render(self) -> str:
        """Canonical text: terms by total degree then bottom exponent.

        Examples: "1/2*I + 1/2*E", "-I + E", "I^2 - 2*I*E + E^2", "0".
        Re-parseable by the expression parser.
        """
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))
        pieces = []
        for idx, ((a, b), coeff) in enumerate(ordered):
            text = _term_text(a, b, abs(coeff))
            if idx == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<OperatorPoly {self.render()}>"


def _coerce(value: Union[OperatorPoly, RationalLike]) -> OperatorPoly:
    if isinstance(value, OperatorPoly):
        return value
    if isinstance(value, (int, str, Fraction)):
        return OperatorPoly.scalar(value)
    return NotImplemented


def _term_text(a: int, b: int, coeff: Fraction) -> str:
    factors = []
    if a:
        factors.append("I" if a == 1 else f"I^{a}")
    if b:
        factors.append("E" if b == 1 else f"E^{b}")
    if not factors:
        return str(coeff)
    mono = "*".join(factors)
    if coeff == 1:
        return mono
    return f"{coeff}*{mono}"


IDENTITY = OperatorPoly.scalar(1)
TOP = OperatorPoly.generator(top_power=1)
BOTTOM = OperatorPoly.generator(bottom_power=1)
MIDDLE = (TOP + BOTTOM) / 2
DIFFERENCE = BOTTOM - TOP

GENERATORS = {"1": IDENTITY, "I": TOP, "E": BOTTOM, "M": MIDDLE, "D": DIFFERENCE}


def top(seq: FiniteSeq) -> FiniteSeq:
    """Drop the last term (length n -> n-1; empty stays empty)."""
    return FiniteSeq(seq.values[:-1]) if seq.values else seq


def bottom(seq: FiniteSeq) -> FiniteSeq:
    """Drop the first term; the unit shift."""
    return FiniteSeq(seq.values[1:]) if seq.values else seq


def middle(seq: FiniteSeq) -> FiniteSeq:
    """Pairwise mean of top and bottom."""
    vals = seq.values
    return FiniteSeq((vals[i] + vals[i + 1]) / 2 for i in range(len(vals) - 1)) if vals else seq
