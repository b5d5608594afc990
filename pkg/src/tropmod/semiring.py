"""Tropical arithmetic: the max-plus semifield, Laurent polynomials, affine functions.

Tropical addition is ``max``, tropical multiplication is ``+``; the additive
zero is ``-inf`` and the multiplicative unit is ``0``.  Everything here is
exact: coefficients and evaluation points are rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple, Union

from .rationals import NEG_INF, POS_INF, Infinity, ensure_fraction

TropicalValue = Union[Fraction, Infinity]  # finite rational or NEG_INF


def _coerce_value(value) -> TropicalValue:
    if isinstance(value, TropicalNumber):
        return value.value
    if isinstance(value, Infinity):
        if value is POS_INF or value.sign > 0:
            raise ValueError("+inf is not a tropical number")
        return NEG_INF
    return ensure_fraction(value)


@dataclass(frozen=True, eq=False)
class TropicalNumber:
    """An element of the tropical semifield: a rational or -inf."""

    value: TropicalValue

    def __post_init__(self):
        object.__setattr__(self, "value", _coerce_value(self.value))

    @property
    def is_zero(self) -> bool:
        """True for the additive zero -inf."""
        return isinstance(self.value, Infinity)

    def __eq__(self, other) -> bool:
        try:
            return self.value == _coerce_value(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __add__(self, other) -> "TropicalNumber":
        return trop_add(self, other)

    __radd__ = __add__

    def __mul__(self, other) -> "TropicalNumber":
        return trop_mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "TropicalNumber":
        """Tropical multiplicative inverse (classical negation)."""
        if self.is_zero:
            raise ArithmeticError("the tropical zero -inf has no multiplicative inverse")
        return TropicalNumber(-self.value)

    def __repr__(self) -> str:
        return f"TropicalNumber({self.value})"


TROPICAL_ZERO = TropicalNumber(NEG_INF)
TROPICAL_ONE = TropicalNumber(0)


def trop_add(a, b) -> TropicalNumber:
    """Tropical sum: max(a, b).  -inf is the neutral element."""
    av, bv = _coerce_value(a), _coerce_value(b)
    if isinstance(av, Infinity):
        return TropicalNumber(bv)
    if isinstance(bv, Infinity):
        return TropicalNumber(av)
    return TropicalNumber(max(av, bv))


def trop_mul(a, b) -> TropicalNumber:
    """Tropical product: a + b.  -inf is absorbing."""
    av, bv = _coerce_value(a), _coerce_value(b)
    if isinstance(av, Infinity) or isinstance(bv, Infinity):
        return TROPICAL_ZERO
    return TropicalNumber(av + bv)


Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class TropicalPolynomial:
    """A tropical Laurent polynomial max_j (a_j + <j, x>) with rational a_j.

    ``terms`` maps integer exponent vectors to finite rational coefficients;
    terms with coefficient -inf are never stored.  At least one term is
    required, so the polynomial is a genuine function R^n -> R.
    """

    terms: Tuple[Tuple[Exponents, Fraction], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a tropical polynomial needs at least one finite term")
        arities = {len(e) for e, _ in self.terms}
        if len(arities) != 1:
            raise ValueError("all exponent vectors must have the same arity")
        exps = [e for e, _ in self.terms]
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate exponent vectors")
        if list(exps) != sorted(exps):
            raise ValueError("terms must be sorted by exponent; use TropicalPolynomial.of")

    @classmethod
    def of(cls, terms: Union[Mapping, Iterable]) -> "TropicalPolynomial":
        """Build a polynomial from {exponents: coefficient} or (exponents, coefficient) pairs.

        Coefficients equal to the tropical zero -inf are dropped; duplicate
        exponent vectors are combined tropically (by max).
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict = {}
        for exps, coeff in items:
            e = tuple(int(v) for v in exps)
            c = _coerce_value(coeff)
            if isinstance(c, Infinity):
                continue
            if e in merged:
                merged[e] = max(merged[e], c)
            else:
                merged[e] = c
        return cls(tuple(sorted(merged.items())))

    @property
    def nvars(self) -> int:
        return len(self.terms[0][0])

    def term_values(self, x: Sequence) -> Tuple[Fraction, ...]:
        """The affine value of every term at x, in term order."""
        point = [ensure_fraction(v) for v in x]
        if len(point) != self.nvars:
            raise ValueError(f"expected a point of dimension {self.nvars}, got {len(point)}")
        return tuple(
            coeff + sum((e * v for e, v in zip(exps, point)), Fraction(0))
            for exps, coeff in self.terms
        )

    def __call__(self, x: Sequence) -> Fraction:
        return eval_polynomial(self, x)

    def __str__(self) -> str:
        def monomial(exps, coeff):
            parts = [str(coeff)]
            parts += [f"{e}*x{i + 1}" for i, e in enumerate(exps) if e != 0]
            return " + ".join(parts)

        return "max(" + ", ".join(monomial(e, c) for e, c in self.terms) + ")"


def eval_polynomial(f: TropicalPolynomial, x: Sequence) -> Fraction:
    """Evaluate f at a finite rational point: the max over terms of a_j + <j, x>."""
    return max(f.term_values(x))


def is_zero_point(f: TropicalPolynomial, x: Sequence) -> bool:
    """True when the maximum in eval_polynomial is attained by at least two terms.

    This is the corner-locus criterion: exactly at such points the function
    fails to be locally affine, i.e. its tropical reciprocal -f is not
    regular there.
    """
    values = f.term_values(x)
    top = max(values)
    return sum(1 for v in values if v == top) >= 2


@dataclass(frozen=True)
class AffineFunction:
    """An affine function with integer slope; both it and its negation are
    single-term tropical Laurent polynomials."""

    slope: Tuple[int, ...]
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", tuple(int(v) for v in self.slope))
        object.__setattr__(self, "constant", ensure_fraction(self.constant))

    def __call__(self, x: Sequence) -> Fraction:
        point = [ensure_fraction(v) for v in x]
        if len(point) != len(self.slope):
            raise ValueError("dimension mismatch")
        return self.constant + sum((e * v for e, v in zip(self.slope, point)), Fraction(0))

    def to_polynomial(self) -> TropicalPolynomial:
        return TropicalPolynomial.of({self.slope: self.constant})

    def tropical_inverse(self) -> "AffineFunction":
        """The tropical reciprocal 1_T / f = -f, again affine."""
        return AffineFunction(tuple(-e for e in self.slope), -self.constant)
