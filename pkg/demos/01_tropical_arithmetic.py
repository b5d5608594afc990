"""Tropical arithmetic from scratch: max-plus numbers, polynomials, corner loci.

Run with:  python3 demos/01_tropical_arithmetic.py
"""

from fractions import Fraction

from tropmod import (
    NEG_INF,
    TROPICAL_ONE,
    TROPICAL_ZERO,
    AffineFunction,
    TropicalPolynomial,
    eval_polynomial,
    is_zero_point,
    trop_add,
    trop_mul,
)

print("== the semifield ==")
print("2 + 3   (tropically) =", trop_add(2, 3).value, "   # max")
print("2 * 3   (tropically) =", trop_mul(2, 3).value, "   # sum")
print("zero element:", TROPICAL_ZERO.value, "| unit element:", TROPICAL_ONE.value)
print("-inf absorbs products:", trop_mul(NEG_INF, 7).value)
print()

print("== a tropical Laurent polynomial ==")
f = TropicalPolynomial.of({(2,): Fraction(0), (1,): Fraction(1)})
print("f =", f)
for x in (0, 1, 2, 3):
    print(f"  f({x}) =", eval_polynomial(f, (x,)))
print("the two terms tie where 2x = 1 + x, i.e. at x = 1:")
print("  corner point at x=1?", is_zero_point(f, (1,)))
print()

print("== the tropical line max(x, y, 0) ==")
line = TropicalPolynomial.of({(1, 0): 0, (0, 1): 0, (0, 0): 0})
print("its corner locus is three rays meeting at the origin:")
for p in ((0, 0), (2, 2), (-3, 0), (0, -5), (5, 3)):
    print(f"  {p}: on the line? {is_zero_point(line, p)}")
print()

print("== affine functions are invertible ==")
g = AffineFunction((1, -2), Fraction(3, 4))
h = g.tropical_inverse()
x = (Fraction(2), Fraction(1, 2))
print("g(x) =", g(x), "| (1/g)(x) =", h(x), "| product:", g(x) + h(x), "= unit")
