"""Psi-divisors, the canonical class, forgetful maps and boundary strata.

Run with:  python3 demos/05_psi_and_forgetful.py
"""

from fractions import Fraction

from tropmod import (
    ModuliPoint,
    POS_INF,
    canonical_divisor,
    check_psi_balanced,
    decompose_boundary,
    enumerate_types,
    forget,
    psi_divisor,
    section,
)

print("== psi divisors ==")
fan = psi_divisor(5, 1)
print("psi_1 on the 5-marked space: rays",
      sorted(next(iter(t.splits)).text for t, _ in fan.cones))
print("(exactly the pairs avoiding the marking 1)")
for k in (1, 2, 3):
    ok = all(r.balanced for r in check_psi_balanced(5, k))
    print(f"  psi_{k} balanced at its codim-2 faces: {ok}")
print()

print("== the canonical class lives on vertices ==")
for t in (enumerate_types(5, 2)[0], enumerate_types(5, 1)[0], enumerate_types(5, 0)[0]):
    mults = sorted(canonical_divisor(t).values())
    print(f"  type {t.text}: vertex multiplicities (valence - 2) = {mults}")
print()

print("== forgetful maps ==")
x = ModuliPoint.of(5, {(4, 5): Fraction(3, 2), (3, 4, 5): Fraction(7, 3)})
print("x =", x)
print("forget marking 5:", forget(x, 5), "  # the 45-edge becomes a leaf edge")
print("forget marking 3:", forget(x, 3), "  # the two edges merge, lengths add")
print()

print("== sections land in the boundary ==")
s = section(x, 2)
print("section at marking 2:", s)
print("undone by forgetting the new leaf:", forget(s, 6) == x)
print()

print("== boundary points decompose along infinite edges ==")
y = ModuliPoint.of(5, {(4, 5): Fraction(2), (3, 4, 5): POS_INF})
d = decompose_boundary(y)
print("y =", y)
for i, comp in enumerate(d.components):
    print(f"  component {i}: labels {sorted(comp.labels)}, point {comp}")
print("gluing pairs (component, marker):", d.gluings)
