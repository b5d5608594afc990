"""The double-ratio embedding and its exact inverse.

Each coordinate is indexed by two disjoint ordered pairs of markings and
measures the signed overlap of the two leaf-to-leaf paths.  The vanishing
pattern over every 4-subset recovers the tree, and the minimal nonzero
absolute values recover the edge lengths.

Run with:  python3 demos/03_embedding_roundtrip.py
"""

from fractions import Fraction

from tropmod import (
    ModuliPoint,
    RatioIndex,
    canonical_coordinates,
    double_ratio,
    embed,
    reconstruct,
)

print("== the three rays for n=4 ==")
for side in ((3, 4), (2, 4), (2, 3)):
    point = ModuliPoint.of(4, {side: 1})
    print(f"  split side {side}: image {tuple(map(str, embed(point).entries))}")
print("(their primitive directions sum to zero: the tripod is balanced)")
print()

print("== a 5-marked point ==")
x = ModuliPoint.of(5, {(4, 5): Fraction(3, 2), (3, 4, 5): Fraction(7, 3)})
print("point:", x)
vec = embed(x)
print("its 15 coordinates:")
for r, value in zip(canonical_coordinates(5), vec.entries):
    marker = "" if value == 0 else "   <-- nonzero"
    print(f"  {r.first}{r.second}: {value}{marker}")
print()

print("a single double ratio, directly:")
r = RatioIndex((1, 4), (2, 5))
print(f"  paths 1->4 and 2->5 overlap with signed length {double_ratio(x, r)}")
print()

print("== reconstruction ==")
back = reconstruct(vec, 5)
print("reconstructed:", back)
print("equal to the original, exactly:", back == x)
print()

print("vectors outside the image are rejected:")
try:
    reconstruct((1, 1, 1), 4)
except Exception as exc:
    print("  reconstruct((1,1,1), 4) ->", type(exc).__name__, "-", exc)
