"""Weighted fans and the exact balancing / local smoothness certificates.

A fan is balanced at a codimension-1 face when the weighted sum of the
primitive directions of the adjacent facets lies in the rational span of the
face.  Local smoothness strengthens this to the integer span together with
saturation of the local lattice, which is exactly the tripod-times-R^{n-4}
product structure of the moduli fan near such a face.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import NotCodimensionOne, NotPure
from .lattice import in_integer_span, in_rational_span, is_saturated
from .moduli import direction_vector
from .trees import (
    CombinatorialType,
    Split,
    contract,
    enumerate_types,
    resolutions,
    to_tree,
    valence_profile,
)


@dataclass(frozen=True)
class WeightedFan:
    """A pure-dimensional set of cones of the moduli fan with positive weights."""

    n: int
    dim: int
    cones: Tuple[Tuple[CombinatorialType, int], ...]

    def __post_init__(self):
        labels = frozenset(range(1, self.n + 1))
        cones = sorted(self.cones, key=lambda cw: cw[0].key)
        for ctype, weight in cones:
            if ctype.labels != labels:
                raise ValueError(f"{ctype!r} does not live on leaves 1..{self.n}")
            if ctype.dim != self.dim:
                raise NotPure(
                    f"cone {ctype!r} has dimension {ctype.dim}, fan has {self.dim}"
                )
            if not isinstance(weight, int) or weight < 1:
                raise ValueError(f"weights must be positive integers, got {weight!r}")
        if len({c for c, _ in cones}) != len(cones):
            raise ValueError("duplicate cones in fan")
        object.__setattr__(self, "cones", tuple(cones))

    @classmethod
    def of(cls, n: int, cones: Iterable[Tuple[CombinatorialType, int]]) -> "WeightedFan":
        cones = tuple(cones)
        if not cones:
            raise ValueError("a fan needs at least one cone")
        return cls(n=n, dim=cones[0][0].dim, cones=cones)

    @property
    def types(self) -> Tuple[CombinatorialType, ...]:
        return tuple(c for c, _ in self.cones)


@dataclass(frozen=True)
class AdjacentFacet:
    """One facet adjacent to a face, with the primitive direction it adds."""

    cone: CombinatorialType
    extra_split: Split
    weight: int
    direction: Tuple[int, ...]


@dataclass(frozen=True)
class BalancingReport:
    """Verdict of the balancing (and optionally smoothness) check at one face."""

    face: CombinatorialType
    adjacent: Tuple[AdjacentFacet, ...]
    weighted_sum: Tuple[int, ...]
    balanced: bool
    smooth: Optional[bool] = None


def moduli_fan(n: int) -> WeightedFan:
    """The full moduli fan: all trivalent types with weight 1."""
    if n < 4:
        raise ValueError("the moduli fan needs n >= 4")
    return WeightedFan.of(n, tuple((t, 1) for t in enumerate_types(n, n - 3)))


def _face_directions(face: CombinatorialType) -> List[Tuple[int, ...]]:
    return [direction_vector(face, s) for s in sorted(face.splits, key=lambda s: s.key)]


def _balance_at(
    face: CombinatorialType,
    adjacent: List[Tuple[CombinatorialType, int, Split]],
) -> BalancingReport:
    records = []
    for cone, weight, extra in sorted(adjacent, key=lambda cw: (cw[0].key, cw[2].key)):
        records.append(
            AdjacentFacet(
                cone=cone,
                extra_split=extra,
                weight=weight,
                direction=direction_vector(cone, extra),
            )
        )
    total = [0] * len(records[0].direction)
    for rec in records:
        for i, x in enumerate(rec.direction):
            total[i] += rec.weight * x
    balanced = in_rational_span(total, _face_directions(face))
    return BalancingReport(
        face=face,
        adjacent=tuple(records),
        weighted_sum=tuple(total),
        balanced=balanced,
    )


def check_balanced(fan: WeightedFan, max_workers: int = 1) -> List[BalancingReport]:
    """Certify balancing at every codimension-1 face of the fan.

    Faces are the types obtained by removing one split from a cone; every
    such face is checked, whether shared by several cones or exposed on the
    boundary of a single one.
    """
    dims = {c.dim for c, _ in fan.cones}
    if len(dims) > 1:
        raise NotPure(f"fan has mixed cone dimensions {sorted(dims)}")
    faces: Dict[CombinatorialType, List[Tuple[CombinatorialType, int, Split]]] = {}
    for cone, weight in fan.cones:
        for s in sorted(cone.splits, key=lambda s: s.key):
            faces.setdefault(contract(cone, s), []).append((cone, weight, s))
    ordered = sorted(faces, key=lambda f: f.key)
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(lambda f: _balance_at(f, faces[f]), ordered))
    return [_balance_at(face, faces[face]) for face in ordered]


def check_smooth_local(n: int, tau: CombinatorialType) -> BalancingReport:
    """Certify local smoothness of the moduli fan at a codimension-1 type.

    The three resolution directions must sum into the integer span of the
    face's directions, and the face directions together with two of them
    must generate a saturated sublattice of Z^N.  Together these certify the
    local product structure (tripod times R^{n-4}) with multiplicity one.
    """
    if tau.n != n:
        raise ValueError(f"type is for n = {tau.n}, not {n}")
    profile = valence_profile(tau)
    if profile.count(4) != 1 or set(profile) - {3, 4}:
        raise NotCodimensionOne(f"valence profile {profile} is not codimension one")
    adjacent = []
    for rho in resolutions(tau):
        extra = next(iter(rho.splits - tau.splits))
        adjacent.append((rho, 1, extra))
    report = _balance_at(tau, adjacent)
    face_dirs = _face_directions(tau)
    in_lattice = in_integer_span(report.weighted_sum, face_dirs)
    first_two = [rec.direction for rec in report.adjacent[:2]]
    saturated = is_saturated(face_dirs + first_two)
    return BalancingReport(
        face=report.face,
        adjacent=report.adjacent,
        weighted_sum=report.weighted_sum,
        balanced=report.balanced,
        smooth=in_lattice and saturated,
    )


def psi_divisor(n: int, k: int) -> WeightedFan:
    """The weight-1 fan of codimension-1 types whose 4-valent vertex carries leaf k."""
    if n < 4:
        raise ValueError("psi divisors need n >= 4")
    if not 1 <= k <= n:
        raise ValueError(f"leaf label k must lie in 1..{n}")
    cones = []
    for t in enumerate_types(n, n - 4):
        tree = to_tree(t)
        heavy = [v for v in tree.vertices if v.valence == 4]
        if len(heavy) == 1 and k in heavy[0].leaves:
            cones.append((t, 1))
    return WeightedFan(n=n, dim=n - 4, cones=tuple(cones))


def check_psi_balanced(n: int, k: int, max_workers: int = 1) -> List[BalancingReport]:
    """Balancing certificates for the psi divisor at its codimension-2 faces."""
    if n < 5:
        raise ValueError("psi balancing is a condition on faces; needs n >= 5")
    return check_balanced(psi_divisor(n, k), max_workers=max_workers)


def canonical_divisor(t: CombinatorialType) -> Dict[int, int]:
    """Multiplicity (valence - 2) for each internal vertex of the realized tree.

    Keys are vertex indices of ``to_tree(t)``.
    """
    tree = to_tree(t)
    return {i: v.valence - 2 for i, v in enumerate(tree.vertices)}
