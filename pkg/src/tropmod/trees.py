"""Combinatorial types of genus-0 marked tropical curves as split systems.

A bounded edge of a leaf-labeled tree bipartitions the leaves; the splits of
all bounded edges form a pairwise-compatible system, and conversely every
such system is realized by a unique tree.  Types are stored canonically as
split sets, with each split represented by the side not containing the
smallest label.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterable, Optional, Tuple, Union

from .errors import IncompatibleSplit, NotCodimensionOne, SplitAbsent

Labels = FrozenSet[int]


def _as_labels(labels: Union[int, Iterable[int]]) -> Labels:
    if isinstance(labels, int):
        if labels < 3:
            raise ValueError("at least three marked leaves are required")
        return frozenset(range(1, labels + 1))
    out = frozenset(int(x) for x in labels)
    if len(out) < 3:
        raise ValueError("at least three marked leaves are required")
    if any(x < 1 for x in out):
        raise ValueError("leaf labels must be positive integers")
    return out


@dataclass(frozen=True)
class Split:
    """A bipartition of the leaf set with both sides of size >= 2.

    The stored side is the one not containing the smallest label, which
    makes the representation unique; construction accepts either side.
    """

    labels: Labels
    side: Labels

    def __post_init__(self):
        labels = frozenset(self.labels)
        side = frozenset(self.side)
        if not side <= labels:
            raise ValueError("side must consist of leaf labels")
        anchor = min(labels)
        if anchor in side:
            side = labels - side
        if not 2 <= len(side) <= len(labels) - 2:
            raise ValueError("both sides of a split need at least two leaves")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "side", side)

    @classmethod
    def of(cls, labels: Union[int, Iterable[int]], side: Iterable[int]) -> "Split":
        return cls(_as_labels(labels), frozenset(int(x) for x in side))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def complement(self) -> Labels:
        return self.labels - self.side

    @property
    def key(self) -> Tuple[int, ...]:
        """Canonical sort key: the sorted side."""
        return tuple(sorted(self.side))

    @property
    def text(self) -> str:
        """Canonical textual form: the sorted side, e.g. "45" for 45|123."""
        side = sorted(self.side)
        if max(self.labels) <= 9:
            return "".join(str(x) for x in side)
        return ",".join(str(x) for x in side)

    def side_of(self, label: int) -> Labels:
        if label in self.side:
            return self.side
        if label in self.labels:
            return self.complement
        raise KeyError(f"label {label} is not a leaf")

    def separates(self, a: int, b: int) -> bool:
        return (a in self.side) != (b in self.side)

    def compatible_with(self, other: "Split") -> bool:
        """Whether the two bipartitions can coexist in one tree.

        With both sides anchored away from the smallest label this is:
        disjoint or nested.
        """
        if self.labels != other.labels:
            raise ValueError("splits live on different leaf sets")
        a, b = self.side, other.side
        return a.isdisjoint(b) or a <= b or b <= a

    def __repr__(self) -> str:
        return f"Split({self.text})"


@dataclass(frozen=True)
class CombinatorialType:
    """A pairwise-compatible set of splits; indexes one cone of the moduli fan."""

    labels: Labels
    splits: FrozenSet[Split]

    def __post_init__(self):
        labels = frozenset(self.labels)
        splits = frozenset(self.splits)
        if len(labels) < 3:
            raise ValueError("at least three marked leaves are required")
        for s in splits:
            if s.labels != labels:
                raise ValueError(f"{s!r} does not live on the type's leaf set")
        ordered = sorted(splits, key=lambda s: s.key)
        for s, t in itertools.combinations(ordered, 2):
            if not s.compatible_with(t):
                raise IncompatibleSplit(f"{s!r} and {t!r} cannot coexist in one tree")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "splits", splits)

    @classmethod
    def of(
        cls, labels: Union[int, Iterable[int]], sides: Iterable[Iterable[int]] = ()
    ) -> "CombinatorialType":
        lab = _as_labels(labels)
        return cls(lab, frozenset(Split.of(lab, side) for side in sides))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        """Number of bounded edges = dimension of the corresponding cone."""
        return len(self.splits)

    @property
    def is_trivalent(self) -> bool:
        return self.dim == self.n - 3

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(sorted(s.key for s in self.splits))

    @property
    def text(self) -> str:
        return "{" + ",".join(s.text for s in sorted(self.splits, key=lambda s: s.key)) + "}"

    def __repr__(self) -> str:
        return f"CombinatorialType(n={self.n}, {self.text})"


@dataclass(frozen=True)
class TreeVertex:
    """One internal vertex: its directly attached leaves and incident splits."""

    cluster: Optional[Labels]  # side below this vertex; None for the root vertex
    leaves: Labels
    splits: FrozenSet[Split]

    @property
    def valence(self) -> int:
        return len(self.leaves) + len(self.splits)


@dataclass(frozen=True)
class TreeRealization:
    """The unique tree realizing a combinatorial type.

    ``edges`` lists the bounded edges as (split, parent index, child index),
    the parent being the endpoint nearer the smallest label.  Leaf edges are
    implicit: each label hangs off the vertex ``leaf_home[label]``.
    """

    ctype: CombinatorialType
    vertices: Tuple[TreeVertex, ...]
    edges: Tuple[Tuple[Split, int, int], ...]

    @cached_property
    def leaf_home(self) -> Dict[int, int]:
        home = {}
        for idx, v in enumerate(self.vertices):
            for leaf in v.leaves:
                home[leaf] = idx
        return home

    def valences(self) -> Tuple[int, ...]:
        return tuple(v.valence for v in self.vertices)

    def branches(self, vertex: int) -> Tuple[Labels, ...]:
        """The leaf sets of the subtrees hanging off each edge at a vertex."""
        v = self.vertices[vertex]
        out = [frozenset([leaf]) for leaf in sorted(v.leaves)]
        for split, parent, child in self.edges:
            if parent == vertex:
                out.append(split.side)
            elif child == vertex:
                out.append(split.labels - split.side)
        return tuple(sorted(out, key=lambda b: min(b)))


@lru_cache(maxsize=None)
def to_tree(t: CombinatorialType) -> TreeRealization:
    """Realize a type as a tree, using the laminar structure of the sides."""
    anchor = min(t.labels)
    ordered = sorted(t.splits, key=lambda s: s.key)
    index = {s: i + 1 for i, s in enumerate(ordered)}  # vertex 0 is the root

    def parent_split(s: Split) -> Optional[Split]:
        supersets = [u for u in ordered if u is not s and s.side < u.side]
        if not supersets:
            return None
        return min(supersets, key=lambda u: len(u.side))

    leaves = [set() for _ in range(len(ordered) + 1)]
    for lbl in t.labels:
        if lbl == anchor:
            leaves[0].add(lbl)
            continue
        containing = [s for s in ordered if lbl in s.side]
        if containing:
            host = min(containing, key=lambda s: len(s.side))
            leaves[index[host]].add(lbl)
        else:
            leaves[0].add(lbl)

    edges = []
    adjacent = [set() for _ in range(len(ordered) + 1)]
    for s in ordered:
        p = parent_split(s)
        pidx = index[p] if p is not None else 0
        edges.append((s, pidx, index[s]))
        adjacent[pidx].add(s)
        adjacent[index[s]].add(s)

    vertices = [
        TreeVertex(
            cluster=None if i == 0 else ordered[i - 1].side,
            leaves=frozenset(leaves[i]),
            splits=frozenset(adjacent[i]),
        )
        for i in range(len(ordered) + 1)
    ]
    assert all(v.valence >= 3 for v in vertices)
    return TreeRealization(ctype=t, vertices=tuple(vertices), edges=tuple(edges))


def valence_profile(t: CombinatorialType) -> Tuple[int, ...]:
    """Sorted multiset of internal-vertex valences."""
    return tuple(sorted(to_tree(t).valences()))


def contract(t: CombinatorialType, s: Split) -> CombinatorialType:
    """Contract the bounded edge of s to a point: drop the split."""
    if s not in t.splits:
        raise SplitAbsent(f"{s!r} is not a split of {t!r}")
    return CombinatorialType(t.labels, t.splits - {s})


def resolutions(t: CombinatorialType) -> Tuple[CombinatorialType, ...]:
    """The three trivalent perturbations of a type with a single 4-valent vertex."""
    tree = to_tree(t)
    vals = tree.valences()
    if sorted(vals) != [3] * (len(vals) - 1) + [4]:
        raise NotCodimensionOne(
            f"valence profile {tuple(sorted(vals))} has no unique 4-valent vertex"
        )
    vertex = vals.index(4)
    b0, b1, b2, b3 = tree.branches(vertex)
    others = (b1, b2, b3)
    out = []
    for pick in others:
        side = b0 | pick
        out.append(CombinatorialType(t.labels, t.splits | {Split(t.labels, side)}))
    return tuple(sorted(out, key=lambda r: r.key))


def count_rays(n: int) -> int:
    """Number of one-split types: bipartitions of {1..n} with both sides >= 2."""
    if n < 4:
        raise ValueError("rays exist only for n >= 4")
    return sum(comb(n - 1, k) for k in range(2, n - 1))


@lru_cache(maxsize=None)
def _types_table(n: int) -> Tuple[Tuple[CombinatorialType, ...], ...]:
    """All combinatorial types on {1..n}, grouped by split count.

    Types on n leaves are built from types on n-1 leaves by attaching leaf n
    at an internal vertex (same dimension), in the middle of a bounded edge,
    or in the middle of a leaf edge (dimension + 1).  Stripping leaf n
    inverts each attachment, so every type arises exactly once.
    """
    if n == 3:
        return ((CombinatorialType.of(3),),)
    labels = frozenset(range(1, n + 1))
    anchor = 1
    buckets = [set() for _ in range(n - 2)]  # dims 0 .. n-3

    def grow(sides: Iterable[FrozenSet[int]], dim: int):
        splits = frozenset(Split(labels, side) for side in sides)
        buckets[dim].add(CombinatorialType(labels, splits))

    for dim, group in enumerate(_types_table(n - 1)):
        for t in group:
            tree = to_tree(t)
            old_sides = [s.side for s in t.splits]
            # at an internal vertex: n joins the sides whose component holds it
            for v in tree.vertices:
                cluster = v.cluster
                grow(
                    [
                        side | {n} if cluster is not None and cluster <= side else side
                        for side in old_sides
                    ],
                    dim,
                )
            # in the middle of the bounded edge of s: s doubles into s, s+{n}
            for s in t.splits:
                new_sides = [
                    side | {n} if s.side < side else side
                    for side in old_sides
                    if side != s.side
                ]
                grow(new_sides + [s.side, s.side | {n}], dim + 1)
            # in the middle of the leaf edge of j: new split {j, n} | rest
            for j in sorted(t.labels):
                new_sides = [side | {n} if j in side else side for side in old_sides]
                extra = labels - {j, n} if j == anchor else frozenset({j, n})
                grow(new_sides + [extra], dim + 1)

    return tuple(tuple(sorted(b, key=lambda t: t.key)) for b in buckets)


def enumerate_types(n: int, dim: int) -> Tuple[CombinatorialType, ...]:
    """All combinatorial types with exactly ``dim`` splits, canonically ordered."""
    if not isinstance(n, int) or n < 3:
        raise ValueError("n must be an integer >= 3")
    if not 0 <= dim <= n - 3:
        raise ValueError(f"dim must lie in [0, {n - 3}] for n = {n}")
    return _types_table(n)[dim]
