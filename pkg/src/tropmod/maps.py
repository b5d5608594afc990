"""Forgetful maps, their sections, and boundary-stratum decomposition.

Forgetting a marking restricts every split to the remaining leaves, drops
the ones that degenerate into leaf edges, and merges the two splits that
become equal when a 2-valent vertex is suppressed (their lengths add).
Labels keep their original names; ``relabel`` densifies on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import TooFewLeaves
from .moduli import ModuliPoint
from .rationals import POS_INF, is_finite
from .trees import CombinatorialType, Split, to_tree


def forget_cone(t: CombinatorialType, j: int) -> CombinatorialType:
    """The combinatorial type of the forgetful image of any interior point."""
    if j not in t.labels:
        raise ValueError(f"label {j} is not a leaf of {t!r}")
    if t.n <= 3:
        raise TooFewLeaves("forgetting a leaf needs at least four marked leaves")
    labels = t.labels - {j}
    sides = set()
    for s in t.splits:
        side = s.side - {j}
        if len(side) < 2 or len(labels - side) < 2:
            continue
        sides.add(frozenset(side))
    return CombinatorialType(labels, frozenset(Split(labels, side) for side in sides))


def forget(x: ModuliPoint, j: int) -> ModuliPoint:
    """Contract the leaf marked j; lengths of merging splits add."""
    if j not in x.labels:
        raise ValueError(f"label {j} is not a leaf of {x!r}")
    if x.n <= 3:
        raise TooFewLeaves("forgetting a leaf needs at least four marked leaves")
    labels = x.labels - {j}
    merged: Dict[Split, object] = {}
    for s, length in x.lengths:
        side = s.side - {j}
        if len(side) < 2 or len(labels - side) < 2:
            continue
        new = Split(labels, side)
        merged[new] = merged[new] + length if new in merged else length
    ctype = CombinatorialType(labels, frozenset(merged))
    return ModuliPoint(ctype, tuple(merged.items()))


def section(x: ModuliPoint, k: int) -> ModuliPoint:
    """The section of the forgetful map defined by marking k.

    A new leaf is attached infinitesimally close to leaf k: every split
    gains the new label on k's side and one new split {k, new} appears with
    infinite length, so the image lies in the boundary.
    """
    if k not in x.labels:
        raise ValueError(f"label {k} is not a leaf of {x!r}")
    new = max(x.labels) + 1
    labels = x.labels | {new}
    lengths: Dict[Split, object] = {}
    for s, length in x.lengths:
        side = s.side | {new} if k in s.side else s.side
        lengths[Split(labels, side)] = length
    lengths[Split(labels, frozenset({k, new}))] = POS_INF
    ctype = CombinatorialType(labels, frozenset(lengths))
    return ModuliPoint(ctype, tuple(lengths.items()))


def relabel(x: ModuliPoint, mapping: Optional[Mapping[int, int]] = None) -> ModuliPoint:
    """Rename leaves; by default densely onto 1..n preserving order."""
    if mapping is None:
        mapping = {old: i + 1 for i, old in enumerate(sorted(x.labels))}
    if set(mapping) != set(x.labels) or len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping must be a bijection defined on all leaves")
    labels = frozenset(mapping[v] for v in x.labels)
    lengths = {
        Split(labels, frozenset(mapping[v] for v in s.side)): length
        for s, length in x.lengths
    }
    ctype = CombinatorialType(labels, frozenset(lengths))
    return ModuliPoint(ctype, tuple(lengths.items()))


@dataclass(frozen=True)
class BoundaryDecomposition:
    """The components cut out by the infinite edges, with gluing data.

    Each cut edge contributes one fresh marker label to the component on
    either side; ``gluings`` pairs them up as ((component, marker),
    (component, marker)).
    """

    components: Tuple[ModuliPoint, ...]
    gluings: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]


def decompose_boundary(x: ModuliPoint) -> BoundaryDecomposition:
    """Cut every infinite edge of the realized tree into finite components."""
    cut = [s for s, length in x.lengths if not is_finite(length)]
    if not cut:
        return BoundaryDecomposition(components=(x,), gluings=())
    cut.sort(key=lambda s: s.key)
    cut_set = set(cut)
    tree = to_tree(x.ctype)
    nverts = len(tree.vertices)

    adjacency: List[List[Tuple[int, Split]]] = [[] for _ in range(nverts)]
    for s, p, c in tree.edges:
        if s in cut_set:
            continue
        adjacency[p].append((c, s))
        adjacency[c].append((p, s))

    component_of = [-1] * nverts
    ncomps = 0
    for start in range(nverts):
        if component_of[start] != -1:
            continue
        stack = [start]
        component_of[start] = ncomps
        while stack:
            v = stack.pop()
            for w, _ in adjacency[v]:
                if component_of[w] == -1:
                    component_of[w] = ncomps
                    stack.append(w)
        ncomps += 1

    # fresh marker labels, two per cut edge, in canonical split order
    next_label = max(x.labels) + 1
    extra_leaves: Dict[int, List[int]] = {}
    glue_raw = []
    for s in cut:
        _, p, c = next(e for e in tree.edges if e[0] == s)
        m_parent, m_child = next_label, next_label + 1
        next_label += 2
        extra_leaves.setdefault(p, []).append(m_parent)
        extra_leaves.setdefault(c, []).append(m_child)
        glue_raw.append(((p, m_parent), (c, m_child)))

    comp_vertices = [[v for v in range(nverts) if component_of[v] == i] for i in range(ncomps)]
    comp_labels = []
    for verts in comp_vertices:
        lab = set()
        for v in verts:
            lab |= tree.vertices[v].leaves
            lab |= set(extra_leaves.get(v, ()))
        comp_labels.append(frozenset(lab))

    def subtree_labels(root: int, banned_split: Split) -> frozenset:
        """Leaves and markers reachable from root without crossing the edge."""
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w, s in adjacency[v]:
                if s == banned_split or w in seen:
                    continue
                seen.add(w)
                stack.append(w)
        out = set()
        for v in seen:
            out |= tree.vertices[v].leaves
            out |= set(extra_leaves.get(v, ()))
        return frozenset(out)

    points = []
    for comp, verts in enumerate(comp_vertices):
        vset = set(verts)
        lengths = {}
        for s, p, c in tree.edges:
            if s in cut_set or p not in vset:
                continue
            side = subtree_labels(c, s)
            lengths[Split(comp_labels[comp], side)] = x.length_of(s)
        ctype = CombinatorialType(comp_labels[comp], frozenset(lengths))
        points.append(ModuliPoint(ctype, tuple(lengths.items())))

    order = sorted(range(ncomps), key=lambda i: min(comp_labels[i]))
    rank = {old: new for new, old in enumerate(order)}
    components = tuple(points[i] for i in order)
    gluings = tuple(
        ((rank[component_of[p]], mp), (rank[component_of[c]], mc))
        for (p, mp), (c, mc) in glue_raw
    )
    return BoundaryDecomposition(components=components, gluings=gluings)
