"""Independent oracles used only by the test suite.

These deliberately avoid the library's own algorithms: tree enumeration runs
over Prüfer sequences, double ratios are computed by explicit path extraction
on realized trees, and graph girth by breadth-first search.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from fractions import Fraction

from tropmod.moduli import ModuliPoint, RatioIndex
from tropmod.rationals import ExtendedRational
from tropmod.trees import to_tree


def prufer_types(n: int, internal: int) -> set:
    """Split systems of all trees with n labeled leaves and ``internal``
    unlabeled internal vertices of valence >= 3, via Prüfer sequences.

    Vertices 1..n are leaves (degree 1, so they never appear in the
    sequence); vertices n+1..n+internal are internal and must appear at
    least twice.  Each split system is returned once: quotienting by the
    internal labeling happens through the set.
    """
    leaves = list(range(1, n + 1))
    internals = list(range(n + 1, n + internal + 1))
    total = n + internal
    length = total - 2
    found = set()
    for seq in itertools.product(internals, repeat=length):
        counts = {v: 0 for v in internals}
        for v in seq:
            counts[v] += 1
        if any(c < 2 for c in counts.values()):
            continue
        edges = _prufer_to_edges(list(seq), total)
        found.add(_edges_to_splits(edges, n))
    return found


def prufer_trivalent_types(n: int) -> set:
    """Trivalent split systems: every internal vertex appears exactly twice."""
    found = set()
    internal = n - 2
    internals = list(range(n + 1, n + internal + 1))
    total = n + internal
    length = total - 2
    # multiset permutations of each internal label twice
    for seq in set(itertools.permutations(sorted(internals * 2), length)):
        edges = _prufer_to_edges(list(seq), total)
        found.add(_edges_to_splits(edges, n))
    return found


def _prufer_to_edges(seq, total):
    degree = [1] * (total + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    heap = [v for v in range(1, total + 1) if degree[v] == 1]
    heapq.heapify(heap)
    for v in seq:
        u = heapq.heappop(heap)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    u = heapq.heappop(heap)
    w = heapq.heappop(heap)
    edges.append((u, w))
    return edges


def _edges_to_splits(edges, n):
    """Canonical frozenset of sides (each the side without leaf 1)."""
    adjacency = {}
    for u, v in edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    sides = set()
    for u, v in edges:
        if u <= n or v <= n:
            continue  # leaf edge
        # leaves on v's side of the edge (u, v)
        seen = {u, v}
        stack = [v]
        reached = set()
        while stack:
            w = stack.pop()
            if w <= n:
                reached.add(w)
            for x in adjacency[w]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        side = frozenset(reached) if 1 not in reached else frozenset(range(1, n + 1)) - reached
        sides.add(side)
    return frozenset(sides)


def type_to_sides(t) -> frozenset:
    return frozenset(s.side for s in t.splits)


def path_double_ratio(x: ModuliPoint, r: RatioIndex) -> ExtendedRational:
    """Double ratio by explicit path extraction on the realized tree.

    Lists the bounded edges on the path between each ordered pair, intersects
    the two edge sets, and adds the lengths with sign +1 when the paths
    traverse the common edge in the same direction.
    """
    tree = to_tree(x.ctype)
    nverts = len(tree.vertices)
    adjacency = [[] for _ in range(nverts)]
    for eid, (split, p, c) in enumerate(tree.edges):
        adjacency[p].append((c, eid, +1))
        adjacency[c].append((p, eid, -1))

    home = tree.leaf_home

    def directed_path(a: int, b: int):
        """Bounded edges from leaf a to leaf b as {edge id: traversal sign}."""
        start, goal = home[a], home[b]
        parent = {start: None}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            if v == goal:
                break
            for w, eid, sign in adjacency[v]:
                if w not in parent:
                    parent[w] = (v, eid, sign)
                    queue.append(w)
        out = {}
        v = goal
        while parent[v] is not None:
            prev, eid, sign = parent[v]
            out[eid] = sign
            v = prev
        return out

    (i, j), (k, l) = r.first, r.second
    path_ij = directed_path(i, j)
    path_kl = directed_path(k, l)
    total: ExtendedRational = Fraction(0)
    for eid, sign in path_ij.items():
        if eid in path_kl:
            length = x.length_of(tree.edges[eid][0])
            total = total + (length if sign == path_kl[eid] else -length)
    return total


def girth(num_vertices: int, edges) -> int:
    """Length of the shortest cycle, by BFS from every vertex."""
    adjacency = [[] for _ in range(num_vertices)]
    for idx, (a, b) in enumerate(edges):
        adjacency[a].append((b, idx))
        adjacency[b].append((a, idx))
    best = None
    for root in range(num_vertices):
        dist = {root: 0}
        via = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, eid in adjacency[v]:
                if eid == via[v]:
                    continue
                if w in dist:
                    cycle = dist[v] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
                else:
                    dist[w] = dist[v] + 1
                    via[w] = eid
                    queue.append(w)
    return best


def determinant(rows) -> Fraction:
    """Exact determinant by fraction-free Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    size = len(mat)
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if mat[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, size):
            if mat[i][c] != 0:
                factor = mat[i][c] * inv
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[c])]
    return det
