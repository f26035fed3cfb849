"""Canonical labelling by equitable refinement and individualization.

The search tree is the usual one: refine to an equitable ordered
partition, individualize each vertex of the first smallest non-singleton
cell, recurse. The canonical labelling is the leaf whose relabelled
adjacency rows are lexicographically largest. Leaves with equal
certificates yield automorphisms, which prune sibling subtrees (orbits of
the pointwise stabiliser of the current prefix) and let the search jump
back to the node where the two leaves diverge.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .graph import Graph, bits
from . import graph6

Cells = list[list[int]]


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement of an ordered partition.

    Sub-cells replace their parent in place, ordered by neighbour count,
    so the result is invariant under relabelling.
    """
    while True:
        if all(len(c) == 1 for c in cells):
            return cells
        changed = False
        splitters = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            splitters.append(m)
        for w in splitters:
            new: Cells = []
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault((rows[v] & w).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(c)
                else:
                    changed = True
                    new.extend(groups[key] for key in sorted(groups))
            cells = new
        if not changed:
            return cells


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) for each vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for x, y in enumerate(gen):
            rx, ry = find(x), find(y)
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, g: Graph) -> None:
        self.rows = g.rows
        self.n = g.n
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.leaves: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
        self.generators: list[list[int]] = []

    def _leaf(self, cells: Cells, path: list[int]) -> int | None:
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            r = 0
            for u in bits(self.rows[v]):
                r |= 1 << pos[u]
            cert.append(r)
        key = tuple(cert)
        if self.best is None or key > self.best:
            self.best = key
            self.best_order = order
        seen = self.leaves.get(key)
        if seen is None:
            self.leaves[key] = (order, path)
            return None
        order0, path0 = seen
        gamma = [0] * self.n
        for a, b in zip(order0, order):
            gamma[a] = b
        self.generators.append(gamma)
        # distinct leaves: neither path is a prefix of the other
        depth = 0
        while depth < min(len(path0), len(path)) and path0[depth] == path[depth]:
            depth += 1
        return depth

    def node(self, cells: Cells, path: list[int]) -> int | None:
        depth = len(path)
        target = -1
        size = self.n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
        if target < 0:
            return self._leaf(cells, path)
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored:
                fixing = [gm for gm in self.generators if all(gm[x] == x for x in path)]
                if fixing:
                    rep = orbits(self.n, fixing)
                    if any(rep[v] == rep[w] for w in explored):
                        continue
            explored.append(v)
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            jump = self.node(refine(self.rows, child), path + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(
    g: Graph, partition: Sequence[Sequence[int]] | None = None
) -> tuple[list[int], list[list[int]]]:
    """Return ``(order, generators)``.

    ``order[i]`` is the vertex placed at canonical position ``i``;
    ``generators`` are automorphisms (as image lists) found on the way.
    An optional ordered ``partition`` restricts to colour-preserving maps.
    """
    if g.n == 0:
        return [], []
    cells = [list(c) for c in partition] if partition else [list(range(g.n))]
    s = _Search(g)
    s.node(refine(g.rows, cells), [])
    return s.best_order, s.generators


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    return g.relabel(order)


def canonical_form(g: Graph) -> str:
    """graph6 text of the canonical relabelling; equal iff isomorphic."""
    return graph6.encode(canonical_graph(g))


def automorphism_orbits(g: Graph, fixed: Sequence[int] = ()) -> list[int]:
    """Orbit representatives under automorphisms fixing ``fixed`` pointwise."""
    if g.n == 0:
        return []
    partition = [[v] for v in fixed] + [[v for v in range(g.n) if v not in set(fixed)]]
    partition = [c for c in partition if c]
    _, gens = canonical_labeling(g, partition)
    return orbits(g.n, gens)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def bruteforce_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum upper-triangle adjacency string over all n! relabellings.

    Exponential; meant as an independent check of ``canonical_form`` for
    n <= 8.
    """
    n = g.n
    pairs = [(i, j) for j in range(n) for i in range(j)]
    best = None
    for perm in permutations(range(n)):
        word = tuple(1 if g.has_edge(perm[i], perm[j]) else 0 for i, j in pairs)
        if best is None or word < best:
            best = word
    return n, best or ()
