"""Isomorph-free generation of family-free graphs and extremal censuses.

Generation works in two stages.

1. Connected free graphs are grown from K1 by canonical augmentation
   (vertex addition). A child is accepted only if its new vertex lies in
   the automorphism orbit of a canonically chosen non-cut vertex; every
   connected graph has one, and deleting it leaves a connected free
   parent, so each isomorphism class comes out exactly once.
2. Isolate-free graphs are multisets of those components. Multisets are
   extended in non-decreasing component order and a non-free multiset is
   never extended, which is sound because containment is monotone.

Degree and matching-number caps implied by the family (K_{1,t} gives
Delta <= t-1, tK_2 gives nu <= t-1) prune both stages.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import graph6
from .canon import canonical_labeling, orbits
from .containment import (
    ForbiddenFamily,
    Freeness,
    _matching_size,
    _star_size,
    is_free,
)
from .graph import Graph, disjoint_union, matching as matching_graph, star
from .matching import matching_number

MAX_CENSUS_VERTICES = 24
# Subtrees rooted at this order are the parallel work units.
SPLIT_ORDER = 4


class CapabilityError(ValueError):
    pass


class Mode(enum.Enum):
    MAX_EDGES = "max-edges"
    ALL_EXTREMAL = "all-extremal"


@dataclass(frozen=True)
class CensusQuery:
    family: ForbiddenFamily | None
    max_vertices: int
    delta_cap: int | None = None
    nu_cap: int | None = None
    mode: Mode = Mode.ALL_EXTREMAL
    budget: int | None = None  # generated nodes per subtree
    containment_budget: int | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.max_vertices <= MAX_CENSUS_VERTICES:
            raise CapabilityError(
                f"max_vertices must lie in 1..{MAX_CENSUS_VERTICES}, got {self.max_vertices}"
            )
        if self.workers < 1:
            raise ValueError("workers >= 1 required")

    def caps(self) -> tuple[int | None, int | None]:
        """Explicit caps tightened by the ones the family implies."""
        delta, nu = self.delta_cap, self.nu_cap
        for p in self.family.patterns if self.family else ():
            if (t := _matching_size(p)) is not None:
                nu = t - 1 if nu is None else min(nu, t - 1)
                if t == 1:
                    delta = 0
            elif (t := _star_size(p)) is not None:
                delta = t - 1 if delta is None else min(delta, t - 1)
        return delta, nu


@dataclass(frozen=True)
class CensusResult:
    best_edges: int
    extremal_graphs: tuple[Graph, ...]
    nodes_explored: int
    complete: bool = True
    keys: tuple[str, ...] = field(default=(), compare=False)

    def lines(self) -> list[str]:
        head = (
            f"best={self.best_edges} extremal={len(self.extremal_graphs)} "
            f"nodes={self.nodes_explored} complete={'yes' if self.complete else 'no'}"
        )
        return [head] + [f"graph={graph6.encode(g)}" for g in self.extremal_graphs]


def _canon(g: Graph) -> tuple[str, list[int], list[int]]:
    order, gens = canonical_labeling(g)
    return graph6.encode(g.relabel(order)), order, orbits(g.n, gens)


def _accept(child: Graph, new: int, order: list[int], orbit: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    noncut = [v for v in range(child.n) if child.remove_vertex(v).is_connected()]
    low = min(child.degree(v) for v in noncut)
    w = max((v for v in noncut if child.degree(v) == low), key=pos.__getitem__)
    return orbit[w] == orbit[new]


class _Walker:
    """Depth-first canonical augmentation below one root."""

    def __init__(self, q: CensusQuery) -> None:
        self.q = q
        self.delta, self.nu = q.caps()
        self.nodes = 0
        self.complete = True

    def free(self, g: Graph) -> bool:
        if self.q.family is None:
            return True
        res = is_free(g, self.q.family, self.q.containment_budget)
        if res.status is Freeness.UNKNOWN:
            self.complete = False
        return res.status is Freeness.FREE

    def children(self, parent: Graph) -> Iterator[Graph]:
        delta = self.delta
        if parent.n >= self.q.max_vertices:
            return
        open_ = [v for v in range(parent.n) if delta is None or parent.degree(v) < delta]
        top = len(open_) if delta is None else min(delta, len(open_))
        seen: set[str] = set()
        for size in range(1, top + 1):
            for nbrs in combinations(open_, size):
                child = parent.add_vertex(nbrs)
                if self.nu is not None and matching_number(child) > self.nu:
                    continue
                key, order, orbit = _canon(child)
                if key in seen or not _accept(child, parent.n, order, orbit):
                    continue
                seen.add(key)
                if self.free(child):
                    yield child

    def walk(self, root: Graph, out: list[Graph]) -> None:
        stack = [root]
        budget = self.q.budget
        while stack:
            g = stack.pop()
            self.nodes += 1
            if budget is not None and self.nodes > budget:
                self.complete = False
                return
            if g.n >= 2:
                out.append(g)
            stack.extend(reversed(list(self.children(g))))


def _subtree(args: tuple[CensusQuery, Graph]) -> tuple[list[str], int, bool]:
    q, root = args
    w = _Walker(q)
    out: list[Graph] = []
    w.walk(root, out)
    return [graph6.encode(g) for g in out], w.nodes, w.complete


def connected_free_graphs(q: CensusQuery) -> tuple[list[Graph], int, bool]:
    """Every connected free graph on 2..max_vertices vertices, once each.

    Returns ``(graphs, nodes, complete)``; graphs are sorted by order,
    edge count and canonical key so the result never depends on workers.
    """
    w = _Walker(q)
    shallow: list[Graph] = []
    frontier: list[Graph] = []
    stack = [Graph(1)]
    while stack:
        g = stack.pop()
        if g.n >= SPLIT_ORDER:
            frontier.append(g)
            continue
        w.nodes += 1
        if g.n >= 2:
            shallow.append(g)
        stack.extend(reversed(list(w.children(g))))
    jobs = [(q, g) for g in frontier]
    if q.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=q.workers) as pool:
            results = list(pool.map(_subtree, jobs))
    else:
        results = [_subtree(job) for job in jobs]
    graphs = list(shallow)
    nodes, complete = w.nodes, w.complete
    for codes, count, ok in results:
        graphs.extend(graph6.decode(c) for c in codes)
        nodes += count
        complete = complete and ok
    keyed = sorted(((g.n, g.num_edges, _canon(g)[0]), g) for g in graphs)
    return [g for _, g in keyed], nodes, complete


def _unions(q: CensusQuery, comps: list[Graph], walker: _Walker) -> Iterator[Graph]:
    nus = [matching_number(c) for c in comps]
    nu_cap = walker.nu

    def rec(start: int, parts: list[Graph], order: int, nu: int) -> Iterator[Graph]:
        for i in range(start, len(comps)):
            c = comps[i]
            if order + c.n > q.max_vertices:
                break  # components are sorted by order
            if nu_cap is not None and nu + nus[i] > nu_cap:
                continue
            cand = parts + [c]
            g = c if not parts else disjoint_union(cand)
            if len(cand) > 1 and not walker.free(g):
                continue
            yield g
            yield from rec(i, cand, order + c.n, nu + nus[i])

    yield from rec(0, [], 0, 0)


def generate_free_graphs(q: CensusQuery) -> Iterator[Graph]:
    """Every free graph with 1..max_vertices vertices and no isolated vertex.

    Each isomorphism class appears once (components in canonical order).
    """
    comps, _, complete = connected_free_graphs(q)
    yield from _unions(q, comps, _Walker(q))


def max_edges_free(q: CensusQuery) -> CensusResult:
    """Exact maximum edge count, and its graphs modulo isolated vertices.

    ``MAX_EDGES`` keeps one extremal graph (smallest canonical key),
    ``ALL_EXTREMAL`` keeps them all. Reported graphs are re-checked with
    the generic containment search (fast paths off).
    """
    comps, nodes, complete = connected_free_graphs(q)
    walker = _Walker(q)
    best = 0
    found: dict[str, Graph] = {}
    for g in _unions(q, comps, walker):
        if g.num_edges < best:
            continue
        if g.num_edges > best:
            best = g.num_edges
            found = {}
        key, order, _ = _canon(g)
        found.setdefault(key, g.relabel(order))
    complete = complete and walker.complete
    keys = sorted(found)
    if q.mode is Mode.MAX_EDGES:
        keys = keys[:1]
    graphs = tuple(found[k] for k in keys)
    if q.family is not None:
        for g in graphs:
            res = is_free(g, q.family, q.containment_budget, fast_paths=False)
            if res.status is Freeness.NOT_FREE:
                raise AssertionError(f"census produced a non-free graph {graph6.encode(g)}")
    return CensusResult(best, graphs, nodes, complete, tuple(keys))


def max_edges_nu_delta(
    nu_cap: int, delta_cap: int, n_cap: int | None = None, containment_budget: int | None = None
) -> CensusResult:
    """Largest graph with nu <= nu_cap and Delta <= delta_cap.

    A maximal matching touches every edge, so an isolate-free graph has at
    most 2*nu*Delta vertices; that is the default vertex bound.
    """
    if nu_cap < 1 or delta_cap < 1:
        raise ValueError("caps must be positive")
    n_cap = 2 * nu_cap * delta_cap if n_cap is None else n_cap
    family = ForbiddenFamily(
        (star(delta_cap + 1), matching_graph(nu_cap + 1)),
        f"{{K_1,{delta_cap + 1}, {nu_cap + 1}K_2}}",
    )
    return max_edges_free(
        CensusQuery(family, max_vertices=min(n_cap, MAX_CENSUS_VERTICES), containment_budget=containment_budget)
    )


def brute_force_free_classes(family: ForbiddenFamily, n: int) -> set[str]:
    """Canonical keys of all isolate-free free graphs on exactly n vertices."""
    from .canon import canonical_form
    from .containment import brute_force_contains
    from .graph import all_labeled_graphs

    out = set()
    for g in all_labeled_graphs(n):
        if g.isolated_vertices():
            continue
        if any(brute_force_contains(g, p) for p in family.patterns):
            continue
        out.add(canonical_form(g))
    return out
