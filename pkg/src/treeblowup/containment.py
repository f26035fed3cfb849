"""Subgraph (not induced) containment and forbidden-family freeness.

The backtracking search fixes pattern vertices one at a time and keeps
the candidate set as a bitset: unused host vertices of large enough
degree adjacent to the images of every placed pattern neighbour.

Two symmetry reductions keep the search small on the highly symmetric
hosts the constructions produce. Both are justified by the same argument:
the lexicographically least embedding (images listed in search order)
satisfies them, so no embedding is lost.

* Host twins: interchangeable host vertices (same open or same closed
  neighbourhood) are tried lowest label first; a vertex is skipped while
  a lower twin is still unused.
* Pattern automorphisms: if pattern vertex w lies in the orbit of the
  i-th placed vertex under the stabiliser of the first i-1, its image must
  be larger than that of the i-th vertex.

Budgets count node expansions, so results are reproducible across
machines. Running out of budget is reported as its own status.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .canon import automorphism_orbits
from .graph import Graph, bits, disjoint_union, matching as matching_graph, star
from .matching import matching_number, max_matching

DEFAULT_BUDGET = int(os.environ.get("TREEBLOWUP_BUDGET", 10**8))


class Status(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    BUDGET_EXCEEDED = "budget-exceeded"


class Freeness(enum.Enum):
    FREE = "free"
    NOT_FREE = "not-free"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchResult:
    status: Status
    embedding: tuple[int, ...] | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


@dataclass(frozen=True)
class FreenessResult:
    status: Freeness
    pattern_index: int | None = None
    embedding: tuple[int, ...] | None = None
    nodes: int = 0


@dataclass(frozen=True)
class ForbiddenFamily:
    patterns: tuple[Graph, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if not self.patterns:
            raise ValueError("a forbidden family needs at least one pattern")
        for p in self.patterns:
            if p.num_edges == 0:
                raise ValueError("every forbidden pattern needs an edge")

    def __str__(self) -> str:
        return self.name or f"<{len(self.patterns)} patterns>"


def double_star(t: int) -> Graph:
    """2K_{1,t}: centres 0 and t+1."""
    s = star(t)
    return disjoint_union([s, s])


def aux_family(k: int) -> ForbiddenFamily:
    """{K_{1,k}, kK_2, 2K_{1,k-1}}."""
    if k < 2:
        raise ValueError("k >= 2 required")
    return ForbiddenFamily(
        (star(k), matching_graph(k), double_star(k - 1)),
        f"{{K_1,{k}, {k}K_2, 2K_1,{k - 1}}}",
    )


def ahs_family(k: int) -> ForbiddenFamily:
    """{K_{1,k}, kK_2}."""
    if k < 1:
        raise ValueError("k >= 1 required")
    return ForbiddenFamily((star(k), matching_graph(k)), f"{{K_1,{k}, {k}K_2}}")


def verify_embedding(host: Graph, pattern: Graph, mapping: Sequence[int]) -> bool:
    """Check that ``mapping`` is an injective edge-preserving map."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= v < host.n for v in mapping):
        return False
    return all(host.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges())


# -- pattern shape recognition ----------------------------------------------

def _star_size(g: Graph) -> int | None:
    """t if g is K_{1,t} (t >= 2), else None."""
    if g.n < 3 or g.num_edges != g.n - 1:
        return None
    degs = g.degrees()
    if sorted(degs) == [1] * (g.n - 1) + [g.n - 1]:
        return g.n - 1
    return None


def _matching_size(g: Graph) -> int | None:
    if g.n and all(d == 1 for d in g.degrees()):
        return g.n // 2
    return None


def _double_star_size(g: Graph) -> int | None:
    comps = g.components()
    if len(comps) != 2:
        return None
    sizes = {_star_size(g.induced_subgraph(c)) for c in comps}
    if len(sizes) == 1:
        (t,) = sizes
        return t
    return None


@dataclass
class _PatternPlan:
    order: list[int]
    degree: list[int]  # by position
    back: list[list[int]]  # earlier adjacent positions
    forward: list[list[int]]  # later adjacent positions
    greater: list[list[int]]  # earlier positions whose image must be smaller
    shape: tuple[str, int] | None = field(default=None)


def _order(pattern: Graph) -> list[int]:
    n = pattern.n
    deg = pattern.degrees()
    placed: list[int] = []
    placed_mask = 0
    left = set(range(n))
    while left:
        best = max(
            left,
            key=lambda v: ((pattern.rows[v] & placed_mask).bit_count(), deg[v], -v),
        )
        placed.append(best)
        placed_mask |= 1 << best
        left.remove(best)
    return placed


@lru_cache(maxsize=256)
def _plan(pattern: Graph, symmetry: bool) -> _PatternPlan:
    order = _order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[w] for w in bits(pattern.rows[v]) if pos[w] < i] for i, v in enumerate(order)]
    forward = [[pos[w] for w in bits(pattern.rows[v]) if pos[w] > i] for i, v in enumerate(order)]
    greater: list[list[int]] = [[] for _ in order]
    if symmetry:
        for i, v in enumerate(order):
            reps = automorphism_orbits(pattern, order[:i])
            if all(reps[x] == x for x in range(pattern.n)):
                break
            for w in range(pattern.n):
                if w != v and reps[w] == reps[v]:
                    greater[pos[w]].append(i)
    shape = None
    if (t := _matching_size(pattern)) is not None:
        shape = ("matching", t)
    elif (t := _star_size(pattern)) is not None:
        shape = ("star", t)
    elif (t := _double_star_size(pattern)) is not None:
        shape = ("double_star", t)
    return _PatternPlan(order, [pattern.degree(v) for v in order], back, forward, greater, shape)


def twin_lower_masks(host: Graph) -> list[int]:
    """For each vertex, the mask of lower-labelled twins."""
    out = [0] * host.n
    for closed in (False, True):
        groups: dict[int, int] = {}
        for v, r in enumerate(host.rows):
            key = r | (1 << v) if closed else r
            prev = groups.get(key, 0)
            out[v] |= prev
            groups[key] = prev | (1 << v)
    return out


# -- fast paths ----------------------------------------------------------------

def _star_embedding(host: Graph, pattern: Graph, t: int) -> tuple[int, ...] | None:
    center = next(v for v in range(pattern.n) if pattern.degree(v) == t)
    for h in range(host.n):
        if host.degree(h) >= t:
            leaves = list(bits(host.rows[h]))[:t]
            it = iter(leaves)
            return tuple(h if v == center else next(it) for v in range(pattern.n))
    return None


def _matching_embedding(host: Graph, pattern: Graph, t: int) -> tuple[int, ...] | None:
    m = max_matching(host)
    if m.size < t:
        return None
    mapping = [0] * pattern.n
    for (u, v), (x, y) in zip(pattern.edges(), m.edges):
        mapping[u], mapping[v] = x, y
    return tuple(mapping)


def _double_star_embedding(host: Graph, pattern: Graph, t: int) -> tuple[int, ...] | None:
    comps = pattern.components()
    centers = [next(v for v in c if pattern.degree(v) == t) for c in comps]
    big = [v for v in range(host.n) if host.degree(v) >= t]
    for i, x in enumerate(big):
        for y in big[i + 1:]:
            nx = host.rows[x] & ~(1 << y)
            ny = host.rows[y] & ~(1 << x)
            if nx.bit_count() < t or ny.bit_count() < t or (nx | ny).bit_count() < 2 * t:
                continue
            only_x = list(bits(nx & ~ny))
            only_y = list(bits(ny & ~nx))
            shared = list(bits(nx & ny))
            lx = only_x[:t]
            need = t - len(lx)
            lx += shared[:need]
            shared = shared[need:]
            ly = (only_y + shared)[:t]
            mapping = [0] * pattern.n
            for center, host_c, leaves in ((centers[0], x, lx), (centers[1], y, ly)):
                mapping[center] = host_c
                it = iter(leaves)
                for v in bits(pattern.rows[center]):
                    mapping[v] = next(it)
            return tuple(mapping)
    return None


# -- main search --------------------------------------------------------------

class _Budget(Exception):
    pass


def _prefilter(host: Graph, pattern: Graph) -> bool:
    """False when containment is impossible for counting reasons."""
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False
    pd = sorted(pattern.degrees(), reverse=True)
    hd = sorted(host.degrees(), reverse=True)
    if any(a > b for a, b in zip(pd, hd)):
        return False
    return matching_number(pattern) <= matching_number(host)


def find_subgraph(
    host: Graph,
    pattern: Graph,
    budget: int | None = None,
    fast_paths: bool = True,
    symmetry: bool = True,
    prefilter: bool = True,
) -> SearchResult:
    """Look for ``pattern`` as a (not necessarily induced) subgraph of ``host``."""
    budget = DEFAULT_BUDGET if budget is None else budget
    if budget <= 0:
        # a zero budget allows no work at all, not even the cheap filters
        return SearchResult(Status.BUDGET_EXCEEDED)
    if pattern.n == 0:
        return SearchResult(Status.FOUND, ())
    if prefilter and not _prefilter(host, pattern):
        return SearchResult(Status.NOT_FOUND)
    plan = _plan(pattern, symmetry)
    if fast_paths and plan.shape is not None:
        kind, t = plan.shape
        finder = {
            "matching": _matching_embedding,
            "star": _star_embedding,
            "double_star": _double_star_embedding,
        }[kind]
        emb = finder(host, pattern, t)
        if emb is None:
            return SearchResult(Status.NOT_FOUND, nodes=1)
        return SearchResult(Status.FOUND, emb, nodes=1)

    m = pattern.n
    rows = host.rows
    hdeg = host.degrees()
    lower = twin_lower_masks(host) if symmetry else [0] * host.n
    base = []
    for d in plan.degree:
        mask = 0
        for v in range(host.n):
            if hdeg[v] >= d:
                mask |= 1 << v
        base.append(mask)
    back, forward, greater = plan.back, plan.forward, plan.greater
    img = [-1] * m
    nodes = 0

    def candidates(i: int, used: int) -> int:
        mask = base[i] & ~used
        for j in back[i]:
            if img[j] >= 0:
                mask &= rows[img[j]]
        return mask

    def go(i: int, used: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        nodes += 1
        if nodes > budget:
            raise _Budget
        mask = candidates(i, used)
        for j in greater[i]:
            mask &= ~((2 << img[j]) - 1)
        while mask:
            low = mask & -mask
            mask ^= low
            y = low.bit_length() - 1
            if lower[y] & ~used:
                continue
            img[i] = y
            now = used | low
            if all(candidates(f, now) for f in forward[i]) and go(i + 1, now):
                return True
            img[i] = -1
        return False

    try:
        ok = go(0, 0)
    except _Budget:
        return SearchResult(Status.BUDGET_EXCEEDED, nodes=nodes)
    if not ok:
        return SearchResult(Status.NOT_FOUND, nodes=nodes)
    mapping = [0] * m
    for i, v in enumerate(plan.order):
        mapping[v] = img[i]
    return SearchResult(Status.FOUND, tuple(mapping), nodes)


def contains(host: Graph, pattern: Graph, budget: int | None = None) -> bool:
    """Convenience wrapper; raises if the budget runs out."""
    res = find_subgraph(host, pattern, budget)
    if res.status is Status.BUDGET_EXCEEDED:
        raise RuntimeError("containment search exceeded its budget")
    return res.found


def is_free(
    host: Graph,
    family: ForbiddenFamily | Iterable[Graph],
    budget: int | None = None,
    fast_paths: bool = True,
) -> FreenessResult:
    """FREE iff no pattern embeds; patterns are tried by ascending edge count."""
    patterns = family.patterns if isinstance(family, ForbiddenFamily) else tuple(family)
    order = sorted(range(len(patterns)), key=lambda i: (patterns[i].num_edges, i))
    unknown = False
    total = 0
    for i in order:
        res = find_subgraph(host, patterns[i], budget, fast_paths=fast_paths)
        total += res.nodes
        if res.status is Status.FOUND:
            return FreenessResult(Freeness.NOT_FREE, i, res.embedding, total)
        if res.status is Status.BUDGET_EXCEEDED:
            unknown = True
    return FreenessResult(Freeness.UNKNOWN if unknown else Freeness.FREE, nodes=total)


def is_splitfamily_free(
    host: Graph,
    tree: Graph,
    budget: int | None = None,
    cap: int | None = None,
) -> FreenessResult:
    """Freeness against every member of the tree's splitting family.

    Members whose matching number exceeds the host's are skipped without
    search: a subgraph never has a larger matching number.
    """
    from .trees import DEFAULT_FAMILY_CAP, splitting_family

    if budget is not None and budget <= 0:
        return FreenessResult(Freeness.UNKNOWN)
    members = splitting_family(tree, cap=cap or DEFAULT_FAMILY_CAP)
    host_nu = matching_number(host)
    unknown = False
    total = 0
    for i, member in enumerate(members):
        if matching_number(member) > host_nu:
            continue
        res = find_subgraph(host, member, budget)
        total += res.nodes
        if res.status is Status.FOUND:
            return FreenessResult(Freeness.NOT_FREE, i, res.embedding, total)
        if res.status is Status.BUDGET_EXCEEDED:
            unknown = True
    return FreenessResult(Freeness.UNKNOWN if unknown else Freeness.FREE, nodes=total)


def brute_force_contains(host: Graph, pattern: Graph) -> bool:
    """Try every injective map; exponential, for cross-checks only."""
    from itertools import permutations

    pe = pattern.edges()
    for perm in permutations(range(host.n), pattern.n):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pe):
            return True
    return False
