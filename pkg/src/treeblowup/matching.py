"""Maximum matching, bipartite covers, independence number, Gallai-Edmonds.

``max_matching`` is Edmonds' blossom algorithm in its compact
BFS-with-contraction form (O(n^3)). Everything here works on the bitset
rows of :class:`~treeblowup.graph.Graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, bits, mask_of

DEFAULT_EXACT_BOUND = 40


class NotBipartiteError(ValueError):
    pass


class SizeBoundError(ValueError):
    pass


@dataclass(frozen=True)
class MatchingWitness:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def mate(self, n: int) -> list[int]:
        m = [-1] * n
        for u, v in self.edges:
            m[u], m[v] = v, u
        return m

    def covered(self) -> set[int]:
        return {x for e in self.edges for x in e}


def is_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen or u == v:
            return False
        seen.update((u, v))
    return True


def _greedy(g: Graph, mate: list[int]) -> None:
    for u in range(g.n):
        if mate[u] < 0:
            for v in bits(g.rows[u]):
                if mate[v] < 0:
                    mate[u], mate[v] = v, u
                    break


def _augment_from(g: Graph, root: int, mate: list[int]) -> bool:
    n = g.n
    rows = g.rows
    base = list(range(n))
    parent = [-1] * n
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in bits(rows[v]):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if mate[to] < 0:
                    while to >= 0:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def max_matching(g: Graph) -> MatchingWitness:
    mate = [-1] * g.n
    _greedy(g, mate)
    for v in range(g.n):
        if mate[v] < 0 and g.rows[v]:
            _augment_from(g, v, mate)
    return MatchingWitness(tuple((u, mate[u]) for u in range(g.n) if u < mate[u]))


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def brute_force_matching_number(g: Graph) -> int:
    """Exhaustive maximum matching; exponential, for cross-checks only."""
    best = 0

    def go(free: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        # every remaining edge must touch the lowest free vertex or skip it
        while free:
            v = (free & -free).bit_length() - 1
            if size + (free.bit_count()) // 2 <= best:
                return
            for u in bits(g.rows[v] & free):
                go(free & ~(1 << v) & ~(1 << u), size + 1)
            free &= ~(1 << v)

    go(g.vertex_mask(), 0)
    return best


def all_maximum_matchings(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Every maximum matching, by exhaustive enumeration (small graphs)."""
    target = brute_force_matching_number(g)
    out: list[frozenset[tuple[int, int]]] = []

    def go(free: int, chosen: list[tuple[int, int]]) -> None:
        if len(chosen) + free.bit_count() // 2 < target:
            return
        if len(chosen) == target:
            out.append(frozenset(chosen))
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for u in bits(g.rows[v] & rest):
            chosen.append((min(u, v), max(u, v)))
            go(rest & ~(1 << u), chosen)
            chosen.pop()
        go(rest, chosen)

    go(g.vertex_mask(), [])
    return out


# -- bipartite graphs --------------------------------------------------------

@dataclass(frozen=True)
class BipartiteCover:
    matching: MatchingWitness
    cover: frozenset[int]
    hall_violator: frozenset[int] | None = field(default=None)

    @property
    def saturates_side(self) -> bool:
        return self.hall_violator is None


def bipartite_cover(g: Graph, side_x: Iterable[int]) -> BipartiteCover:
    """Maximum matching, minimum vertex cover and a Hall witness.

    ``side_x`` is one colour class. The cover comes from alternating
    reachability (Konig): with Z the vertices reachable from unmatched
    X-vertices by alternating paths, the cover is (X - Z) + (Y & Z). If X
    cannot be saturated, ``hall_violator`` is X & Z, whose neighbourhood
    Y & Z is strictly smaller.
    """
    xs = mask_of(side_x)
    ys = g.vertex_mask() & ~xs
    for v in bits(xs):
        if g.rows[v] & xs:
            raise NotBipartiteError(f"vertex {v} has a neighbour on its own side")
    for v in bits(ys):
        if g.rows[v] & ys:
            raise NotBipartiteError(f"vertex {v} has a neighbour on its own side")

    mate = [-1] * g.n

    def try_kuhn(u: int, seen: list[bool]) -> bool:
        for w in bits(g.rows[u]):
            if not seen[w]:
                seen[w] = True
                if mate[w] < 0 or try_kuhn(mate[w], seen):
                    mate[w], mate[u] = u, w
                    return True
        return False

    for u in bits(xs):
        try_kuhn(u, [False] * g.n)

    frontier = mask_of(u for u in bits(xs) if mate[u] < 0)
    reach = frontier
    while frontier:
        ynext = 0
        for u in bits(frontier):
            ynext |= g.rows[u]
        ynext &= ~reach
        reach |= ynext
        xnext = mask_of(mate[w] for w in bits(ynext) if mate[w] >= 0) & ~reach
        reach |= xnext
        frontier = xnext
    cover = (xs & ~reach) | (ys & reach)
    unmatched_x = any(mate[u] < 0 for u in bits(xs))
    edges = tuple((u, mate[u]) for u in range(g.n) if mate[u] > u)
    return BipartiteCover(
        MatchingWitness(edges),
        frozenset(bits(cover)),
        frozenset(bits(xs & reach)) if unmatched_x else None,
    )


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    c = mask_of(cover)
    return all((c >> u) & 1 or (c >> v) & 1 for u, v in g.edges())


# -- independence number -----------------------------------------------------

def _max_clique(rows: list[int], cand: int, size: int, best: list[int]) -> None:
    # Tomita-style greedy colouring bound over the candidate set.
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    for i in range(len(order) - 1, -1, -1):
        if size + colors[i] <= best[0]:
            return
        v = order[i]
        new = cand & rows[v]
        if new:
            _max_clique(rows, new, size + 1, best)
        elif size + 1 > best[0]:
            best[0] = size + 1
        cand &= ~(1 << v)


def independence_number(g: Graph, bound: int = DEFAULT_EXACT_BOUND) -> int:
    """Exact alpha(G) by branch and bound on the complement's cliques."""
    if g.n > bound:
        raise SizeBoundError(f"n={g.n} exceeds exact-search bound {bound}")
    if g.n == 0:
        return 0
    comp = g.complement()
    best = [0]
    _max_clique(list(comp.rows), comp.vertex_mask(), 0, best)
    return best[0]


def vertex_cover_number(g: Graph, bound: int = DEFAULT_EXACT_BOUND) -> int:
    """beta(G) via Gallai's identity alpha + beta = n."""
    return g.n - independence_number(g, bound)


# -- Gallai-Edmonds ----------------------------------------------------------

@dataclass(frozen=True)
class GallaiEdmondsRecord:
    S: frozenset[int]
    D: frozenset[int]
    C: frozenset[int]
    odd_components: tuple[tuple[int, ...], ...]
    even_components: tuple[tuple[int, ...], ...]
    nu: int
    matching: MatchingWitness


def gallai_edmonds(g: Graph) -> GallaiEdmondsRecord:
    """Canonical decomposition D / S=N(D)-D / C.

    D is the set of vertices missed by some maximum matching, i.e. those
    with nu(G - v) = nu(G).
    """
    m = max_matching(g)
    nu = m.size
    d = 0
    covered = m.covered()
    for v in range(g.n):
        if v not in covered or matching_number(g.remove_vertex(v)) == nu:
            d |= 1 << v
    s = 0
    for v in bits(d):
        s |= g.rows[v]
    s &= ~d
    c = g.vertex_mask() & ~d & ~s
    odd = tuple(tuple(comp) for comp in g.components(d))
    even = tuple(tuple(comp) for comp in g.components(c))
    return GallaiEdmondsRecord(
        S=frozenset(bits(s)),
        D=frozenset(bits(d)),
        C=frozenset(bits(c)),
        odd_components=odd,
        even_components=even,
        nu=nu,
        matching=m,
    )


def is_factor_critical(g: Graph) -> bool:
    return g.n % 2 == 1 and all(
        has_perfect_matching(g.remove_vertex(v)) for v in range(g.n)
    )
