"""Immutable simple graphs with bitset adjacency rows.

Vertices are ``0..n-1``. Row ``i`` is a Python int whose bit ``j`` is set
iff ``i`` and ``j`` are adjacent. Graph values never change after
construction, so they can be shared freely between workers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

# Representation limit; raise it here if hosts ever need more vertices.
MAX_VERTICES = 512


class CapacityError(ValueError):
    """Raised when a graph would exceed MAX_VERTICES."""


def _check_capacity(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, rows: Sequence[int] | None = None) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        _check_capacity(n)
        if rows is None:
            rows = (0,) * n
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full or (r >> i) & 1:
                raise ValueError(f"row {i} has out-of-range bits or a loop")
            for j in bits(r):
                if not (rows[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        self.n = n
        self.rows = rows
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee a symmetric loop-free row tuple.
        _check_capacity(n)
        g = cls.__new__(cls)
        g.n = n
        g.rows = rows
        g._m = sum(r.bit_count() for r in rows) // 2
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    # -- basic queries -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, r in enumerate(self.rows):
            for v in bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs ------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("loops are not allowed")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> Graph:
        """Return a copy with one new vertex ``n`` joined to ``neighbors``."""
        nb = mask_of(neighbors)
        rows = list(self.rows)
        new = self.n
        for v in bits(nb):
            rows[v] |= 1 << new
        rows.append(nb)
        return Graph._trusted(self.n + 1, tuple(rows))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is old vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for u in bits(self.rows[v]):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        keep = mask_of(vs)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for u in bits(self.rows[v] & keep):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(len(vs), tuple(rows))

    def remove_vertex(self, v: int) -> Graph:
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def complement(self) -> Graph:
        full = self.vertex_mask()
        return Graph._trusted(
            self.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows))
        )

    # -- connectivity --------------------------------------------------

    def component_mask(self, v: int, within: int | None = None) -> int:
        allowed = self.vertex_mask() if within is None else within
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.rows[u]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def components(self, within: int | None = None) -> list[list[int]]:
        """Connected components (of the induced subgraph on ``within``)."""
        left = self.vertex_mask() if within is None else within
        out = []
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_mask(v, left)
            out.append(list(bits(comp)))
            left &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.n == 0 or self.component_mask(0) == self.vertex_mask()

    def isolated_vertices(self) -> list[int]:
        return [v for v, r in enumerate(self.rows) if r == 0]

    def without_isolated(self) -> Graph:
        return self.induced_subgraph(v for v, r in enumerate(self.rows) if r)

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> tuple[int, int] | None:
        """Masks ``(X, Y)`` of a proper 2-colouring, or None.

        Each component is coloured so that its lowest vertex lands in X.
        """
        color: dict[int, int] = {}
        for start in range(self.n):
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in bits(self.rows[u]):
                    if w not in color:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return None
        x = mask_of(v for v, c in color.items() if c == 0)
        return x, self.vertex_mask() & ~x


# -- named graphs --------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << i) for i in range(n)))


def path(n: int) -> Graph:
    """Path on ``n`` vertices, labelled in order along the path."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def matching(k: int) -> Graph:
    """kK_2: edges (0,1), (2,3), ..."""
    return Graph.from_edges(2 * k, ((2 * i, 2 * i + 1) for i in range(k)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    n = sum(parts)
    _check_capacity(n)
    rows = []
    start = 0
    full = (1 << n) - 1
    for size in parts:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph._trusted(n, tuple(rows))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- composition ---------------------------------------------------------

def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        _check_capacity(offset + g.n)
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph._trusted(offset, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 on vertices 0..n1-1, g2 after it, every cross pair adjacent."""
    n1, n2 = g1.n, g2.n
    _check_capacity(n1 + n2)
    high = ((1 << n2) - 1) << n1
    low = (1 << n1) - 1
    rows = [r | high for r in g1.rows] + [(r << n1) | low for r in g2.rows]
    return Graph._trusted(n1 + n2, tuple(rows))


def join_all(graphs: Sequence[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = join(out, g)
    return out


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in bits(code)))
