"""Tree bipartitions, main-theorem parameters, and vertex splitting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .canon import canonical_form
from .graph import Graph, bits, mask_of

DEFAULT_FAMILY_CAP = 100_000


class NotATreeError(ValueError):
    pass


class FamilyCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class Tree:
    graph: Graph
    class_a: frozenset[int]
    class_b: frozenset[int]

    @property
    def a(self) -> int:
        return len(self.class_a)


@dataclass(frozen=True)
class TreeParams:
    a: int
    k: int
    A0: frozenset[int]
    B0: frozenset[int]
    b: int | None  # None when B0 is empty

    def record(self) -> str:
        b = "none" if self.b is None else str(self.b)
        return f"a={self.a} k={self.k} A0={len(self.A0)} B0={len(self.B0)} b={b}"


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and g.is_connected()


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(g.components())


def analyze_tree(g: Graph, swap: bool = False) -> Tree:
    """Bipartition a tree with the smaller colour class as A.

    On a tie, A is the class holding vertex 0; ``swap=True`` picks the
    other class instead (only allowed on a tie).
    """
    if g.n < 2:
        raise NotATreeError("need a tree with at least one edge")
    if not g.is_connected():
        raise NotATreeError("graph is disconnected")
    if g.num_edges != g.n - 1:
        raise NotATreeError("graph has a cycle")
    x, y = g.bipartition()  # type: ignore[misc]
    cx, cy = x.bit_count(), y.bit_count()
    if cx == cy:
        a, b = (y, x) if swap else (x, y)
    else:
        if swap:
            raise ValueError("swap is only meaningful when both classes have equal size")
        a, b = (x, y) if cx < cy else (y, x)
    return Tree(g, frozenset(bits(a)), frozenset(bits(b)))


def extract_params(t: Tree) -> TreeParams:
    g = t.graph
    k = min(g.degree(v) for v in t.class_a)
    a0 = frozenset(v for v in t.class_a if g.degree(v) == k)
    a0_mask = mask_of(a0)
    b0 = frozenset(y for y in t.class_b if (g.rows[y] & a0_mask).bit_count() >= 2)
    b = min(g.degree(y) for y in b0) - 2 if b0 else None
    return TreeParams(a=t.a, k=k, A0=a0, B0=b0, b=b)


def tree_params(g: Graph) -> TreeParams:
    return extract_params(analyze_tree(g))


def split_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Split every vertex of ``vertices`` at once.

    Unsplit vertices keep their labels; each split vertex is dropped and
    every edge at it gets a fresh private endpoint appended at the end.
    Equivalent to splitting them one by one in any order.
    """
    u_mask = mask_of(vertices)
    for v in bits(u_mask):
        if g.rows[v] == 0:
            raise ValueError(f"cannot split isolated vertex {v}")
    keep = [v for v in range(g.n) if not (u_mask >> v) & 1]
    pos = {v: i for i, v in enumerate(keep)}
    n = len(keep)
    edges = []
    for u, v in g.edges():
        if u in pos:
            a = pos[u]
        else:
            a = n
            n += 1
        if v in pos:
            b = pos[v]
        else:
            b = n
            n += 1
        edges.append((a, b))
    return Graph.from_edges(n, edges)


def split_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"no vertex {v}")
    return split_vertices(g, [v])


def splitting_family(
    g: Graph,
    restrict: Iterable[int] | None = None,
    cap: int = DEFAULT_FAMILY_CAP,
) -> list[Graph]:
    """All graphs from splitting a subset of ``restrict``, up to isomorphism.

    Splitting a degree-1 vertex only relabels, so only vertices of degree
    at least 2 are enumerated. Members come back sorted by canonical form.
    Isolated vertices in ``restrict`` are ignored.
    """
    pool = range(g.n) if restrict is None else sorted(set(restrict))
    active = [v for v in pool if g.degree(v) >= 2]
    found: dict[str, Graph] = {}
    for code in range(1 << len(active)):
        member = split_vertices(g, (active[i] for i in bits(code)))
        key = canonical_form(member)
        if key not in found:
            if len(found) >= cap:
                raise FamilyCapError(f"splitting family exceeds cap {cap}")
            found[key] = member
    return [found[key] for key in sorted(found)]


def splits_some_of(t: Tree) -> list[Graph]:
    """Members of the splitting family that split at least one A-vertex."""
    active_a = [v for v in sorted(t.class_a) if t.graph.degree(v) >= 2]
    others = [v for v in range(t.graph.n) if v not in t.class_a and t.graph.degree(v) >= 2]
    found: dict[str, Graph] = {}
    for code_a in range(1, 1 << len(active_a)):
        chosen_a = [active_a[i] for i in bits(code_a)]
        for code_b in range(1 << len(others)):
            member = split_vertices(t.graph, chosen_a + [others[i] for i in bits(code_b)])
            found.setdefault(canonical_form(member), member)
    return [found[key] for key in sorted(found)]


def all_trees(n: int) -> list[Graph]:
    """Non-isomorphic trees on ``n`` vertices via leaf addition."""
    if n < 1:
        return []
    level = {canonical_form(Graph(1)): Graph(1)}
    for _ in range(n - 1):
        nxt: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                child = t.add_vertex([v])
                nxt.setdefault(canonical_form(child), child)
        level = nxt
    return [level[key] for key in sorted(level)]


def read_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (blank lines and ``#`` comments skipped)."""
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)
