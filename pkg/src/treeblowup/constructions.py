"""Extremal constructions, the edge blow-up, and the universal-host witness."""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields, replace
from typing import Sequence

from .graph import (
    Graph,
    complete,
    complete_multipartite,
    disjoint_union,
    empty,
    join,
    matching,
    path,
)


class ConstructionError(ValueError):
    pass


def turan_parts(n: int, r: int) -> list[int]:
    """Part sizes of T_{n,r}, largest first."""
    if r < 1 or n < 0:
        raise ValueError("need n >= 0 and r >= 1")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(turan_parts(n, r))


def almost_regular(n: int, d: int) -> Graph:
    """Deterministic R(n, d): circulant plus a matching for odd d.

    Vertex i is joined to i +- 1..floor(d/2) (mod n). For odd d a matching
    at distance n//2 is added; when n*d is odd it misses vertex n-1, which
    is then the single vertex of degree d-1.
    """
    if not 0 <= d < n:
        raise ConstructionError(f"R({n},{d}) needs 0 <= d < n")
    edges = set()
    for i in range(n):
        for s in range(1, d // 2 + 1):
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    if d % 2:
        half = n // 2
        edges.update((i, i + half) for i in range(half))
    return Graph.from_edges(n, sorted(edges))


def embed_in_class(parts: Sequence[int], class_index: int, payload: Graph) -> Graph:
    """K(parts) with ``payload`` placed on the first vertices of one class.

    ``class_index`` is 0-based.
    """
    if not 0 <= class_index < len(parts):
        raise ConstructionError(f"no class {class_index} among {len(parts)}")
    if payload.n > parts[class_index]:
        raise ConstructionError(
            f"payload of order {payload.n} does not fit class of size {parts[class_index]}"
        )
    base = complete_multipartite(parts)
    start = sum(parts[:class_index])
    rows = list(base.rows)
    for u, v in payload.edges():
        rows[start + u] |= 1 << (start + v)
        rows[start + v] |= 1 << (start + u)
    return Graph._trusted(base.n, tuple(rows))


def payload_l1(k: int) -> Graph:
    return almost_regular(2 * k - 1, k - 1)


def payload_l2(k: int) -> Graph:
    if k % 2 == 0:
        return disjoint_union([almost_regular(k + 1, k - 1), complete(k - 1)])
    return disjoint_union([complete(k), complete(k)])


class Kind(enum.Enum):
    TURAN = "TURAN"
    ALMOST_REGULAR = "ALMOST_REGULAR"
    COMPLETE_MULTIPARTITE = "COMPLETE_MULTIPARTITE"
    L1 = "L1"
    L2 = "L2"
    H1 = "H1"
    H2 = "H2"
    H2_RD = "H2_RD"


_REQUIRED = {
    Kind.TURAN: ("n", "r"),
    Kind.ALMOST_REGULAR: ("n", "d"),
    Kind.COMPLETE_MULTIPARTITE: ("parts",),
    Kind.L1: ("n", "p", "k"),
    Kind.L2: ("n", "p", "k"),
    Kind.H1: ("n", "p", "a", "k"),
    Kind.H2: ("n", "p", "a", "k"),
    Kind.H2_RD: ("n", "p", "a", "d", "k"),
}


@dataclass(frozen=True)
class ConstructionSpec:
    """Symbolic recipe for a construction; ``str()`` gives the one-line form.

    For H2_RD, ``d`` is the degree of the almost-regular join factor
    R(a-1, d), i.e. b-1.
    """

    kind: Kind
    n: int | None = None
    p: int | None = None
    a: int | None = None
    k: int | None = None
    d: int | None = None
    r: int | None = None
    parts: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        for name in _REQUIRED[self.kind]:
            if getattr(self, name) is None:
                raise ConstructionError(f"{self.kind.value} needs {name}")

    def __str__(self) -> str:
        out = [self.kind.value]
        for name in _REQUIRED[self.kind]:
            val = getattr(self, name)
            if name == "parts":
                out.append("parts=" + ",".join(map(str, val)))
            else:
                out.append(f"{name}={val}")
        return " ".join(out)

    @classmethod
    def parse(cls, text: str) -> ConstructionSpec:
        tokens = text.split()
        if not tokens:
            raise ConstructionError("empty construction spec")
        try:
            kind = Kind(tokens[0].upper())
        except ValueError:
            raise ConstructionError(f"unknown construction kind {tokens[0]!r}") from None
        known = {f.name for f in fields(cls)} - {"kind"}
        values: dict[str, object] = {}
        for tok in tokens[1:]:
            key, sep, val = tok.partition("=")
            if not sep or key not in known:
                raise ConstructionError(f"bad field {tok!r}")
            if key == "parts":
                values[key] = tuple(int(x) for x in val.split(",") if x)
            else:
                values[key] = int(val)
        return cls(kind, **values)  # type: ignore[arg-type]

    def with_n(self, n: int) -> ConstructionSpec:
        return replace(self, n=n)

    def payload(self) -> Graph | None:
        if self.kind in (Kind.L1, Kind.H1):
            return payload_l1(self.k)  # type: ignore[arg-type]
        if self.kind in (Kind.L2, Kind.H2, Kind.H2_RD):
            return payload_l2(self.k)  # type: ignore[arg-type]
        return None

    def partition(self) -> list[int]:
        """Class sizes of the multipartite part, largest first."""
        if self.kind == Kind.COMPLETE_MULTIPARTITE:
            return list(self.parts)  # type: ignore[arg-type]
        if self.kind == Kind.TURAN:
            return turan_parts(self.n, self.r)  # type: ignore[arg-type]
        if self.kind in (Kind.L1, Kind.L2):
            return turan_parts(self.n, self.p)  # type: ignore[arg-type]
        if self.kind in (Kind.H1, Kind.H2, Kind.H2_RD):
            if self.n < self.a:  # type: ignore[operator]
                raise ConstructionError("n >= a required")
            return turan_parts(self.n - self.a + 1, self.p)  # type: ignore[operator,arg-type]
        raise ConstructionError(f"{self.kind.value} has no multipartite part")


def min_order(spec: ConstructionSpec) -> int:
    """Smallest n for which ``spec``'s payload fits its largest class."""
    payload = spec.payload()
    if payload is None:
        return 0
    offset = spec.a - 1 if spec.a is not None else 0
    # largest Turan class of m vertices in p parts is ceil(m/p)
    return offset + spec.p * (payload.n - 1) + 1  # type: ignore[operator]


def build(spec: ConstructionSpec, payload_class: int = 0) -> Graph:
    """Materialize a construction.

    Join factors (K_{a-1} or R(a-1,d)) come first, then the classes of the
    multipartite part in descending size. The payload goes into class
    ``payload_class`` (default: the first, largest class).
    """
    kind = spec.kind
    if kind == Kind.TURAN:
        return turan_graph(spec.n, spec.r)  # type: ignore[arg-type]
    if kind == Kind.ALMOST_REGULAR:
        return almost_regular(spec.n, spec.d)  # type: ignore[arg-type]
    if kind == Kind.COMPLETE_MULTIPARTITE:
        return complete_multipartite(spec.parts)  # type: ignore[arg-type]
    parts = spec.partition()
    payload = spec.payload()
    assert payload is not None
    body = embed_in_class(parts, payload_class, payload)
    if kind in (Kind.L1, Kind.L2):
        return body
    a = spec.a
    assert a is not None
    if kind == Kind.H2_RD:
        if a - 1 == 0:
            front = empty(0)
        else:
            front = almost_regular(a - 1, spec.d)  # type: ignore[arg-type]
    else:
        front = complete(a - 1)
    return join(front, body)


# -- edge blow-up -------------------------------------------------------------

def edge_blowup(f: Graph, q: int) -> Graph:
    """F^q: every edge becomes a K_q with q-2 private new vertices.

    Original vertices keep their labels; edge number i (in ``f.edges()``
    order) gets new vertices ``f.n + i*(q-2) ... f.n + (i+1)*(q-2) - 1``.
    """
    if q < 2:
        raise ValueError("clique size q >= 2 required")
    extra = q - 2
    edge_list = f.edges()
    n = f.n + extra * len(edge_list)
    out = []
    for i, (u, v) in enumerate(edge_list):
        clique = [u, v] + list(range(f.n + i * extra, f.n + (i + 1) * extra))
        for x in range(len(clique)):
            for y in range(x + 1, len(clique)):
                out.append((clique[x], clique[y]))
    return Graph.from_edges(n, out)


def blowup_cliques(f: Graph, q: int) -> list[list[int]]:
    extra = q - 2
    return [
        [u, v] + list(range(f.n + i * extra, f.n + (i + 1) * extra))
        for i, (u, v) in enumerate(f.edges())
    ]


# -- Lemma-style universal host ----------------------------------------------

@dataclass(frozen=True)
class BlowupWitness:
    host: Graph
    pattern: Graph
    mapping: tuple[int, ...]  # pattern vertex -> host vertex
    matching_edges: tuple[tuple[int, int], ...]  # one per tree edge


def universal_host(ell: int, p: int, variant: str = "matching") -> tuple[Graph, list[tuple[int, int]], list[list[int]]]:
    """Host graph, its matching M, and its p-1 classes.

    ``matching``: ell*P2 joined with K(2(p-1)ell; p-1).
    ``path``: P_ell joined with K((p-1)ell; p-1), M a maximum matching of P_ell.
    """
    if variant == "matching":
        front = matching(ell)
        size = 2 * ell
        m_edges = [(2 * i, 2 * i + 1) for i in range(ell)]
    elif variant == "path":
        front = path(ell)
        size = ell
        m_edges = [(2 * i, 2 * i + 1) for i in range(ell // 2)]
    else:
        raise ValueError(f"unknown host variant {variant!r}")
    host = join(front, complete_multipartite([size] * (p - 1)))
    classes = [list(range(front.n + j * size, front.n + (j + 1) * size)) for j in range(p - 1)]
    return host, m_edges, classes


def lemma21_witness(tree: Graph, p: int, variant: str = "matching") -> BlowupWitness:
    """Embed T^{p+1} into the universal host following the constructive proof.

    T goes into the first two classes along its bipartition. Edge i of T is
    blown up with vertex i of classes 3..p-1 and the i-th matching edge.
    """
    if p < 3:
        raise ValueError("p >= 3 required")
    pattern = edge_blowup(tree, p + 1)
    ell = pattern.n
    host, m_edges, classes = universal_host(ell, p, variant)
    tree_edges = tree.edges()
    if len(m_edges) < len(tree_edges):
        raise ConstructionError("matching too small for the tree's edges")
    parts = tree.bipartition()
    if parts is None:
        raise ValueError("input must be bipartite")
    side_x, _ = parts
    mapping = [-1] * pattern.n
    nx = ny = 0
    for v in range(tree.n):
        if (side_x >> v) & 1:
            mapping[v] = classes[0][nx]
            nx += 1
        else:
            mapping[v] = classes[1][ny]
            ny += 1
    extra = p - 1
    used_m = []
    for i in range(len(tree_edges)):
        new = [tree.n + i * extra + j for j in range(extra)]
        for j in range(p - 3):
            mapping[new[j]] = classes[2 + j][i]
        x, y = m_edges[i]
        mapping[new[p - 3]] = x
        mapping[new[p - 2]] = y
        used_m.append((x, y))
    return BlowupWitness(host, pattern, tuple(mapping), tuple(used_m))
