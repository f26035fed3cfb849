"""Per-n verification of the main theorem's constructions for one tree.

Each check becomes one line ``STATUS key=value ...``. STATUS is PASS,
FAIL, UNKNOWN (budget ran out) or INFO (reported, never failing).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .constructions import ConstructionSpec, Kind, almost_regular, build, edge_blowup
from .containment import (
    ForbiddenFamily,
    Freeness,
    Status,
    find_subgraph,
    is_splitfamily_free,
    twin_lower_masks,
)
from .formulas import dispatch, ex_path
from .graph import Graph, bits, complete, disjoint_union, empty, join
from .search import CensusQuery, max_edges_free
from .trees import tree_params


class VerifyMode(enum.Enum):
    FREE = "free"
    PERTURB = "perturb"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class Check:
    status: str
    fields: tuple[tuple[str, object], ...]

    def line(self) -> str:
        parts = [self.status]
        for key, val in self.fields:
            text = str(val)
            parts.append(f'{key}="{text}"' if " " in text else f"{key}={text}")
        return " ".join(parts)


@dataclass(frozen=True)
class Report:
    checks: tuple[Check, ...]

    @property
    def outcome(self) -> str:
        states = {c.status for c in self.checks}
        if "FAIL" in states:
            return "FAIL"
        if "UNKNOWN" in states:
            return "UNKNOWN"
        return "PASS"

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _status(res_status: Status) -> str:
    return {Status.NOT_FOUND: "PASS", Status.FOUND: "FAIL"}.get(res_status, "UNKNOWN")


def reduced_host(spec: ConstructionSpec) -> Graph:
    """The join factor joined with the payload class C1 of ``spec``.

    For p >= 3 the whole construction is T^{p+1}-free exactly when this
    graph avoids every member of the tree's splitting family.
    """
    size = spec.partition()[0]
    payload = spec.payload()
    assert payload is not None and spec.a is not None
    c1 = disjoint_union([payload, empty(size - payload.n)])
    if spec.kind == Kind.H2_RD:
        front = almost_regular(spec.a - 1, spec.d) if spec.a > 1 else empty(0)  # type: ignore[arg-type]
    else:
        front = complete(spec.a - 1)
    return join(front, c1)


def check_construction(
    tree: Graph, spec: ConstructionSpec, value: int, pattern: Graph, budget: int | None
) -> list[Check]:
    host = build(spec)
    n = spec.n
    out = [
        Check(
            "PASS" if host.num_edges == value else "FAIL",
            (("n", n), ("check", "edges"), ("spec", spec), ("edges", host.num_edges), ("value", value)),
        )
    ]
    res = find_subgraph(host, pattern, budget)
    out.append(
        Check(
            _status(res.status),
            (("n", n), ("check", "free"), ("spec", spec), ("result", res.status.value), ("nodes", res.nodes)),
        )
    )
    red = is_splitfamily_free(reduced_host(spec), tree, budget)
    red_status = {Freeness.FREE: "PASS", Freeness.NOT_FREE: "FAIL"}.get(red.status, "UNKNOWN")
    out.append(
        Check(
            red_status,
            (("n", n), ("check", "reduced"), ("spec", spec), ("result", red.status.value), ("nodes", red.nodes)),
        )
    )
    return out


def perturbations(host: Graph) -> list[tuple[int, int]]:
    """One representative non-edge per pair of host twin classes."""
    lower = twin_lower_masks(host)
    rep = [min(bits(lower[v] | (1 << v))) for v in range(host.n)]
    seen = set()
    out = []
    for u in range(host.n):
        for v in range(u + 1, host.n):
            if host.has_edge(u, v):
                continue
            key = (rep[u], rep[v], rep[u] == rep[v])
            if key in seen:
                continue
            seen.add(key)
            out.append((u, v))
    return out


def _perturb(spec: ConstructionSpec, pattern: Graph, budget: int | None) -> list[Check]:
    host = build(spec)
    out = []
    for u, v in perturbations(host):
        res = find_subgraph(host.add_edge(u, v), pattern, budget)
        out.append(
            Check(
                "INFO",
                (("n", spec.n), ("check", "perturb"), ("spec", spec), ("edge", f"{u}-{v}"),
                 ("result", res.status.value)),
            )
        )
    return out


def exhaustive_ex(pattern: Graph, n: int, budget: int | None = None) -> tuple[int, bool]:
    """ex(n, pattern) by census over graphs with at most n non-isolated vertices."""
    core = pattern.without_isolated()
    fam = ForbiddenFamily((core,), "blow-up")
    res = max_edges_free(CensusQuery(fam, max_vertices=n, budget=budget))
    return res.best_edges, res.complete


def verify_theorem(
    tree: Graph,
    p: int,
    n_range: Iterable[int],
    mode: VerifyMode = VerifyMode.FREE,
    budget: int | None = None,
) -> Report:
    """Check every construction named by the dispatch, for each n.

    In EXHAUSTIVE mode ``p`` may be 1 (q = 2, the tree itself); the census
    value is then compared with an oracle: the path formula when the
    pattern is a path, otherwise the dispatch value as information only.
    """
    if p < 1 or (p < 3 and mode is not VerifyMode.EXHAUSTIVE):
        raise ValueError("p >= 3 required (p >= 1 in exhaustive mode)")
    params = tree_params(tree)
    pattern = edge_blowup(tree, p + 1)
    checks: list[Check] = []
    for n in n_range:
        if mode is VerifyMode.EXHAUSTIVE:
            best, complete = exhaustive_ex(pattern, n, budget)
            status = "UNKNOWN" if not complete else "INFO"
            ref: object = "none"
            if _is_path(pattern):
                ref = ex_path(n, pattern.n)
                if complete:
                    status = "PASS" if best == ref else "FAIL"
            elif p >= 3 and params.k >= 2 and n >= params.a:
                ref = dispatch(params, n, p).value
            checks.append(
                Check(status, (("n", n), ("check", "exhaustive"), ("census", best), ("oracle", ref)))
            )
            continue
        case = dispatch(params, n, p)
        checks.append(Check("INFO", (("n", n), ("check", "dispatch"), ("case", case.tag.value), ("value", case.value))))
        for spec in case.extremal:
            checks.extend(check_construction(tree, spec, case.value, pattern, budget))
            if mode is VerifyMode.PERTURB:
                checks.extend(_perturb(spec, pattern, budget))
    return Report(tuple(checks))


def _is_path(g: Graph) -> bool:
    core = g.without_isolated()
    degs = sorted(core.degrees())
    return core.is_connected() and core.num_edges == core.n - 1 and (core.n < 3 or degs[-1] <= 2)


def min_feasible_n(tree: Graph, p: int) -> int:
    """Smallest n at which every construction named by the dispatch fits."""
    from .constructions import min_order

    params = tree_params(tree)
    probe = max(params.a, 1) + p * 4 * tree.n
    return max(max(min_order(s) for s in dispatch(params, probe, p).extremal), params.a)
