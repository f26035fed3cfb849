"""Command-line entry point.

Exit codes: 0 success or PASS, 1 verified negative (NotFree, FAIL,
not found), 2 unknown or budget exceeded, 64 usage error.

Graph arguments accept a file (graph6, or ``u v`` edge lines), ``-`` for
stdin, ``g6:STRING`` or ``edges:0-1,1-2``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import graph6
from .constructions import ConstructionError, ConstructionSpec, build, edge_blowup
from .containment import ForbiddenFamily, Status, aux_family, ahs_family, find_subgraph
from .formulas import dispatch, evaluate
from .graph import Graph
from .matching import gallai_edmonds, max_matching
from .search import CapabilityError, CensusQuery, Mode, max_edges_free
from .trees import FamilyCapError, NotATreeError, analyze_tree, extract_params, read_edge_list, splitting_family
from .verify import VerifyMode, verify_theorem

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def parse_graph_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("no graph found")
    first = lines[0]
    if " " in first or "\t" in first:
        return read_edge_list(text)
    return graph6.decode(first)


def load_graph(source: str) -> Graph:
    if source.startswith("g6:"):
        return graph6.decode(source[3:])
    if source.startswith("edges:"):
        body = source[6:]
        edges = []
        for item in filter(None, body.split(",")):
            u, _, v = item.partition("-")
            edges.append((int(u), int(v)))
        n = 1 + max((max(e) for e in edges), default=-1)
        return Graph.from_edges(n, edges)
    if source == "-":
        return parse_graph_text(sys.stdin.read())
    path = Path(source)
    if not path.is_file():
        raise ValueError(f"no such file {source!r}")
    return parse_graph_text(path.read_text())


def _graph_arg(source: str) -> Graph:
    try:
        return load_graph(source)
    except (ValueError, OSError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {val}")
    return val


def parse_family(text: str) -> ForbiddenFamily:
    """``aux:k=K``, ``ahs:k=K`` or a comma-separated graph6 list."""
    head, _, rest = text.partition(":")
    if head in ("aux", "ahs"):
        key, _, val = rest.partition("=")
        if key != "k" or not val.isdigit():
            raise ValueError(f"family {head} needs k=INT, got {rest!r}")
        return aux_family(int(val)) if head == "aux" else ahs_family(int(val))
    codes = [c for c in text.split(",") if c]
    if not codes:
        raise ValueError("empty family")
    return ForbiddenFamily(tuple(graph6.decode(c) for c in codes), text)


def _family_arg(text: str) -> ForbiddenFamily:
    try:
        return parse_family(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _spec_arg(text: str) -> ConstructionSpec:
    try:
        return ConstructionSpec.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tree_arg(text: str) -> Graph:
    g = _graph_arg(text)
    try:
        analyze_tree(g)
    except NotATreeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return g


def _fmt_set(vs: object) -> str:
    return ",".join(map(str, sorted(vs))) or "-"  # type: ignore[call-overload]


# -- subcommands ------------------------------------------------------------

def cmd_construct(a: argparse.Namespace) -> int:
    g = build(a.spec, a.payload_class)
    if a.edges:
        print(g.num_edges)
    else:
        print(graph6.encode(g))
    return EXIT_OK


def cmd_edges(a: argparse.Namespace) -> int:
    text = sys.stdin.read() if a.input == "-" else Path(a.input).read_text()
    for line in text.splitlines():
        line = line.strip()
        if line:
            print(graph6.decode(line).num_edges)
    return EXIT_OK


def cmd_blowup(a: argparse.Namespace) -> int:
    print(graph6.encode(edge_blowup(a.input, a.q)))
    return EXIT_OK


def cmd_formula(a: argparse.Namespace) -> int:
    print(evaluate(a.name, a.args))
    return EXIT_OK


def cmd_dispatch(a: argparse.Namespace) -> int:
    params = extract_params(analyze_tree(a.tree, a.swap))
    print(params.record())
    for line in dispatch(params, a.n, a.p).lines():
        print(line)
    return EXIT_OK


def cmd_matching(a: argparse.Namespace) -> int:
    m = max_matching(a.input)
    print(f"nu={m.size}")
    print("edges=" + (" ".join(f"{u}-{v}" for u, v in m.edges) or "-"))
    return EXIT_OK


def cmd_gallai_edmonds(a: argparse.Namespace) -> int:
    rec = gallai_edmonds(a.input)
    print(f"nu={rec.nu}")
    print(f"S={_fmt_set(rec.S)}")
    print(f"D={_fmt_set(rec.D)}")
    print(f"C={_fmt_set(rec.C)}")
    for comp in rec.odd_components:
        print(f"odd={_fmt_set(comp)}")
    for comp in rec.even_components:
        print(f"even={_fmt_set(comp)}")
    return EXIT_OK


def cmd_contains(a: argparse.Namespace) -> int:
    res = find_subgraph(a.host, a.pattern, a.budget)
    print(f"result={res.status.value} nodes={res.nodes}")
    if res.status is Status.FOUND:
        assert res.embedding is not None
        print("map=" + " ".join(f"{u}->{v}" for u, v in enumerate(res.embedding)))
        return EXIT_OK
    return EXIT_NEGATIVE if res.status is Status.NOT_FOUND else EXIT_UNKNOWN


def cmd_census(a: argparse.Namespace) -> int:
    q = CensusQuery(
        a.family,
        a.max_n,
        delta_cap=a.delta_cap,
        nu_cap=a.nu_cap,
        mode=Mode.ALL_EXTREMAL if a.mode == "exhaustive" else Mode.MAX_EDGES,
        budget=a.node_budget,
        containment_budget=a.budget,
        workers=a.workers,
    )
    res = max_edges_free(q)
    for line in res.lines():
        print(line)
    return EXIT_OK if res.complete else EXIT_UNKNOWN


def cmd_verify(a: argparse.Namespace) -> int:
    if a.n_to < a.n_from:
        raise UsageError("--n-to must be >= --n-from")
    report = verify_theorem(a.tree, a.p, range(a.n_from, a.n_to + 1), VerifyMode(a.mode), a.budget)
    for line in report.lines():
        print(line)
    return {"PASS": EXIT_OK, "FAIL": EXIT_NEGATIVE}.get(report.outcome, EXIT_UNKNOWN)


def cmd_split_family(a: argparse.Namespace) -> int:
    members = splitting_family(a.tree, a.restrict, cap=a.cap)
    print(f"count={len(members)}")
    for m in members:
        print(graph6.encode(m))
    return EXIT_OK


def cmd_analyze_tree(a: argparse.Namespace) -> int:
    tr = analyze_tree(a.tree, a.swap)
    params = extract_params(tr)
    print(f"A={_fmt_set(tr.class_a)}")
    print(f"B={_fmt_set(tr.class_b)}")
    print(f"A0={_fmt_set(params.A0)}")
    print(f"B0={_fmt_set(params.B0)}")
    print(params.record())
    return EXIT_OK


def cmd_campaign(a: argparse.Namespace) -> int:
    from .campaign import CampaignError, load_config, run_campaign

    try:
        cfg = load_config(a.config, out_dir=a.out, workers=a.workers)
    except CampaignError as exc:
        raise UsageError(f"campaign: {exc}") from None
    report = run_campaign(cfg)
    print(f"report={report.path}")
    for line in report.summary_lines():
        print(line)
    return {"PASS": EXIT_OK, "FAIL": EXIT_NEGATIVE}.get(report.outcome, EXIT_UNKNOWN)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treeblowup", description="Edge blow-ups of trees: constructions, formulas and checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    budget_help = "containment node budget (default: $TREEBLOWUP_BUDGET or 10^8)"

    p = sub.add_parser("construct", help="build a named construction, print graph6")
    p.add_argument("spec", type=_spec_arg, help='e.g. "H1 n=20 p=3 a=2 k=2"')
    p.add_argument("--payload-class", type=_nonneg, default=0)
    p.add_argument("--edges", action="store_true", help="print the edge count instead")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("edges", help="edge count of each graph6 line")
    p.add_argument("--in", dest="input", default="-")
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("blowup", help="edge blow-up F^q")
    p.add_argument("--in", dest="input", type=_graph_arg, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("formula", help="evaluate an edge-count formula")
    fsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = fsub.add_parser("eval")
    e.add_argument("name")
    e.add_argument("args", type=int, nargs="*")
    e.set_defaults(func=cmd_formula)

    p = sub.add_parser("dispatch", help="theorem case, value and extremal constructions")
    p.add_argument("--tree", type=_tree_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--swap", action="store_true")
    p.set_defaults(func=cmd_dispatch)

    for name, func in (("matching", cmd_matching), ("gallai-edmonds", cmd_gallai_edmonds)):
        p = sub.add_parser(name)
        p.add_argument("--in", dest="input", type=_graph_arg, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("contains", help="subgraph containment; exit 0/1/2")
    p.add_argument("--host", type=_graph_arg, required=True)
    p.add_argument("--pattern", type=_graph_arg, required=True)
    p.add_argument("--budget", type=_nonneg, default=None, help=budget_help)
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("census", help="maximum edges of family-free graphs")
    p.add_argument("--family", type=_family_arg, required=True, help="aux:k=K, ahs:k=K or graph6 list")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "bound"), default="exhaustive")
    p.add_argument("--delta-cap", type=_nonneg)
    p.add_argument("--nu-cap", type=_nonneg)
    p.add_argument("--node-budget", type=_nonneg, help="generated graphs per subtree")
    p.add_argument("--budget", type=_nonneg, default=None, help=budget_help)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check the constructions for one tree")
    p.add_argument("--tree", type=_tree_arg, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in VerifyMode], default="free")
    p.add_argument("--budget", type=_nonneg, default=None, help=budget_help)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("split-family", help="splitting family up to isomorphism")
    p.add_argument("--tree", type=_graph_arg, required=True)
    p.add_argument("--restrict", type=int, nargs="*")
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_split_family)

    p = sub.add_parser("analyze-tree", help="bipartition and theorem parameters")
    p.add_argument("--tree", type=_tree_arg, required=True)
    p.add_argument("--swap", action="store_true")
    p.set_defaults(func=cmd_analyze_tree)

    p = sub.add_parser("campaign", help="run a verification campaign from a config file")
    p.add_argument("--config", default="default", help="config path, or 'default' for the shipped one")
    p.add_argument("--out", help="output directory (overrides the config)")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_campaign)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        ConstructionError,
        CapabilityError,
        FamilyCapError,
        NotATreeError,
        graph6.Graph6Error,
        KeyError,
        ValueError,
    ) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

