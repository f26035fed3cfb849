"""Config-driven verification campaigns.

A config is line oriented: ``key = value``, ``#`` comments, repeated keys
for lists. Recognised keys::

    output_dir = DIR                  report directory (relative to cwd)
    workers = N                       parallel work units
    budget = N                        containment node budget per check
    census = family=F max-n=N expect=E [graphs=G6,G6,...] [includes=G6,...]
    chvatal_hanson = MAXCAP           every 1 <= nu, Delta <= MAXCAP
    grid = tree=SRC p=P[,P] n=N[,N]   construction identity and freeness
    lemma21 = max-order=M p=P[,P]     universal-host witnesses, all trees
    exhaustive = tree=SRC p=P n=LO..HI
    matching = seed=S nu=A ge=B trees=C

The report lists one ``key STATUS detail`` line per check, sorted by key,
under a summary header. It carries no timestamps, so identical configs
give byte-identical reports.
"""

from __future__ import annotations

import importlib.resources
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import graph6
from .checks import check_lemma21, matching_suite
from .constructions import ConstructionError, edge_blowup
from .formulas import chvatal_hanson, dispatch
from .search import CensusQuery, max_edges_free, max_edges_nu_delta
from .trees import all_trees, tree_params
from .verify import VerifyMode, check_construction, min_feasible_n, verify_theorem

REPORT_NAME = "campaign-report.txt"


class CampaignError(ValueError):
    pass


@dataclass
class CampaignConfig:
    source: str
    base_dir: Path
    output_dir: Path = Path("campaign-out")
    workers: int = 1
    budget: int | None = None
    census: list[dict[str, str]] = field(default_factory=list)
    chvatal_hanson: list[int] = field(default_factory=list)
    grid: list[dict[str, str]] = field(default_factory=list)
    lemma21: list[dict[str, str]] = field(default_factory=list)
    exhaustive: list[dict[str, str]] = field(default_factory=list)
    matching: list[dict[str, str]] = field(default_factory=list)

    def item_count(self) -> int:
        return sum(
            len(x)
            for x in (self.census, self.chvatal_hanson, self.grid, self.lemma21, self.exhaustive, self.matching)
        )


def _fields(text: str, where: str) -> dict[str, str]:
    out = {}
    for tok in text.split():
        key, sep, val = tok.partition("=")
        if not sep or not val:
            raise CampaignError(f"{where}: expected key=value, got {tok!r}")
        out[key] = val
    return out


def _ints(text: str, where: str) -> list[int]:
    try:
        if ".." in text:
            lo, _, hi = text.partition("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise CampaignError(f"{where}: bad integer list {text!r}") from None


def _need(fields: dict[str, str], keys: tuple[str, ...], where: str) -> None:
    missing = [k for k in keys if k not in fields]
    if missing:
        raise CampaignError(f"{where}: missing {', '.join(missing)}")


def _resolve_tree(src: str, base: Path, where: str):
    from .cli import load_graph

    if not (src.startswith("g6:") or src.startswith("edges:")) and src != "-":
        path = Path(src)
        if not path.is_absolute():
            path = base / path
        if not path.is_file():
            raise CampaignError(f"{where}: file {src!r} does not exist")
        src = str(path)
    try:
        return load_graph(src)
    except ValueError as exc:
        raise CampaignError(f"{where}: {exc}") from None


def default_config_text() -> str:
    return importlib.resources.files("treeblowup").joinpath("data/default.cfg").read_text()


def parse_config(text: str, base_dir: Path, source: str = "<config>") -> CampaignConfig:
    cfg = CampaignConfig(source=source, base_dir=base_dir)
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{no}"
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not value:
            raise CampaignError(f"{where}: expected key = value")
        if key == "output_dir":
            cfg.output_dir = Path(value)
        elif key == "workers":
            cfg.workers = _ints(value, where)[0]
            if cfg.workers < 1:
                raise CampaignError(f"{where}: workers must be positive")
        elif key == "budget":
            vals = _ints(value, where)
            if len(vals) != 1 or vals[0] < 0:
                raise CampaignError(f"{where}: budget must be one non-negative integer")
            cfg.budget = vals[0]
        elif key == "chvatal_hanson":
            cfg.chvatal_hanson.append(_ints(value, where)[0])
        elif key in ("census", "grid", "lemma21", "exhaustive", "matching"):
            f = _fields(value, where)
            required = {
                "census": ("family", "max-n", "expect"),
                "grid": ("tree", "p", "n"),
                "lemma21": ("max-order", "p"),
                "exhaustive": ("tree", "p", "n"),
                "matching": ("seed", "nu", "ge", "trees"),
            }[key]
            _need(f, required, where)
            f["_where"] = where
            getattr(cfg, key).append(f)
        else:
            raise CampaignError(f"{where}: unknown key {key!r}")
    return cfg


def validate(cfg: CampaignConfig) -> None:
    if not cfg.grid and not cfg.exhaustive:
        raise CampaignError("the campaign lists no trees (grid or exhaustive entries)")
    for f in cfg.grid + cfg.exhaustive:
        tree = _resolve_tree(f["tree"], cfg.base_dir, f["_where"])
        try:
            tree_params(tree)
        except ValueError as exc:
            raise CampaignError(f"{f['_where']}: {exc}") from None
    for f in cfg.grid:
        tree = _resolve_tree(f["tree"], cfg.base_dir, f["_where"])
        for p in _ints(f["p"], f["_where"]):
            low = min_feasible_n(tree, p)
            for n in _ints(f["n"], f["_where"]):
                if n < low:
                    raise CampaignError(f"{f['_where']}: n={n} is below the feasible order {low}")
    for f in cfg.census:
        from .cli import parse_family

        try:
            parse_family(f["family"])
        except ValueError as exc:
            raise CampaignError(f"{f['_where']}: {exc}") from None


def load_config(path: str, out_dir: str | None = None, workers: int | None = None) -> CampaignConfig:
    if path == "default":
        cfg = parse_config(default_config_text(), Path.cwd(), "default.cfg")
    else:
        p = Path(path)
        if not p.is_file():
            raise CampaignError(f"config file {path!r} does not exist")
        cfg = parse_config(p.read_text(), p.parent, str(p))
    if out_dir is not None:
        cfg.output_dir = Path(out_dir)
    if workers is not None:
        if workers < 1:
            raise CampaignError("workers must be positive")
        cfg.workers = workers
    validate(cfg)
    return cfg


# -- work units ----------------------------------------------------------------

Row = tuple[str, str, str]


def _census_unit(f: dict[str, str], budget: int | None) -> list[Row]:
    from .cli import parse_family

    fam = parse_family(f["family"])
    res = max_edges_free(CensusQuery(fam, int(f["max-n"]), containment_budget=budget))
    key = f"census/{f['family']}/max-n={int(f['max-n']):02d}"
    expect = int(f["expect"])
    got = set(res.keys)
    ok = res.best_edges == expect
    if "graphs" in f:
        ok = ok and got == set(f["graphs"].split(","))
    if "includes" in f:
        ok = ok and set(f["includes"].split(",")) <= got
    status = "UNKNOWN" if not res.complete else ("PASS" if ok else "FAIL")
    detail = f"best={res.best_edges} expect={expect} extremal={','.join(sorted(got)) or '-'}"
    return [(key, status, detail)]


def _chvatal_unit(nu: int, delta: int, budget: int | None) -> list[Row]:
    res = max_edges_nu_delta(nu, delta, containment_budget=budget)
    want = chvatal_hanson(nu, delta)
    status = "UNKNOWN" if not res.complete else ("PASS" if res.best_edges == want else "FAIL")
    return [(f"chvatal-hanson/nu={nu}/delta={delta}", status, f"census={res.best_edges} formula={want}")]


def _grid_unit(tree_g6: str, p: int, n: int, budget: int | None) -> list[Row]:
    tree = graph6.decode(tree_g6)
    params = tree_params(tree)
    case = dispatch(params, n, p)
    pattern = edge_blowup(tree, p + 1)
    prefix = f"grid/{tree_g6}/p={p}/n={n:03d}"
    rows: list[Row] = [(f"{prefix}/dispatch", "PASS", f"case={case.tag.value} value={case.value} {params.record()}")]
    for spec in case.extremal:
        try:
            checks = check_construction(tree, spec, case.value, pattern, budget)
        except ConstructionError as exc:
            rows.append((f"{prefix}/{spec.kind.value}", "FAIL", str(exc)))
            continue
        for c in checks:
            fields = dict(c.fields)
            detail = " ".join(f"{k}={v}" for k, v in c.fields if k not in ("n", "check", "spec"))
            rows.append((f"{prefix}/{spec.kind.value}/{fields['check']}", c.status, detail))
    return rows


def _lemma21_unit(max_order: int, p: int) -> list[Row]:
    rows = []
    for order in range(2, max_order + 1):
        for t in all_trees(order):
            for variant in ("matching", "path"):
                ok = check_lemma21(t, p, variant)
                rows.append(
                    (f"lemma21/p={p}/order={order}/tree={graph6.encode(t)}/{variant}", "PASS" if ok else "FAIL", "")
                )
    return rows


def _exhaustive_unit(tree_g6: str, p: int, ns: list[int], budget: int | None) -> list[Row]:
    tree = graph6.decode(tree_g6)
    report = verify_theorem(tree, p, ns, VerifyMode.EXHAUSTIVE, budget)
    rows = []
    for c in report.checks:
        fields = dict(c.fields)
        status = "PASS" if c.status == "INFO" else c.status
        rows.append(
            (f"exhaustive/{tree_g6}/p={p}/n={fields['n']:03d}", status,
             f"census={fields['census']} oracle={fields['oracle']}")
        )
    return rows


def _matching_unit(seed: int, nu: int, ge: int, trees: int) -> list[Row]:
    r = matching_suite(seed, nu, ge, trees)
    key = f"matching/seed={seed}"
    return [
        (f"{key}/blossom", "PASS" if not r.nu_failures else "FAIL", f"checked={r.nu_checked} failures={r.nu_failures}"),
        (f"{key}/gallai-edmonds", "PASS" if not r.ge_failures else "FAIL",
         f"checked={r.ge_checked} failures={r.ge_failures}"),
        (f"{key}/tree-cover", "PASS" if not r.tree_failures else "FAIL",
         f"checked={r.tree_checked} failures={r.tree_failures}"),
    ]


def _call(job: tuple[Callable[..., list[Row]], tuple]) -> list[Row]:
    fn, args = job
    return fn(*args)


def plan(cfg: CampaignConfig) -> list[tuple[Callable[..., list[Row]], tuple]]:
    jobs: list[tuple[Callable[..., list[Row]], tuple]] = []
    for f in cfg.census:
        jobs.append((_census_unit, (f, cfg.budget)))
    for cap in cfg.chvatal_hanson:
        for nu in range(1, cap + 1):
            for delta in range(1, cap + 1):
                jobs.append((_chvatal_unit, (nu, delta, cfg.budget)))
    for f in cfg.grid:
        tree = _resolve_tree(f["tree"], cfg.base_dir, f["_where"])
        code = graph6.encode(tree)
        for p in _ints(f["p"], f["_where"]):
            for n in _ints(f["n"], f["_where"]):
                jobs.append((_grid_unit, (code, p, n, cfg.budget)))
    for f in cfg.lemma21:
        for p in _ints(f["p"], f["_where"]):
            jobs.append((_lemma21_unit, (int(f["max-order"]), p)))
    for f in cfg.exhaustive:
        tree = _resolve_tree(f["tree"], cfg.base_dir, f["_where"])
        code = graph6.encode(tree)
        for p in _ints(f["p"], f["_where"]):
            jobs.append((_exhaustive_unit, (code, p, _ints(f["n"], f["_where"]), cfg.budget)))
    for f in cfg.matching:
        jobs.append((_matching_unit, (int(f["seed"]), int(f["nu"]), int(f["ge"]), int(f["trees"]))))
    return jobs


@dataclass(frozen=True)
class CampaignReport:
    path: Path
    rows: tuple[Row, ...]

    @property
    def outcome(self) -> str:
        states = {r[1] for r in self.rows}
        if "FAIL" in states:
            return "FAIL"
        if "UNKNOWN" in states:
            return "UNKNOWN"
        return "PASS"

    def counts(self) -> dict[str, int]:
        out = {"PASS": 0, "FAIL": 0, "UNKNOWN": 0}
        for r in self.rows:
            out[r[1]] += 1
        return out

    def summary_lines(self) -> list[str]:
        c = self.counts()
        return [
            f"outcome={self.outcome}",
            f"checks={len(self.rows)} pass={c['PASS']} fail={c['FAIL']} unknown={c['UNKNOWN']}",
        ]

    def text(self) -> str:
        body = [f"{k} {s}" + (f" {d}" if d else "") for k, s, d in self.rows]
        return "\n".join(self.summary_lines() + body) + "\n"


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    jobs = plan(cfg)
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_call, jobs))
    else:
        results = [_call(job) for job in jobs]
    rows = tuple(sorted(row for rs in results for row in rs))
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    report = CampaignReport(cfg.output_dir / REPORT_NAME, rows)
    report.path.write_text(report.text())
    return report
