import pytest

from treeblowup.constructions import ConstructionSpec, build
from treeblowup.containment import Freeness, is_splitfamily_free
from treeblowup.formulas import g
from treeblowup.verify import (
    VerifyMode,
    min_feasible_n,
    perturbations,
    reduced_host,
    verify_theorem,
)

from treeblowup.graph import path

from _grid import GRID, P5, spider


def test_p5_at_24():
    report = verify_theorem(P5, 3, [24])
    assert report.outcome == "PASS"
    lines = report.lines()
    assert lines[0] == f"INFO n=24 check=dispatch case=K_EVEN value={g(24, 3, 2) + 1}"
    assert any("check=free" in line and line.startswith("PASS") for line in lines)
    assert sum(line.startswith("PASS") for line in lines) == 6  # two constructions, three checks each


def test_b0_empty_tree_value():
    report = verify_theorem(spider([2, 3]), 3, [30])
    assert report.outcome == "PASS"
    assert f"value={g(30, 3, 2) + 6}" in report.lines()[0]


def test_reduced_host_payload_free():
    for spec_text in ("H1 n=24 p=3 a=2 k=2", "H2 n=24 p=3 a=2 k=2", "H1 n=30 p=3 a=2 k=3"):
        spec = ConstructionSpec.parse(spec_text)
        tree = P5 if spec.k == 2 else spider([2, 2])
        assert is_splitfamily_free(reduced_host(spec), tree).status is Freeness.FREE


def test_min_feasible_n():
    assert min_feasible_n(P5, 3) == 11
    for tree, _, ns in GRID.values():
        assert min(ns) >= min_feasible_n(tree, 3)


def test_perturbations_cover_twin_classes():
    host = build(ConstructionSpec.parse("H1 n=11 p=3 a=2 k=2"))
    pairs = perturbations(host)
    assert pairs and all(not host.has_edge(u, v) for u, v in pairs)
    assert len(pairs) < host.n * (host.n - 1) // 2 - host.num_edges


def test_perturb_mode_reports_info():
    report = verify_theorem(P5, 3, [11], VerifyMode.PERTURB)
    assert report.outcome == "PASS"
    assert any(line.startswith("INFO") and "check=perturb" in line for line in report.lines())


def test_exhaustive_path():
    report = verify_theorem(path(4), 1, range(1, 9), VerifyMode.EXHAUSTIVE)
    assert report.outcome == "PASS"
    assert len(report.lines()) == 8


def test_small_p_rejected():
    with pytest.raises(ValueError):
        verify_theorem(P5, 2, [20])


def test_budget_zero_is_unknown():
    report = verify_theorem(P5, 3, [11], budget=0)
    assert report.outcome == "UNKNOWN"
