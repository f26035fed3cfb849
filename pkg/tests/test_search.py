import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from treeblowup import graph6
from treeblowup.canon import canonical_form
from treeblowup.constructions import almost_regular
from treeblowup.containment import ForbiddenFamily, ahs_family, aux_family, brute_force_contains, double_star
from treeblowup.formulas import chvatal_hanson, g1, g2
from treeblowup.graph import Graph, complete, disjoint_union, matching, star
from treeblowup.search import (
    CapabilityError,
    CensusQuery,
    Mode,
    brute_force_free_classes,
    connected_free_graphs,
    generate_free_graphs,
    max_edges_free,
    max_edges_nu_delta,
)


def _atlas(max_n):
    for ng in graph_atlas_g():
        if 0 < ng.number_of_nodes() <= max_n:
            yield Graph.from_edges(ng.number_of_nodes(), list(ng.edges()))


def test_triangle_free_counts_match_atlas():
    fam = ForbiddenFamily((complete(3),), "K3")
    mine = {}
    for g in generate_free_graphs(CensusQuery(fam, max_vertices=7)):
        mine[g.n] = mine.get(g.n, 0) + 1
    ref = {}
    for g in _atlas(7):
        if g.isolated_vertices() or any(nx.triangles(nx.Graph(list(g.edges()))).values()):
            continue
        ref[g.n] = ref.get(g.n, 0) + 1
    assert mine == ref


def test_connected_output_is_isomorph_free():
    fam = ForbiddenFamily((complete(4),), "K4")
    graphs, _, done = connected_free_graphs(CensusQuery(fam, max_vertices=6))
    keys = [canonical_form(g) for g in graphs]
    assert done and len(keys) == len(set(keys))
    assert all(g.is_connected() for g in graphs)
    # connected graphs on 2..6 vertices: 1, 2, 6, 21, 112; minus those with a K4
    atlas = [g for g in _atlas(6) if g.n >= 2 and g.is_connected()]
    assert len(graphs) == sum(not brute_force_contains(g, complete(4)) for g in atlas)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generation_matches_brute_force(n):
    fam = aux_family(3)
    got = {canonical_form(g) for g in generate_free_graphs(CensusQuery(fam, max_vertices=n)) if g.n == n}
    assert got == brute_force_free_classes(fam, n)


def test_k12_free_graphs_are_matchings():
    fam = ForbiddenFamily((star(2),))
    graphs = list(generate_free_graphs(CensusQuery(fam, max_vertices=8)))
    assert [g.n for g in graphs] == [2, 4, 6, 8]
    assert all(canonical_form(g) == canonical_form(matching(g.n // 2)) for g in graphs)


def test_2k2_free_connected_are_stars_and_triangles():
    fam = ForbiddenFamily((matching(2),))
    res = max_edges_free(CensusQuery(fam, max_vertices=6))
    assert res.best_edges == 5
    shapes = {canonical_form(g) for g in res.extremal_graphs}
    assert shapes == {canonical_form(star(5))}
    small = max_edges_free(CensusQuery(fam, max_vertices=3))
    assert small.best_edges == 3
    assert {canonical_form(g) for g in small.extremal_graphs} == {canonical_form(complete(3))}


@pytest.mark.parametrize(
    "family,n,best,count",
    [(aux_family(2), 4, 1, 1), (aux_family(3), 9, 5, 1), (ahs_family(2), 4, 1, 1), (ahs_family(3), 9, 6, 1)],
)
def test_auxiliary_censuses(family, n, best, count):
    res = max_edges_free(CensusQuery(family, max_vertices=n))
    assert res.complete and res.best_edges == best and len(res.extremal_graphs) == count


def test_aux_values_follow_g1_g2():
    assert max_edges_free(CensusQuery(aux_family(3), max_vertices=9)).best_edges == g1(3)
    assert max_edges_free(CensusQuery(ahs_family(3), max_vertices=9)).best_edges == g2(3)


def _oracle_k4():
    # every R(7,3) realisation, and R(5,3) plus a disjoint triangle
    out = set()
    for g in _atlas(7):
        if g.n == 7 and g.num_edges == 10 and sorted(g.degrees()) == [2] + [3] * 6:
            out.add(canonical_form(g))
    for g in _atlas(5):
        if g.n == 5 and g.num_edges == 7 and sorted(g.degrees()) == [2] + [3] * 4:
            out.add(canonical_form(disjoint_union([g, complete(3)])))
    return out


@pytest.mark.slow
def test_aux_k4_extremal_set():
    res = max_edges_free(CensusQuery(aux_family(4), max_vertices=12))
    assert res.best_edges == g1(4) == 10
    got = {canonical_form(g) for g in res.extremal_graphs}
    assert got == _oracle_k4()
    assert len(got) == 5
    assert canonical_form(almost_regular(7, 3)) in got


def test_parallel_equals_sequential():
    seq = max_edges_free(CensusQuery(aux_family(3), max_vertices=9))
    par = max_edges_free(CensusQuery(aux_family(3), max_vertices=9, workers=2))
    assert seq.lines() == par.lines()


def test_mode_max_edges_keeps_one():
    res = max_edges_free(CensusQuery(ahs_family(3), max_vertices=9, mode=Mode.MAX_EDGES))
    assert len(res.extremal_graphs) == 1 and res.best_edges == 6


def test_node_budget_marks_incomplete():
    res = max_edges_free(CensusQuery(ahs_family(3), max_vertices=9, budget=1))
    assert not res.complete


def test_capability():
    with pytest.raises(CapabilityError):
        CensusQuery(aux_family(3), max_vertices=25)
    with pytest.raises(CapabilityError):
        CensusQuery(aux_family(3), max_vertices=0)


def test_implied_caps():
    assert CensusQuery(aux_family(4), 10).caps() == (3, 3)
    assert CensusQuery(ForbiddenFamily((double_star(2),)), 10).caps() == (None, None)


@pytest.mark.parametrize("nu,delta", [(nu, d) for nu in (1, 2, 3) for d in (1, 2, 3)])
def test_chvatal_hanson(nu, delta):
    res = max_edges_nu_delta(nu, delta)
    assert res.complete and res.best_edges == chvatal_hanson(nu, delta)


def test_lines_format():
    res = max_edges_free(CensusQuery(aux_family(3), max_vertices=9))
    lines = res.lines()
    assert lines[0].startswith("best=5 extremal=1 ")
    assert lines[0].endswith("complete=yes")
    assert lines[1] == "graph=" + graph6.encode(res.extremal_graphs[0])
