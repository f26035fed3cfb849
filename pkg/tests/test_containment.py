import random

import networkx as nx
import pytest
from networkx.algorithms import isomorphism

from treeblowup.checks import random_graph, random_tree
from treeblowup.constructions import ConstructionSpec, build, edge_blowup
from treeblowup.containment import (
    ForbiddenFamily,
    Freeness,
    Status,
    ahs_family,
    aux_family,
    brute_force_contains,
    double_star,
    find_subgraph,
    is_free,
    is_splitfamily_free,
    verify_embedding,
)
from treeblowup.graph import Graph, complete, complete_multipartite, cycle, disjoint_union, empty, join, matching, path, petersen, star
from treeblowup.trees import splitting_family

OPTIONS = [
    dict(symmetry=True, fast_paths=True),
    dict(symmetry=False, fast_paths=False),
    dict(symmetry=True, fast_paths=False, prefilter=False),
]


def _pairs(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        host = random_graph(rng, rng.randint(1, 8))
        pat = random_graph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.8))
        if pat.num_edges == 0:
            pat = pat.add_edge(0, 1) if pat.n > 1 else complete(2)
        yield host, pat


@pytest.mark.parametrize("opts", OPTIONS)
def test_against_brute_force(opts):
    for host, pat in _pairs(1, 300):
        res = find_subgraph(host, pat, **opts)
        assert res.found == brute_force_contains(host, pat)
        if res.found:
            assert verify_embedding(host, pat, res.embedding)


def test_against_networkx_monomorphism():
    rng = random.Random(2)
    for _ in range(150):
        host = random_graph(rng, rng.randint(4, 11), rng.uniform(0.3, 0.8))
        pat = random_tree(rng, rng.randint(2, 7))
        gm = isomorphism.GraphMatcher(nx.Graph(list(host.edges())) if host.num_edges else nx.empty_graph(host.n),
                                      nx.Graph(list(pat.edges())))
        gm.G1.add_nodes_from(range(host.n))
        assert find_subgraph(host, pat).found == gm.subgraph_is_monomorphic()


@pytest.mark.parametrize("shape", [star(3), star(5), matching(2), matching(4), double_star(2), double_star(3)])
def test_fast_paths_agree(shape):
    rng = random.Random(hash(str(shape.rows)) % 1000)
    for _ in range(150):
        host = random_graph(rng, rng.randint(1, 12), rng.uniform(0.05, 0.5))
        a = find_subgraph(host, shape)
        b = find_subgraph(host, shape, fast_paths=False)
        assert a.found == b.found
        if a.found:
            assert verify_embedding(host, shape, a.embedding)


def test_monotone_under_edge_addition():
    for host, pat in _pairs(4, 100):
        if find_subgraph(host, pat).found:
            for u in range(host.n):
                for v in range(u + 1, host.n):
                    assert find_subgraph(host.add_edge(u, v), pat).found


def test_prefilter_is_sound():
    for host, pat in _pairs(5, 300):
        if brute_force_contains(host, pat):
            assert find_subgraph(host, pat, prefilter=True).found


def test_examples():
    assert find_subgraph(cycle(5), path(5)).found
    assert not find_subgraph(cycle(5), complete(3)).found
    assert not find_subgraph(petersen(), cycle(4)).found
    assert find_subgraph(petersen(), cycle(5)).found
    assert find_subgraph(complete_multipartite([3, 3]), cycle(6)).found
    assert not find_subgraph(complete_multipartite([3, 3]), complete(3)).found
    assert find_subgraph(complete(6), Graph(0)).found


def test_turan_avoids_blowup_of_k2():
    host = build(ConstructionSpec.parse("TURAN n=12 r=3"))
    assert not find_subgraph(host, complete(4)).found
    assert find_subgraph(host.add_edge(0, 1), complete(4)).found


def test_is_free_examples():
    fam = aux_family(3)
    assert is_free(cycle(5), fam).status is Freeness.FREE
    res = is_free(star(3), fam)
    assert res.status is Freeness.NOT_FREE and res.pattern_index == 0
    assert is_free(matching(3), fam).status is Freeness.NOT_FREE
    assert is_free(disjoint_union([path(3), path(3)]), fam).status is Freeness.NOT_FREE
    assert is_free(complete(4), ahs_family(3)).status is Freeness.NOT_FREE
    assert is_free(complete(3), ahs_family(3)).status is Freeness.FREE


def test_family_validation():
    with pytest.raises(ValueError):
        ForbiddenFamily(())
    with pytest.raises(ValueError):
        ForbiddenFamily((empty(3),))


def test_budget_zero():
    res = find_subgraph(complete(5), complete(2), budget=0)
    assert res.status is Status.BUDGET_EXCEEDED
    assert is_free(complete(3), aux_family(2), budget=0).status is Freeness.UNKNOWN
    assert is_splitfamily_free(complete(3), path(3), budget=0).status is Freeness.UNKNOWN


def test_budget_small():
    host = build(ConstructionSpec.parse("H1 n=24 p=3 a=2 k=2"))
    res = find_subgraph(host, edge_blowup(path(5), 4), budget=5)
    assert res.status is Status.BUDGET_EXCEEDED and res.nodes == 6


def test_splitfamily_avoids_clique_joins():
    # every tree whose smaller class has minimum degree >= 2, m up to 20
    from treeblowup.trees import all_trees, analyze_tree

    for order in range(3, 9):
        for t in all_trees(order):
            tr = analyze_tree(t)
            if min(t.degree(v) for v in tr.class_a) < 2:
                continue
            for m in range(1, 21):
                host = join(complete(tr.a - 1), empty(m))
                assert is_splitfamily_free(host, t).status is Freeness.FREE


def test_splitfamily_detects_an_extra_edge():
    # K_1 joined with a P3 plus an isolate carries P5 itself
    bad = join(complete(1), disjoint_union([path(3), empty(1)]))
    assert is_splitfamily_free(bad, path(5)).status is Freeness.NOT_FREE
    assert is_splitfamily_free(join(complete(1), path(3)), path(5)).status is Freeness.FREE


def test_splitfamily_matches_membership():
    for t in (path(4), path(5), star(3)):
        fam = splitting_family(t)
        for m in fam:
            assert is_splitfamily_free(m, t).status is Freeness.NOT_FREE
