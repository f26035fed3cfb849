import pytest

from treeblowup.canon import is_isomorphic
from treeblowup.constructions import (
    ConstructionError,
    ConstructionSpec,
    Kind,
    almost_regular,
    blowup_cliques,
    build,
    edge_blowup,
    embed_in_class,
    lemma21_witness,
    min_order,
    turan_graph,
    turan_parts,
    universal_host,
)
from treeblowup.containment import verify_embedding
from treeblowup.formulas import g, g1, g2, g_d
from treeblowup.graph import complete, complete_multipartite, cycle, disjoint_union, empty, path, star
from treeblowup.trees import all_trees


def test_turan():
    assert turan_parts(7, 3) == [3, 2, 2]
    assert turan_graph(7, 3).num_edges == 16 == 21 - 3 - 1 - 1
    assert turan_graph(6, 1).num_edges == 0
    assert turan_graph(6, 6) == complete(6)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 12) for d in range(n)])
def test_almost_regular_degrees(n, d):
    gr = almost_regular(n, d)
    degs = sorted(gr.degrees())
    assert degs[-1] == d or n == 1
    assert sum(1 for x in degs if x != d) <= 1
    assert all(x in (d, d - 1) for x in degs)
    assert gr.num_edges == n * d // 2


def test_almost_regular_examples():
    assert is_isomorphic(almost_regular(5, 2), cycle(5))
    r = almost_regular(7, 3)
    assert r.num_edges == 10 and sorted(r.degrees()) == [2] + [3] * 6
    assert is_isomorphic(almost_regular(3, 1), disjoint_union([complete(2), empty(1)]))
    with pytest.raises(ConstructionError):
        almost_regular(3, 3)


def test_embed_in_class():
    base = complete_multipartite([3, 2])
    assert embed_in_class([3, 2], 0, empty(3)) == base
    gr = embed_in_class([3, 2], 0, path(3))
    assert gr.num_edges == base.num_edges + 2
    with pytest.raises(ConstructionError):
        embed_in_class([3, 2], 1, path(3))


def test_spec_roundtrip_and_errors():
    s = ConstructionSpec.parse("H1 n=20 p=3 a=2 k=2")
    assert str(s) == "H1 n=20 p=3 a=2 k=2"
    assert str(ConstructionSpec.parse("h2_rd n=30 p=3 a=3 d=0 k=5")) == "H2_RD n=30 p=3 a=3 d=0 k=5"
    assert str(ConstructionSpec.parse("COMPLETE_MULTIPARTITE parts=3,2")) == "COMPLETE_MULTIPARTITE parts=3,2"
    for bad in ("", "X n=3", "H1 n=20 p=3 a=2", "TURAN n=5 r"):
        with pytest.raises(ConstructionError):
            ConstructionSpec.parse(bad)


def test_h1_edge_count_example():
    h = build(ConstructionSpec.parse("H1 n=20 p=3 a=2 k=2"))
    assert h.n == 20 and h.num_edges == 140 == 120 + 19 + 0 + 1


@pytest.mark.parametrize("p", [3, 4])
@pytest.mark.parametrize("a", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_edge_counts_match_formulas(p, a, k):
    probe = ConstructionSpec(Kind.H2, n=100, p=p, a=a, k=k)
    lo = max(min_order(probe), min_order(ConstructionSpec(Kind.H1, n=100, p=p, a=a, k=k)))
    for n in (lo, lo + 1, lo + p + 2):
        assert build(ConstructionSpec(Kind.H1, n=n, p=p, a=a, k=k)).num_edges == g(n, p, a) + g1(k)
        assert build(ConstructionSpec(Kind.H2, n=n, p=p, a=a, k=k)).num_edges == g(n, p, a) + g2(k)
        for d in range(max(a - 1, 1)):
            if a > 1:
                spec = ConstructionSpec(Kind.H2_RD, n=n, p=p, a=a, k=k, d=d)
                assert build(spec).num_edges == g_d(n, p, a, d) + g2(k)


def test_min_order_is_tight():
    spec = ConstructionSpec(Kind.H1, n=0, p=3, a=2, k=3)
    lo = min_order(spec)
    build(spec.with_n(lo))
    with pytest.raises(ConstructionError):
        build(spec.with_n(lo - 1))


def test_a_equals_one_is_plain_l():
    h1 = build(ConstructionSpec(Kind.H1, n=15, p=3, a=1, k=3))
    l1 = build(ConstructionSpec(Kind.L1, n=15, p=3, k=3))
    assert h1 == l1


def test_payload_class_choice():
    spec = ConstructionSpec(Kind.L1, n=15, p=3, k=3)
    assert build(spec, payload_class=2).num_edges == build(spec).num_edges


def test_edge_blowup_examples():
    assert edge_blowup(complete(2), 3) == complete(3)
    b = edge_blowup(path(3), 3)
    assert (b.n, b.num_edges) == (5, 6)
    b = edge_blowup(path(5), 4)
    assert (b.n, b.num_edges) == (13, 24)
    assert edge_blowup(path(4), 2) == path(4)
    for clique in blowup_cliques(path(5), 4):
        assert all(b.has_edge(x, y) for x in clique for y in clique if x < y)


def test_universal_host_shapes():
    host, m, classes = universal_host(4, 3)
    assert host.n == 8 + 16 and len(m) == 4 and [len(c) for c in classes] == [8, 8]
    host, m, classes = universal_host(7, 3, "path")
    assert host.n == 7 + 14 and len(m) == 3


@pytest.mark.parametrize("p", [3, 4])
@pytest.mark.parametrize("variant", ["matching", "path"])
def test_lemma21_witnesses(p, variant):
    for order in range(2, 7):
        for t in all_trees(order):
            w = lemma21_witness(t, p, variant)
            assert verify_embedding(w.host, w.pattern, w.mapping)
            assert len(set(w.matching_edges)) == t.num_edges


def test_lemma21_k2():
    w = lemma21_witness(complete(2), 3)
    assert w.pattern == complete(4)
    assert w.host.n == 8 + 16


def test_star_blowup_contains_triangles():
    b = edge_blowup(star(3), 3)
    assert b.n == 7 and b.num_edges == 9
