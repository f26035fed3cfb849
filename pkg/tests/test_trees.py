import random

import pytest

from _grid import GRID, P5, STAR3, spider
from treeblowup.canon import canonical_form, is_isomorphic
from treeblowup.checks import random_tree
from treeblowup.graph import Graph, complete, cycle, matching, path, star
from treeblowup.matching import matching_number
from treeblowup.trees import (
    FamilyCapError,
    NotATreeError,
    all_trees,
    analyze_tree,
    is_forest,
    is_tree,
    read_edge_list,
    split_vertex,
    split_vertices,
    splitting_family,
    splits_some_of,
    tree_params,
)


def test_path_bipartition():
    t = analyze_tree(P5)
    assert t.class_a == {1, 3} and t.class_b == {0, 2, 4}


def test_star_bipartition():
    t = analyze_tree(STAR3)
    assert t.class_a == {0} and t.class_b == {1, 2, 3}


def test_rejects_non_trees():
    with pytest.raises(NotATreeError):
        analyze_tree(cycle(4))
    with pytest.raises(NotATreeError):
        analyze_tree(matching(2))
    with pytest.raises(NotATreeError):
        analyze_tree(Graph(1))


def test_tie_and_swap():
    t = analyze_tree(path(4))
    assert 0 in t.class_a
    assert 0 in analyze_tree(path(4), swap=True).class_b
    with pytest.raises(ValueError):
        analyze_tree(P5, swap=True)


def test_params_p5():
    pr = tree_params(P5)
    assert (pr.a, pr.k, pr.A0, pr.B0, pr.b) == (2, 2, {1, 3}, {2}, 0)


def test_params_hand_examples():
    # u=1 and v=4 of degree 3 through w=0
    pr = tree_params(spider([2, 2]))
    assert (pr.a, pr.k, pr.A0, pr.B0, pr.b) == (2, 3, {1, 4}, {0}, 0)
    pr = tree_params(spider([2, 3]))
    assert (pr.a, pr.k, pr.A0, pr.B0, pr.b) == (2, 3, {1}, frozenset(), None)
    assert pr.record() == "a=2 k=3 A0=1 B0=0 b=none"


@pytest.mark.parametrize("name", sorted(GRID))
def test_grid_invariants(name):
    tree = GRID[name][0]
    pr = tree_params(tree)
    t = analyze_tree(tree)
    assert all(tree.degree(v) == pr.k for v in pr.A0)
    a0 = sum(1 << v for v in pr.A0)
    for y in pr.B0:
        assert (tree.rows[y] & a0).bit_count() >= 2 and tree.degree(y) >= 2
    assert t.a <= len(t.class_b)


def test_splits():
    assert is_isomorphic(split_vertex(path(3), 1), matching(2))
    assert is_isomorphic(split_vertex(star(3), 0), matching(3))
    assert is_isomorphic(split_vertex(path(3), 0), path(3))
    g = split_vertices(P5, [1, 3])
    assert g.n == 7 and g.num_edges == 4


def test_split_order_independent():
    rng = random.Random(3)
    for _ in range(30):
        t = random_tree(rng, rng.randint(3, 9))
        chosen = [v for v in range(t.n) if rng.random() < 0.5]
        one_by_one = t
        # splitting appends, so surviving labels shift; track by removing from the back
        for v in sorted(chosen, reverse=True):
            one_by_one = split_vertex(one_by_one, v)
        assert canonical_form(one_by_one) == canonical_form(split_vertices(t, chosen))


def test_splitting_family_small():
    assert [canonical_form(g) for g in splitting_family(complete(2))] == [canonical_form(complete(2))]
    fam = splitting_family(path(3))
    assert len(fam) == 2
    assert {canonical_form(g) for g in fam} == {canonical_form(path(3)), canonical_form(matching(2))}


def test_splitting_family_matching_monotone():
    rng = random.Random(11)
    for _ in range(25):
        t = random_tree(rng, rng.randint(2, 9))
        nu = matching_number(t)
        assert all(matching_number(m) >= nu for m in splitting_family(t))


def test_family_cap():
    with pytest.raises(FamilyCapError):
        splitting_family(P5, cap=2)


def test_splits_some_of():
    t = analyze_tree(P5)
    members = splits_some_of(t)
    assert members and all(m.n > P5.n for m in members)


def test_all_trees_counts():
    # OEIS A000055
    assert [len(all_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]
    assert all(is_tree(t) for t in all_trees(7))


def test_forest_and_edge_list():
    assert is_forest(matching(3)) and not is_forest(cycle(3))
    g = read_edge_list("# a path\n0 1\n1 2\n\n")
    assert g == path(3)
