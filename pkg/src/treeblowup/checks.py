"""Randomised property checks shared by the campaign runner and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .constructions import lemma21_witness
from .containment import verify_embedding
from .graph import Graph, mask_of
from .matching import (
    all_maximum_matchings,
    brute_force_matching_number,
    gallai_edmonds,
    has_perfect_matching,
    is_factor_critical,
    matching_number,
    vertex_cover_number,
)
from .trees import analyze_tree, splitting_family


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    p = rng.random() if density is None else density
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_tree_min_a_degree(rng: random.Random, max_n: int, k: int = 2) -> Graph:
    """Random tree on 3..max_n vertices whose smaller class has min degree >= k."""
    while True:
        t = random_tree(rng, rng.randint(3, max_n))
        tr = analyze_tree(t)
        if min(t.degree(v) for v in tr.class_a) >= k:
            return t


@dataclass(frozen=True)
class GallaiEdmondsCheck:
    nu_formula: bool
    odd_factor_critical: bool
    even_perfect: bool
    saturation: bool
    d_is_exposable: bool

    def ok(self) -> bool:
        return all(vars(self).values())


def check_gallai_edmonds(g: Graph) -> GallaiEdmondsCheck:
    """Properties (i)-(iv) of the decomposition, each by direct enumeration.

    (i) nu = (|V| + |S| - o(G-S)) / 2; (ii) odd components of G-S are
    factor-critical; (iii) even ones have a perfect matching; (iv) every
    maximum matching saturates S and matches S into odd components. Also
    checks that D is exactly the set of vertices some maximum matching
    misses.
    """
    rec = gallai_edmonds(g)
    s_mask = mask_of(rec.S)
    rest = g.vertex_mask() & ~s_mask
    comps = g.components(rest)
    odd = [c for c in comps if len(c) % 2]
    even = [c for c in comps if len(c) % 2 == 0]
    nu = brute_force_matching_number(g)
    formula = 2 * nu == g.n + len(rec.S) - len(odd) and rec.nu == nu
    fc = all(is_factor_critical(g.induced_subgraph(c)) for c in odd)
    pm = all(has_perfect_matching(g.induced_subgraph(c)) for c in even)
    odd_mask = mask_of(v for c in odd for v in c)
    maxima = all_maximum_matchings(g)
    sat = True
    missed: set[int] = set()
    for m in maxima:
        covered = {x for e in m for x in e}
        missed |= set(range(g.n)) - covered
        if not rec.S <= covered:
            sat = False
        for u, v in m:
            for x, y in ((u, v), (v, u)):
                if (s_mask >> x) & 1 and not (odd_mask >> y) & 1:
                    sat = False
    return GallaiEdmondsCheck(formula, fc, pm, sat, missed == set(rec.D))


def check_matching_number(g: Graph) -> bool:
    return matching_number(g) == brute_force_matching_number(g)


def check_tree_cover(t: Graph) -> bool:
    """nu(T) = |A| and beta(T') >= |A| over the splitting family."""
    tr = analyze_tree(t)
    if matching_number(t) != tr.a:
        return False
    return all(vertex_cover_number(m) >= tr.a for m in splitting_family(t))


def check_lemma21(tree: Graph, p: int, variant: str = "matching") -> bool:
    w = lemma21_witness(tree, p, variant)
    return verify_embedding(w.host, w.pattern, w.mapping)


@dataclass(frozen=True)
class SuiteResult:
    nu_checked: int
    nu_failures: int
    ge_checked: int
    ge_failures: int
    tree_checked: int
    tree_failures: int

    def ok(self) -> bool:
        return not (self.nu_failures or self.ge_failures or self.tree_failures)


def matching_suite(seed: int, nu_trials: int, ge_trials: int, tree_trials: int) -> SuiteResult:
    rng = random.Random(seed)
    nu_fail = sum(
        not check_matching_number(random_graph(rng, rng.randint(0, 10))) for _ in range(nu_trials)
    )
    ge_fail = sum(
        not check_gallai_edmonds(random_graph(rng, rng.randint(1, 12), rng.uniform(0.1, 0.6))).ok()
        for _ in range(ge_trials)
    )
    tree_fail = sum(
        not check_tree_cover(random_tree_min_a_degree(rng, 12)) for _ in range(tree_trials)
    )
    return SuiteResult(nu_trials, nu_fail, ge_trials, ge_fail, tree_trials, tree_fail)

