"""Automorphism and isomorphism search, checked against brute force on
graphs small enough to enumerate all vertex bijections."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locald4.autiso import are_isomorphic, automorphism_group, subgroup_index
from locald4.catalog import alternating, symmetric
from locald4.errors import InvalidParams, NotASubgroup, SearchBudgetExceeded
from locald4.graphs import Graph
from locald4.operators import line_graph, seed
from locald4.perm import PermGroup, Permutation


def brute_aut_order(g: Graph) -> int:
    edges = set(g.edges())
    count = 0
    for p in itertools.permutations(range(g.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in edges for u, v in edges):
            count += 1
    return count


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- automorphism groups -------------------------------------------------

@pytest.mark.parametrize("g, order", [
    (Graph(4, [(0, 1), (1, 2), (2, 3)]), 2),        # path
    (Graph(4, [(0, 1), (0, 2), (0, 3)]), 6),        # star
    (cycle(6), 12),                                 # dihedral
    (Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), 2),  # triangle with tail
    (Graph(2, []), 2),                              # no edges at all
])
def test_aut_order_matches_brute_force(g, order):
    group = automorphism_group(g)
    assert group.order == order
    assert brute_aut_order(g) == order


def test_aut_fixed_points():
    assert automorphism_group(Graph(0, [])).order == 1
    assert automorphism_group(Graph(1, [])).order == 1


def test_aut_known_orders():
    assert automorphism_group(seed("Petersen").graph).order == 120
    assert automorphism_group(line_graph(seed("Petersen").graph)).order == 120
    assert automorphism_group(seed("Heawood").graph).order == 336


def test_aut_generators_are_automorphisms():
    g = seed("F6").graph
    group = automorphism_group(g)
    assert group.order == 72
    for p in group.generators:
        assert all(g.has_edge(p(u), p(v)) for u, v in g.edges())


def test_aut_budget():
    with pytest.raises(SearchBudgetExceeded):
        automorphism_group(seed("Tut").graph, node_limit=1)


def test_aut_size_guard():
    with pytest.raises(InvalidParams):
        automorphism_group(Graph(10_001, []))


# -- isomorphism ---------------------------------------------------------

def test_iso_witness_on_relabeling():
    g = seed("Petersen").graph
    rng = random.Random(7)
    relab = list(range(g.n))
    rng.shuffle(relab)
    h = Graph(g.n, [(relab[u], relab[v]) for u, v in g.edges()])
    m = are_isomorphic(g, h)
    assert m is not None
    assert all(h.has_edge(m[u], m[v]) for u, v in g.edges())


def test_iso_rejects_wrong_graphs():
    assert are_isomorphic(cycle(6), Graph(6, [(0, 1), (1, 2), (2, 0),
                                              (3, 4), (4, 5), (5, 3)])) is None
    # same degree sequence and edge count, different girth
    assert are_isomorphic(cycle(6), cycle(5)) is None


def test_iso_distinguishes_same_invariants():
    # two 4-valent graphs of equal order: C(4,1)-style circulants
    c8_13 = Graph(8, [(i, (i + 1) % 8) for i in range(8)]
                  + [(i, (i + 3) % 8) for i in range(8)])
    c8_12 = Graph(8, [(i, (i + 1) % 8) for i in range(8)]
                  + [(i, (i + 2) % 8) for i in range(8)])
    m = are_isomorphic(c8_13, c8_13)
    assert m is not None
    assert are_isomorphic(c8_13, c8_12) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 15 - 1), st.randoms(use_true_random=False))
def test_iso_random_graphs_vs_relabeling(mask, rng):
    pairs = list(itertools.combinations(range(6), 2))
    g = Graph(6, [e for i, e in enumerate(pairs) if mask >> i & 1])
    relab = list(range(6))
    rng.shuffle(relab)
    h = Graph(6, [(relab[u], relab[v]) for u, v in g.edges()])
    m = are_isomorphic(g, h)
    assert m is not None
    assert all(h.has_edge(m[u], m[v]) for u, v in g.edges())


# -- subgroup index ------------------------------------------------------

def test_subgroup_index():
    assert subgroup_index(symmetric(4), alternating(4)) == 2
    assert subgroup_index(symmetric(4), symmetric(4)) == 1


def test_subgroup_index_rejects_non_subgroups():
    with pytest.raises(NotASubgroup):
        subgroup_index(alternating(4), symmetric(4))
    with pytest.raises(NotASubgroup):
        subgroup_index(symmetric(4), symmetric(3))


def test_subgroup_index_on_aut_pair(gamma_pairs):
    ag = gamma_pairs[(2, "-")]
    assert subgroup_index(automorphism_group(ag.graph), ag.group) == 9
