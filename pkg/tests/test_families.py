import pytest

from locald4.autiso import are_isomorphic, automorphism_group
from locald4.errors import CosetLimitExceeded, DegreeMismatch, InvalidParams
from locald4.families import (
    ActedGraph,
    CrsParams,
    GammaTParams,
    build_c333,
    build_crs,
    build_gamma,
    crs_graph,
    crs_matches,
    crs_params_for_order,
    recognize_crs,
)
from locald4.graphs import Graph, is_connected, valency_list
from locald4.localaction import is_vertex_transitive
from locald4.perm import PermGroup, Permutation


def test_param_guards():
    with pytest.raises(InvalidParams):
        CrsParams(2, 1)
    with pytest.raises(InvalidParams):
        CrsParams(4, 0)
    with pytest.raises(InvalidParams):
        CrsParams(4, 4)
    with pytest.raises(InvalidParams):
        GammaTParams(1, "+")
    with pytest.raises(InvalidParams):
        GammaTParams(3, "±")


def test_acted_graph_requires_a_genuine_action():
    square = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    with pytest.raises(DegreeMismatch):
        ActedGraph(square, PermGroup([], 5), ("test",))
    bad = PermGroup([Permutation([1, 0, 2, 3])], 4)
    with pytest.raises(AssertionError):
        ActedGraph(square, bad, ("test",))


@pytest.mark.parametrize("r,s", [(3, 1), (4, 2), (5, 3), (6, 2), (8, 7)])
def test_crs_orders(r, s):
    ag = build_crs(CrsParams(r, s))
    assert ag.graph.n == r * 2 ** s
    assert valency_list(ag.graph) == [4] * ag.graph.n
    assert is_connected(ag.graph)
    assert ag.group.order == r * 2 ** s * 2 ** (r - s + 1)
    assert ag.group.point_stabilizer(0).order == 2 ** (r - s + 1)
    assert is_vertex_transitive(ag)


def test_crs_graph_matches_acted_build():
    p = CrsParams(5, 2)
    assert crs_graph(p).adj == build_crs(p).graph.adj


@pytest.mark.parametrize("t,sign,n,order", [
    (2, "+", 32, 256), (2, "-", 32, 256),
    (3, "+", 96, 1536), (3, "-", 96, 1536),
])
def test_gamma_orders(t, sign, n, order):
    ag = build_gamma(GammaTParams(t, sign))
    assert ag.graph.n == n
    assert ag.group.order == order
    assert valency_list(ag.graph) == [4] * n
    assert is_connected(ag.graph)
    assert is_vertex_transitive(ag)


def test_gamma_signs_build_different_graphs():
    plus = build_gamma(GammaTParams(2, "+"))
    minus = build_gamma(GammaTParams(2, "-"))
    assert are_isomorphic(plus.graph, minus.graph) is None


def test_gamma_respects_coset_budget():
    with pytest.raises(CosetLimitExceeded):
        build_gamma(GammaTParams(3, "+"), max_cosets=10)


def test_c333():
    ag = build_c333()
    assert ag.graph.n == 81
    # the Cayley group acts regularly; the full group comes from aut search
    assert ag.group.order == 81
    assert valency_list(ag.graph) == [4] * 81
    assert is_vertex_transitive(ag)
    full = automorphism_group(ag.graph)
    assert full.order == 81 * 16
    assert full.point_stabilizer(0).order == 16


def test_params_for_order():
    assert [(p.r, p.s) for p in crs_params_for_order(32)] == \
        [(16, 1), (8, 2), (4, 3)]
    assert crs_params_for_order(7) == []
    # r >= 3 and s <= r - 1 prune the tail
    assert all(p.r >= 3 and p.s <= p.r - 1 for p in crs_params_for_order(96))


def test_matches_rejects_wrong_shape():
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert crs_matches(c6) == []
    assert recognize_crs(c6) is None


def test_recognize_finds_own_parameters():
    for r, s in [(3, 1), (4, 3), (5, 2)]:
        g = crs_graph(CrsParams(r, s))
        assert CrsParams(r, s) in crs_matches(g)
        found = recognize_crs(g)
        assert are_isomorphic(g, crs_graph(found)) is not None


def test_gamma2_plus_is_a_cyclic_cover_and_minus_is_not():
    plus = build_gamma(GammaTParams(2, "+"))
    minus = build_gamma(GammaTParams(2, "-"))
    assert [(p.r, p.s) for p in crs_matches(plus.graph)] == [(4, 3)]
    assert crs_matches(minus.graph) == []
