import pytest

from locald4.autiso import are_isomorphic, automorphism_group
from locald4.catalog import dihedral, symmetric
from locald4.errors import NotLocallyC23, NotLocallyD4, StabTooSmall
from locald4.families import ActedGraph, CrsParams, build_crs
from locald4.graphs import Graph, is_connected, valency_list
from locald4.localaction import is_locally_c2_3, is_locally_d4
from locald4.operators import line_graph, line_graph_map, seed
from locald4.perm import PermGroup
from locald4.splitmerge import (
    arc_pairing,
    merge,
    merge_split_isomorphism,
    split,
    split_merge_isomorphism,
    vertex_pairing,
)


def test_split_doubles_and_halves(crs_pairs):
    ag = crs_pairs[(4, 1)]
    sp = split(ag)
    assert sp.graph.n == 2 * ag.graph.n
    assert valency_list(sp.graph) == [3] * sp.graph.n
    assert is_connected(sp.graph)
    assert sp.group.order == ag.group.order
    assert sp.group.point_stabilizer(0).order == \
        ag.group.point_stabilizer(0).order // 2
    assert is_locally_c2_3(sp)


def test_split_on_lifted_line_graph():
    base = seed("F6").graph
    lg = line_graph(base)
    lifted = PermGroup(
        [line_graph_map(base, p)
         for p in automorphism_group(base).generators], lg.n)
    assert lifted.order == 72
    sp = split(ActedGraph(lg, lifted, ("test", "Line(F6)")))
    assert sp.graph.n == 18
    assert sp.group.is_transitive()
    assert sp.group.point_stabilizer(0).order == 4


def test_round_trip_isomorphisms(gamma_pairs):
    ag = gamma_pairs[(2, "+")]
    theta = merge_split_isomorphism(ag)
    assert sorted(theta) == list(range(ag.graph.n))
    theta2 = split_merge_isomorphism(split(ag))
    assert sorted(theta2) == list(range(2 * ag.graph.n))


def test_merge_then_split_graph_class(crs_pairs):
    ag = crs_pairs[(6, 2)]
    mg = merge(split(ag))
    assert is_locally_d4(mg)
    assert mg.group.point_stabilizer(0).order == \
        ag.group.point_stabilizer(0).order
    assert are_isomorphic(ag.graph, mg.graph) is not None


def test_merge_rejects_transitive_local_action():
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(NotLocallyC23):
        merge(ActedGraph(k4, symmetric(4), ("test", "K4")))


def test_merge_rejects_small_stabiliser():
    # K_{3,3} drawn as the circulant C6(1,3); dihedral stabilisers have
    # order 2, which is locally right but too small to quotient
    g = Graph(6, [(i, (i + 1) % 6) for i in range(6)]
              + [(i, i + 3) for i in range(3)])
    ag = ActedGraph(g, dihedral(6), ("test", "C6(1,3)"))
    assert is_locally_c2_3(ag)
    with pytest.raises(StabTooSmall):
        merge(ag)


def test_split_rejects_non_dihedral():
    with pytest.raises(NotLocallyD4):
        split(build_crs(CrsParams(5, 4)))


def test_arc_pairing_structure(crs_pairs):
    ag = crs_pairs[(6, 2)]
    pairing = arc_pairing(ag)
    assert len(pairing.arcs) == 4 * ag.graph.n
    for a in pairing.arcs:
        b = pairing.partner[a]
        assert b != a and b[0] == a[0] and pairing.partner[b] == a
        assert pairing.block(a) == pairing.block(b)


def test_vertex_pairing_covers_once(crs_pairs):
    sp = split(crs_pairs[(6, 2)])
    vp = vertex_pairing(sp)
    assert len(vp) == sp.graph.n // 2
    seen = [v for pair in vp for v in pair]
    assert sorted(seen) == list(range(sp.graph.n))


def test_split_provenance_wraps_input(crs_pairs):
    sp = split(crs_pairs[(4, 1)])
    assert sp.provenance[0] == "split"
    mg = merge(sp)
    assert mg.provenance[0] == "merge"
