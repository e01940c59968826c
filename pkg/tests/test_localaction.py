import pytest

from locald4.autiso import automorphism_group
from locald4.errors import VertexOutOfRange
from locald4.families import ActedGraph, CrsParams, build_crs
from locald4.localaction import (
    A4,
    C2_ON_3,
    C3,
    C4,
    D4,
    S3,
    S4,
    TRIVIAL,
    V4,
    LocalType,
    _identify,
    is_arc_transitive,
    is_locally,
    is_locally_c2_3,
    is_locally_d4,
    is_vertex_transitive,
    local_action,
)
from locald4.operators import seed
from locald4.perm import PermGroup, Permutation
from locald4.splitmerge import split


def _pair(g):
    return ActedGraph(g, automorphism_group(g), ("test", ()))


# -- type identification ------------------------------------------------

def test_identify_degree_three():
    assert _identify(PermGroup([], 3)) == TRIVIAL
    assert _identify(PermGroup([Permutation([0, 2, 1])], 3)) == C2_ON_3
    assert _identify(PermGroup([Permutation([1, 2, 0])], 3)) == C3
    assert _identify(PermGroup(
        [Permutation([1, 2, 0]), Permutation([0, 2, 1])], 3)) == S3


def test_identify_degree_four_order_four():
    # both are transitive of order 4; an order-4 element separates them
    assert _identify(PermGroup([Permutation([1, 2, 3, 0])], 4)) == C4
    assert _identify(PermGroup(
        [Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])], 4)) == V4


def test_identify_degree_four_larger():
    assert _identify(PermGroup(
        [Permutation([1, 2, 3, 0]), Permutation([1, 0, 3, 2])], 4)) == D4
    assert _identify(PermGroup(
        [Permutation([1, 2, 0, 3]), Permutation([0, 2, 3, 1])], 4)) == A4
    assert _identify(PermGroup(
        [Permutation([1, 2, 3, 0]), Permutation([1, 0, 2, 3])], 4)) == S4


def test_identify_other():
    t = _identify(PermGroup([Permutation([1, 2, 3, 4, 0])], 5))
    assert t == LocalType("other", degree=5, order=5, transitive=True)
    assert repr(t) == "other(degree=5, order=5, transitive=True)"
    assert repr(D4) == "D4"


# -- local_action on the named families ---------------------------------

def test_crs_local_type_dihedral(crs_pairs):
    for (r, s), ag in crs_pairs.items():
        rep = local_action(ag, 0)
        assert rep.local_type == D4, (r, s)
        assert rep.induced_group.order == 8
        # |H_v| = 2^{r-s+1} leaves a kernel of 2^{r-s-2}
        assert rep.kernel_order == 2 ** (r - s - 2), (r, s)


def test_crs_top_s_is_not_dihedral():
    ag = build_crs(CrsParams(5, 4))
    rep = local_action(ag, 0)
    assert rep.local_type == V4
    assert rep.kernel_order == 1
    assert not is_locally_d4(ag)


def test_gamma_local_reports(gamma_pairs):
    ag = gamma_pairs[(3, "-")]
    rep = local_action(ag, 0)
    assert rep.local_type == D4
    assert rep.induced_group.order == 8
    assert rep.kernel_order == 2
    assert sorted(rep.neighbourhood) == list(rep.neighbourhood)
    assert len(rep.neighbourhood) == 4


def test_petersen_local_type():
    ag = _pair(seed("Petersen").graph)
    rep = local_action(ag, 0)
    assert rep.local_type == S3
    assert rep.kernel_order == 2
    assert is_locally(ag, S3)


# -- predicates ----------------------------------------------------------

def test_transitivity_predicates(gamma_pairs):
    ag = gamma_pairs[(2, "+")]
    assert is_vertex_transitive(ag)
    assert is_arc_transitive(ag)
    assert is_locally_d4(ag)
    assert not is_locally_c2_3(ag)


def test_path_graph_is_not_transitive():
    from locald4.graphs import Graph
    p3 = _pair(Graph(3, [(0, 1), (1, 2)]))
    assert not is_vertex_transitive(p3)
    assert not is_arc_transitive(p3)


def test_locally_c2_3_after_split(crs_pairs):
    cubic = split(crs_pairs[(4, 1)])
    assert is_locally_c2_3(cubic)
    assert not is_locally_d4(cubic)


def test_vertex_out_of_range(gamma_pairs):
    ag = gamma_pairs[(2, "+")]
    with pytest.raises(VertexOutOfRange):
        local_action(ag, ag.graph.n)
    with pytest.raises(VertexOutOfRange):
        local_action(ag, -1)
