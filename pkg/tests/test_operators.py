import pytest

from locald4.autiso import are_isomorphic, automorphism_group
from locald4.errors import UnknownSeed
from locald4.graphs import Graph, girth, is_connected, valency_list
from locald4.operators import (
    arc_graph,
    arc_map,
    bipartite_double,
    bipartite_double_map,
    hill_capping,
    hill_capping_map,
    line_graph,
    line_graph_map,
    seed,
    seed_names,
    squared_arc_graph,
    squared_arc_map,
    squared_arc_swap_map,
    three_arc_graph,
)
from locald4.perm import PermGroup, Permutation


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen():
    return seed("Petersen").graph


def test_line_graph_of_k4_is_octahedron():
    lg = line_graph(complete(4))
    assert lg.n == 6 and valency_list(lg) == [4] * 6
    assert girth(lg) == 3
    assert automorphism_group(lg).order == 48


def test_line_graph_of_petersen():
    lg = line_graph(petersen())
    assert lg.n == 15 and valency_list(lg) == [4] * 15
    assert girth(lg) == 3
    assert automorphism_group(lg).order == 120


def test_operator_orders_on_petersen():
    pet = petersen()
    assert bipartite_double(pet).n == 20
    assert arc_graph(pet).n == 30
    assert three_arc_graph(pet).n == 30
    assert hill_capping(pet).n == 60
    assert squared_arc_graph(pet).n == 900
    for g in (arc_graph(pet), three_arc_graph(pet), hill_capping(pet)):
        assert valency_list(g) == [4] * g.n and is_connected(g)


def test_bipartite_double_of_odd_cycle_is_double_cycle():
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    b = bipartite_double(c5)
    c10 = Graph(10, [(i, (i + 1) % 10) for i in range(10)])
    assert are_isomorphic(b, c10) is not None


def test_bipartite_double_of_bipartite_graph_splits():
    k33 = seed("F6").graph
    assert not is_connected(bipartite_double(k33))


def _homomorphism(graph_op, map_op, base):
    derived = graph_op(base)
    aut = automorphism_group(base)
    p, q = aut.generators[0], aut.generators[1]
    fp, fq = map_op(base, p), map_op(base, q)
    assert map_op(base, p * q) == fp * fq
    for u, v in derived.edges():
        assert derived.has_edge(fp(u), fp(v))


def test_pushed_maps_are_homomorphisms():
    _homomorphism(line_graph, line_graph_map, petersen())
    _homomorphism(arc_graph, arc_map, petersen())
    _homomorphism(hill_capping, hill_capping_map, seed("Heawood").graph)
    _homomorphism(squared_arc_graph, squared_arc_map, petersen())


def test_bipartite_double_map_swap():
    pet = petersen()
    b = bipartite_double(pet)
    ident = Permutation.identity(pet.n)
    swap = bipartite_double_map(pet, ident, swap=True)
    assert swap.order() == 2
    for u, v in b.edges():
        assert b.has_edge(swap(u), swap(v))
    plain = bipartite_double_map(pet, ident)
    assert plain.is_identity()


def test_squared_arc_swap_commutes_with_adjacency():
    pet = petersen()
    g = squared_arc_graph(pet)
    sw = squared_arc_swap_map(pet)
    assert sw.order() == 2
    for u, v in g.edges():
        assert g.has_edge(sw(u), sw(v))


def test_line_graph_action_has_same_order():
    pet = petersen()
    aut = automorphism_group(pet)
    lifted = PermGroup([line_graph_map(pet, p) for p in aut.generators], 15)
    assert lifted.order == aut.order == 120


@pytest.mark.parametrize("name,n,girth_", [
    ("F6", 6, 4), ("Petersen", 10, 5), ("Heawood", 14, 6),
    ("F18", 18, 6), ("Tut", 30, 8), ("F90", 90, 10),
])
def test_seed_invariants(name, n, girth_):
    s = seed(name)
    assert s.graph.n == s.expected_order == n
    assert valency_list(s.graph) == [3] * n
    assert girth(s.graph) == girth_
    assert is_connected(s.graph)


def test_seed_aut_orders():
    expected = {"F6": 72, "Petersen": 120, "Heawood": 336,
                "F18": 216, "Tut": 1440, "F90": 4320}
    for name, order in expected.items():
        assert seed(name).expected_aut_order == order


def test_seed_registry():
    assert seed_names() == ["F18", "F6", "F90", "Heawood", "Petersen", "Tut"]
    with pytest.raises(UnknownSeed):
        seed("nope")
