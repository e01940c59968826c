import pytest
from hypothesis import given
from hypothesis import strategies as st

from locald4.catalog import cyclic, dihedral, symmetric
from locald4.errors import (
    ConnectionNotInverseClosed,
    IdentityInConnection,
    InvalidPartition,
    PartitionNotInvariant,
    VertexOutOfRange,
)
from locald4.graphs import (
    Graph,
    cayley_graph,
    coset_graph,
    format_graph,
    girth,
    is_connected,
    orbital_graph,
    parse_graph,
    quotient_action,
    quotient_graph,
    valency_list,
)
from locald4.perm import PermGroup, Permutation


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_construction_guards():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexOutOfRange):
        Graph(3, [(0, 3)])


def test_adjacency_queries():
    g = cycle(5)
    assert g.n == 5 and g.num_edges == 5
    assert g.neighbors(0) == (1, 4)
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.degree(3) == 2
    assert (0, 1) in g.edges()


def test_labels_do_not_affect_equality():
    a = Graph(2, [(0, 1)], labels=["x", "y"])
    b = Graph(2, [(0, 1)])
    assert a == b
    assert a.label(0) == "x" and b.label(0) is None


def test_basic_invariants():
    assert is_connected(cycle(6)) and girth(cycle(6)) == 6
    assert girth(complete(4)) == 3
    assert girth(Graph(3, [(0, 1)])) is None
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert valency_list(complete(4)) == [3, 3, 3, 3]


def test_cayley_graph_cycle():
    c6 = cyclic(6)
    gen = c6.generators[0]
    g = cayley_graph(c6, [gen, gen.inverse()])
    assert g.n == 6 and valency_list(g) == [2] * 6
    assert girth(g) == 6


def test_cayley_graph_guards():
    c4 = cyclic(4)
    gen = c4.generators[0]
    with pytest.raises(ConnectionNotInverseClosed):
        cayley_graph(c4, [gen])
    with pytest.raises(IdentityInConnection):
        cayley_graph(c4, [Permutation.identity(4)])


def test_cayley_graph_transpositions_is_bipartite_complete():
    s3 = symmetric(3)
    conn = [Permutation([1, 0, 2]), Permutation([0, 2, 1]),
            Permutation([2, 1, 0])]
    g = cayley_graph(s3, conn)
    assert g.n == 6 and valency_list(g) == [3] * 6
    assert girth(g) == 4


def test_coset_graph_recovers_cycle():
    d5 = dihedral(5)
    stab = d5.point_stabilizer(0)
    rot = next(p for p in d5.generators if p.order() == 5)
    g = coset_graph(d5, stab, rot)
    assert g.n == 5
    assert valency_list(g) == [2] * 5


def test_orbital_graph_petersen_complement():
    # Sym(5) on unordered pairs; the non-adjacent orbital is Petersen
    from locald4.operators import seed
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    idx = {p: k for k, p in enumerate(pairs)}

    def induced(p):
        return Permutation([idx[tuple(sorted((p(a), p(b))))]
                            for a, b in pairs])

    action = PermGroup([induced(p) for p in symmetric(5).generators], 10)
    disjoint = next(k for k, p in enumerate(pairs) if not set(p) & {0, 1})
    g = orbital_graph(action, (0, disjoint))
    from locald4.autiso import are_isomorphic
    assert are_isomorphic(g, seed("Petersen").graph) is not None


def test_quotient_graph_collapses_fibers():
    g = Graph(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5),
                  (3, 4), (3, 5), (4, 0), (4, 1), (5, 0), (5, 1)])
    blocks = [[0, 1], [2, 3], [4, 5]]
    q, membership = quotient_graph(g, blocks)
    assert q.n == 3 and q.num_edges == 3
    assert membership == [0, 0, 1, 1, 2, 2]


def test_quotient_guards():
    g = cycle(4)
    with pytest.raises(InvalidPartition):
        quotient_graph(g, [[0, 1], [2]])
    rot = PermGroup([Permutation([1, 2, 3, 0])], 4)
    with pytest.raises(PartitionNotInvariant):
        quotient_action(rot, [[0, 1], [2, 3]])


def test_quotient_action_on_swap_invariant_partition():
    d4 = dihedral(4)
    q = quotient_action(d4, [[0, 2], [1, 3]])
    assert q.degree == 2 and q.order == 2


small_graphs = st.integers(2, 8).flatmap(
    lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        .filter(lambda e: e[0] != e[1]).map(lambda e: tuple(sorted(e))),
        unique=True, max_size=12).map(lambda es: Graph(n, es)))


@given(small_graphs)
def test_format_parse_round_trip(g):
    assert parse_graph(format_graph(g)).adj == g.adj


@given(small_graphs)
def test_degree_sum_is_twice_edges(g):
    assert sum(valency_list(g)) == 2 * g.num_edges
