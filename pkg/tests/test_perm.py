import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from locald4.catalog import alternating, cyclic, dihedral, symmetric
from locald4.errors import OrderExceedsCap
from locald4.perm import (
    PermGroup,
    Permutation,
    commutator,
    format_group,
    group_from_generators,
    is_elementary_abelian_2,
    normal_closure,
    orbits,
    parse_group,
    trivial_group,
)

perms = st.integers(3, 8).flatmap(
    lambda n: st.permutations(range(n)).map(Permutation))


def same_degree_pairs(n):
    return st.tuples(st.permutations(range(n)).map(Permutation),
                     st.permutations(range(n)).map(Permutation))


def test_identity_and_call():
    e = Permutation.identity(4)
    assert [e(i) for i in range(4)] == [0, 1, 2, 3]
    p = Permutation([2, 0, 1, 3])
    assert p(0) == 2 and p(3) == 3


def test_composition_is_left_to_right():
    # p * q applies p first
    p = Permutation([1, 0, 2])
    q = Permutation([0, 2, 1])
    assert [(p * q)(i) for i in range(3)] == [q(p(i)) for i in range(3)]


def test_from_cycles():
    p = Permutation.from_cycles(5, [(0, 1, 2), (3, 4)])
    assert p.images == (1, 2, 0, 4, 3)
    assert p.order() == 6
    assert p.cycles() == [(0, 1, 2), (3, 4)]


@given(perms)
def test_inverse_round_trip(p):
    e = Permutation.identity(p.degree)
    assert p * p.inverse() == e
    assert p.inverse() * p == e


@given(st.integers(3, 7).flatmap(same_degree_pairs))
def test_product_inverse_reverses(pq):
    p, q = pq
    assert (p * q).inverse() == q.inverse() * p.inverse()


@given(perms)
def test_order_matches_cycle_structure(p):
    lengths = [len(c) for c in p.cycles()] or [1]
    assert p.order() == math.lcm(*lengths)
    assert (p ** p.order()).is_identity()


@given(perms, st.integers(-6, 6))
def test_power_agrees_with_repeated_product(p, k):
    expected = Permutation.identity(p.degree)
    step = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        expected = expected * step
    assert p ** k == expected


def test_catalog_orders():
    assert symmetric(4).order == 24
    assert alternating(4).order == 12
    assert cyclic(7).order == 7
    assert dihedral(4).order == 8
    assert trivial_group(5).order == 1


def test_membership():
    s4 = symmetric(4)
    assert Permutation([1, 0, 2, 3]) in s4
    a4 = alternating(4)
    assert Permutation([1, 0, 2, 3]) not in a4
    assert Permutation([1, 0, 3, 2]) in a4


def test_orbit_stabilizer_arithmetic():
    g = symmetric(5)
    stab = g.point_stabilizer(2)
    assert stab.order == 24
    assert len(g.orbit(2)) * stab.order == g.order
    assert all(p(2) == 2 for p in stab.generators)


def test_stabilizer_generator_rows_match_point_stabilizer():
    g = dihedral(6)
    rows, order = g.stabilizer_generator_rows(1)
    assert order == g.point_stabilizer(1).order == 2
    assert all(r[1] == 1 for r in rows)


def test_transversal_covers_orbit():
    g = dihedral(5)
    tr = g.orbit_transversal(0)
    assert sorted(tr) == list(range(5))
    for target, row in tr.items():
        assert row[0] == target


def test_canonical_coset_rep_constant_on_cosets():
    g = symmetric(4)
    h = alternating(4)
    swap = Permutation([1, 0, 2, 3])
    for p in h.elements():
        rep = h.canonical_coset_rep(p * swap)
        assert rep == h.canonical_coset_rep(swap)


def test_elements_cap():
    with pytest.raises(OrderExceedsCap):
        symmetric(8).elements(100)
    assert len(symmetric(4).elements()) == 24


def test_orbits_partition():
    g = PermGroup([Permutation([1, 0, 2, 4, 3])], 5)
    assert orbits(g) == [[0, 1], [2], [3, 4]]
    assert not g.is_transitive()
    assert symmetric(3).is_transitive()


def test_normal_closure():
    s4 = symmetric(4)
    double = Permutation([1, 0, 3, 2])
    v4 = normal_closure(s4, [double])
    assert v4.order == 4
    assert is_elementary_abelian_2(v4)
    three_cycle = Permutation([1, 2, 0, 3])
    assert normal_closure(s4, [three_cycle]).order == 12


def test_commutator():
    a = Permutation([1, 0, 2])
    b = Permutation([0, 2, 1])
    c = commutator(a, b)
    assert c == a.inverse() * b.inverse() * a * b


def test_is_semiregular():
    assert cyclic(6).is_semiregular()
    assert not dihedral(4).is_semiregular()


def test_group_from_generators_defaults_degree():
    gens = [Permutation([1, 2, 3, 4, 5, 6, 7, 0])]
    assert group_from_generators(gens).order == 8
    with pytest.raises(ValueError):
        group_from_generators([])


@given(st.integers(2, 5))
def test_format_parse_round_trip(n):
    g = symmetric(n)
    again = parse_group(format_group(g))
    assert again.order == g.order
    assert all(p in g for p in again.generators)
