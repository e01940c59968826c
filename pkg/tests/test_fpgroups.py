import pytest
from hypothesis import given
from hypothesis import strategies as st

from locald4.errors import CosetLimitExceeded, InvalidParams
from locald4.fpgroups import (
    CosetTable,
    Presentation,
    action_of_word,
    build_gamma_presentation,
    commutator_word,
    coset_action,
    format_presentation,
    format_word,
    free_reduce,
    invert_word,
    parse_presentation,
    parse_word,
    todd_coxeter,
)

words = st.lists(st.integers(-3, 3).filter(bool), max_size=12).map(tuple)


def dihedral_presentation(n):
    return Presentation(["a", "b"], [(1,) * n, (2, 2), (1, 2, 1, 2)])


@given(words)
def test_free_reduce_is_idempotent_and_reduced(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))


@given(words)
def test_inverse_concatenation_reduces_to_nothing(w):
    assert free_reduce(tuple(w) + invert_word(w)) == ()


def test_commutator_word():
    assert commutator_word((1,), (2,)) == (-1, -2, 1, 2)


def test_presentation_guards():
    with pytest.raises(ValueError):
        Presentation(["a", "a"], [])
    with pytest.raises(ValueError):
        Presentation(["a"], [(2,)])


def test_cyclic_enumeration():
    p = Presentation(["a"], [(1,) * 6])
    ct = todd_coxeter(p, [])
    assert ct.closed and ct.num_cosets == 6
    assert coset_action(ct).order == 6


def test_dihedral_enumeration_and_subgroup_index():
    p = dihedral_presentation(4)
    assert todd_coxeter(p, []).num_cosets == 8
    assert todd_coxeter(p, [(2,)]).num_cosets == 4
    assert todd_coxeter(p, [(1,)]).num_cosets == 2


def test_quaternion_enumeration():
    # <a, b | a^4, a^2 b^-2, b^-1 a b a>
    p = Presentation(["a", "b"], [(1,) * 4, (1, 1, -2, -2), (-2, 1, 2, 1)])
    ct = todd_coxeter(p, [])
    assert ct.num_cosets == 8
    g = coset_action(ct)
    assert g.order == 8
    # exactly one involution separates this from the dihedral group
    assert sum(1 for x in g.elements() if x.order() == 2) == 1


def test_fill_orders_agree():
    p = dihedral_presentation(6)
    a = todd_coxeter(p, [(2,)], fill_order="forward")
    b = todd_coxeter(p, [(2,)], fill_order="reversed")
    assert a.num_cosets == b.num_cosets == 6
    assert a.table == b.table


def test_enumeration_budget():
    free = Presentation(["a", "b"], [])
    with pytest.raises(CosetLimitExceeded):
        todd_coxeter(free, [], max_cosets=100)
    with pytest.raises(InvalidParams):
        todd_coxeter(free, [], max_cosets=0)


def test_action_of_word_traces_single_generators():
    p = dihedral_presentation(4)
    ct = todd_coxeter(p, [(2,)])
    g = coset_action(ct)
    assert action_of_word(ct, (1,)) == g.generators[0]
    assert action_of_word(ct, (1, 1)) == g.generators[0] * g.generators[0]


@pytest.mark.parametrize("t,sign", [(2, "+"), (2, "-"), (3, "+"), (3, "-")])
def test_gamma_presentation_orders(t, sign):
    pres, sub, edge = build_gamma_presentation(t, sign)
    full = todd_coxeter(pres, [])
    assert full.num_cosets == t * 2 ** (2 * t + 3)
    ct = todd_coxeter(pres, sub)
    assert ct.num_cosets == t * 2 ** (t + 2)
    # the edge word moves the subgroup's coset
    assert action_of_word(ct, edge)(0) != 0


def test_gamma_presentation_signs_differ():
    plus, _, _ = build_gamma_presentation(2, "+")
    minus, _, _ = build_gamma_presentation(2, "-")
    assert plus.relators != minus.relators
    with pytest.raises(InvalidParams):
        build_gamma_presentation(1, "+")
    with pytest.raises(InvalidParams):
        build_gamma_presentation(2, "x")


def test_word_text_round_trip():
    names = {"a": 1, "b": 2, "x0": 3}
    assert parse_word("a^2 b^-1", names) == (1, 1, -2)
    assert parse_word("[a, x0]", names) == (-1, -3, 1, 3)
    assert parse_word("", names) == ()
    with pytest.raises(ValueError):
        parse_word("c", names)
    assert format_word((1, 1, -2), ["a", "b"]) == "a^2 b^-1"


def test_presentation_text_round_trip():
    p = dihedral_presentation(5)
    q = parse_presentation(format_presentation(p))
    assert q == p
    assert todd_coxeter(q, []).num_cosets == 10
