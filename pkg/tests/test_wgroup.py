import pytest
from hypothesis import given, strategies as st

from conftest import rngs
from dynfrt.carriers import FiniteAction, builtin_q5, cyclic_group
from dynfrt.randomdata import random_action
from dynfrt.wgroup import (GroupElement, GroupOverflow, bracket, evaluate_word, generate_group,
                           same_class)

Q5 = builtin_q5().as_action()


def words(n_x):
    return st.lists(st.tuples(st.integers(0, n_x - 1), st.sampled_from([1, -1])), max_size=8)


def test_empty_word_is_identity():
    assert evaluate_word(Q5, []).is_identity()


def test_inverse_cancels():
    assert evaluate_word(Q5, [(3, 1), (3, -1)]).is_identity()


def test_bracket_12_on_zero():
    # 0.1 = 3 and 3.2 = 4
    assert bracket(Q5, 1, 2)(0) == 4


def test_brackets_12_and_34_differ():
    assert bracket(Q5, 1, 2).perm == (4, 0, 3, 2, 1)
    assert bracket(Q5, 3, 4).perm == (4, 1, 3, 2, 0)
    assert not same_class(Q5, [(1, 1), (2, 1)], [(3, 1), (4, 1)])


def test_12_is_the_only_solution():
    target = bracket(Q5, 1, 2)
    sols = [(x, y) for x in range(5) for y in range(5) if bracket(Q5, x, y) == target]
    assert sols == [(1, 2)]


def test_q5_group():
    # Regression constants from an independent closure of the five columns.
    closure = generate_group(Q5)
    assert closure.order == 120
    assert [g.order() for g in closure.generators] == [6, 2, 5, 4, 4]


def test_witnesses_reevaluate():
    closure = generate_group(Q5)
    for g in closure.elements:
        assert evaluate_word(Q5, closure.witnesses[g]) == g


def test_constant_action_gives_trivial_group():
    assert generate_group(FiniteAction.from_table([[lam] * 2 for lam in range(3)])).order == 1


def test_cyclic_action():
    assert generate_group(cyclic_group(5).as_action()).order == 5


def test_cap_overflow_names_the_cap():
    with pytest.raises(GroupOverflow, match="10"):
        generate_group(Q5, cap=10)


@given(words(5), words(5))
def test_right_action_law(w1, w2):
    g12, g1, g2 = (evaluate_word(Q5, w) for w in (w1 + w2, w1, w2))
    assert all(g12(lam) == g2(g1(lam)) for lam in range(5))
    assert g12 == g1 * g2


@given(rngs)
def test_group_axioms_on_random_actions(rng):
    a = random_action(rng)
    closure = generate_group(a)
    for g in closure.elements[:10]:
        assert (g * g.inverse()).is_identity()
        for h in closure.elements[:10]:
            assert g * h in closure


def test_bad_word_rejected():
    with pytest.raises(ValueError):
        evaluate_word(Q5, [(7, 1)])
    with pytest.raises(ValueError):
        evaluate_word(Q5, [(1, 2)])
    with pytest.raises(ValueError):
        GroupElement((0, 0, 1))
