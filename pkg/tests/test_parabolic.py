import pytest

from src.coxeter.parabolic import (
    all_subsets,
    min_coset_reps,
    parabolic_longest,
    parabolic_subgroup,
    parabolic_type,
)
from src.coxeter.system import CoxeterError


def test_parabolic_longest(a3, b3):
    assert parabolic_longest(a3, {0, 1}).labels() == [1, 2, 1]
    assert parabolic_longest(a3, set()) == a3.identity
    assert parabolic_longest(a3, {0, 1, 2}) == a3.w0
    assert parabolic_longest(b3, {1, 2}).length == 4
    assert parabolic_longest(a3, {0, 2}) == a3.from_labels([1, 3])


def test_parabolic_subgroup_and_cosets(a3):
    assert parabolic_subgroup(a3, {0}) == [a3.identity, a3.from_labels([1])]
    assert len(parabolic_subgroup(a3, {0, 1})) == 6
    reps = min_coset_reps(a3, {0, 1})
    assert len(reps) == 4
    assert reps[0] == a3.identity


def test_parabolic_type(a3):
    assert parabolic_type(a3, {0, 1}) == [3, 1]
    assert parabolic_type(a3, {0, 2}) == [2, 2]
    assert parabolic_type(a3, set()) == [1, 1, 1, 1]


def test_parabolic_type_outside_type_a(b2):
    with pytest.raises(CoxeterError):
        parabolic_type(b2, {0})


def test_out_of_range_subset(a2):
    with pytest.raises(CoxeterError):
        parabolic_longest(a2, {5})


def test_all_subsets():
    assert all_subsets(2) == [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]
    assert len(all_subsets(4)) == 16
