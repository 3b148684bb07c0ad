"""Brute-force checks of the relation algebra.

These are the oracle for everything downstream: the recorder's comparison
menu, condition negation in the transpiler, and exit-condition reordering
all lean on this module being right.
"""

import itertools

from hypothesis import given, strategies as st

from agt.relations import (
    RELATIONS,
    holds,
    negate,
    partition_stable,
    true_relations,
)

PAIRS = list(itertools.product(range(-50, 51), repeat=2))  # 10201 pairs


def test_exactly_three_relations_hold_per_pair():
    for a, b in PAIRS:
        expect = [r for r in RELATIONS if holds(a, r, b)]
        assert len(expect) == 3
        got = true_relations(a, b)
        assert sorted(got) == sorted(expect)


def test_menu_order():
    assert true_relations(1, 2) == ["<", "!=", "<="]
    assert true_relations(2, 1) == [">", "!=", ">="]
    assert true_relations(2, 2) == ["==", "<=", ">="]


def test_negation_truth_table():
    for a, b in PAIRS:
        for r in RELATIONS:
            assert holds(a, negate(r), b) == (not holds(a, r, b))


def test_negation_involution():
    for r in RELATIONS:
        assert negate(negate(r)) == r


@given(st.lists(st.integers(-10, 10)))
def test_partition_stable_oracle(xs):
    pred = lambda x: x % 2 == 0
    got = partition_stable(xs, pred)
    assert got == [x for x in xs if pred(x)] + [x for x in xs if not pred(x)]
    # running it again changes nothing
    assert partition_stable(got, pred) == got
    assert sorted(got) == sorted(xs)
