import math
import os

import pytest
import sympy

from genstirling.errors import BadRange, CapExceeded
from genstirling.factorials import raising
from genstirling.oracle import (
    DEFAULT_CAP,
    Distribution,
    WeightLetter,
    enumerate_labeled_weight,
    enumerate_outcomes,
    enumerate_weight,
)
from genstirling.polycore import A, B, ONE, ZERO, MultiPoly
from genstirling.stirling import build_table, explicit_numerator


def test_three_into_one_list():
    weight = enumerate_weight(3, 1)
    assert weight.to_str() == "2*a^2 + 3*a*b + b^2"
    a, b = sympy.symbols("a b")
    assert sympy.factor(weight.to_sympy()) == sympy.factor((a + b) * (2 * a + b))


def test_three_into_one_list_outcomes():
    outcomes = enumerate_outcomes(3, 1)
    assert len(outcomes) == 6
    assert all(o.distribution.is_valid() for o in outcomes)
    assert sum((o.weight_poly() for o in outcomes), ZERO) == enumerate_weight(3, 1)
    assert sorted(o.distribution.lists for o in outcomes) == [
        ((1, 2, 3),),
        ((1, 3, 2),),
        ((2, 1, 3),),
        ((2, 3, 1),),
        ((3, 1, 2),),
        ((3, 2, 1),),
    ]


def test_two_elements_have_distinct_head_and_tail_weights():
    weights = sorted(o.weight for o in enumerate_outcomes(2, 1))
    assert weights == [(0, 1, 0), (1, 0, 0)]


def test_oracle_matches_triangle_up_to_8():
    table = build_table(8)
    for n in range(9):
        for k in range(n + 1):
            assert enumerate_weight(n, k) == table.entry(n, k), (n, k)


def test_pruning_is_sound():
    for n in range(7):
        for k in range(n + 2):
            assert enumerate_weight(n, k, prune=False) == enumerate_weight(n, k), (n, k)
            assert len(enumerate_outcomes(n, k, prune=False)) == len(enumerate_outcomes(n, k))


def test_boundaries():
    assert enumerate_weight(0, 0) == ONE
    assert enumerate_weight(3, 0) == ZERO
    assert enumerate_weight(2, 3) == ZERO
    assert enumerate_outcomes(2, 3) == []
    with pytest.raises(BadRange):
        enumerate_weight(-1, 0)


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_weight(DEFAULT_CAP + 1, 1)
    with pytest.raises(CapExceeded):
        enumerate_weight(3, 1, cap=2)
    with pytest.raises(CapExceeded):
        enumerate_labeled_weight(4, 2, cap=3)
    assert enumerate_weight(10, 10, cap=10) == ONE


def test_environment_is_left_alone(tmp_path, monkeypatch):
    monkeypatch.setattr(os, "environ", os.environ.copy())
    # conftest already runs every test inside tmp_path
    (tmp_path / ".env").write_text("GENSTIRLING_ORACLE_CAP=2\nUNRELATED_SETTING=1\n", encoding="utf-8")
    monkeypatch.setenv("GENSTIRLING_ORACLE_CAP", "2")
    assert enumerate_weight(3, 1) == A**2 * 2 + A * B * 3 + B**2
    assert len(enumerate_outcomes(3, 1)) == 6
    assert "UNRELATED_SETTING" not in os.environ


def test_single_list_counts_permutations():
    for n in range(1, 9):
        assert enumerate_weight(n, 1).evaluate({"a": 1, "b": 1}) == math.factorial(n)


def test_outcome_json():
    outcome = next(o for o in enumerate_outcomes(3, 1) if o.distribution.lists == ((2, 1, 3),))
    assert outcome.to_json() == {
        "lists": [[2, 1, 3]],
        "weights": ["one", "beta", "alpha"],
        "weight": [{"a": 1, "b": 1, "x": 0, "c": "1"}],
    }


def test_invalid_distribution():
    missing = Distribution(((1,), (3,)), (WeightLetter.ONE, WeightLetter.ONE, WeightLetter.ONE))
    assert not missing.is_valid()
    too_few_openers = Distribution(((1, 2),), (WeightLetter.ONE, WeightLetter.ONE))
    assert not too_few_openers.is_valid()


def test_labeled_model():
    table = build_table(5)
    for n in range(6):
        for k in range(n + 1):
            assert enumerate_labeled_weight(n, k) == raising(B.scale(k), A, n), (n, k)
            nonempty = enumerate_labeled_weight(n, k, nonempty_only=True)
            assert nonempty == explicit_numerator(n, k), (n, k)
            assert nonempty == table.entry(n, k) * MultiPoly.var("b", k) * math.factorial(k), (n, k)
