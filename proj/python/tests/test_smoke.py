from fractions import Fraction

import pytest

import redcyc


def test_two_by_two_law():
    for q in (2, 3, 4, 5):
        rep = redcyc.enumerate_exact(2, 1, q)
        assert Fraction(rep["pi"]["exact"]) == Fraction(1, q * q)
        assert rep["n3"] == str(q)


def test_exact_value_and_bounds():
    rep = redcyc.enumerate_exact(3, 1, 2)
    assert rep["pi"]["exact"] == "13/32"
    assert all(v in ("pass", "vacuous", "not_applicable") for v in rep["verdict"].values())
    b = redcyc.bounds(3, 1, 3)
    assert Fraction(b["theorem_lower"]["exact"]) <= Fraction(41, 243) <= Fraction(b["theorem_upper"]["exact"])


def test_estimate_is_seeded():
    a = redcyc.estimate(4, 2, 3, trials=5000, seed=9, workers=1)
    b = redcyc.estimate(4, 2, 3, trials=5000, seed=9, workers=3)
    assert a == b
    assert a["pi"]["lower"] <= a["pi"]["estimate"] <= a["pi"]["upper"]


def test_budget():
    with pytest.raises(redcyc.BudgetExceeded):
        redcyc.enumerate_exact(6, 3, 3, budget=1000)


def test_matrix_helpers():
    assert redcyc.is_cyclic([[0, 1], [1, 1]], 2)
    assert not redcyc.is_cyclic([[1, 0], [0, 1]], 3)
    assert redcyc.char_poly([[1, 0], [0, 1]], 3) == [1, 1, 1]
    assert redcyc.min_poly([[1, 0], [0, 1]], 3) == [2, 1]
    with pytest.raises(ValueError):
        redcyc.is_cyclic([[0, 1]], 2)


def test_counting():
    assert redcyc.coprime_count(1, 1, 2) == 2
    assert redcyc.table_series(1)[0] == 1


def test_probe():
    rep = redcyc.probe("2 3\n1,0;1,1\n0,0;2,1\n", max_tries=1000, seed=4)
    assert rep["verdict"] == "reducible_with_witness"
    assert rep["witness"]["dim"] == 1
