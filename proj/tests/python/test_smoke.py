"""Smoke tests for the python module: the main operations round trip and
agree with frozen values computed by the C++ suites."""

import json

import pytest

import rankmet


def test_construct_and_analyze_simplex():
    code = rankmet.construct("simplex", q=2, m=2, k=2)
    doc = json.loads(code)
    assert doc["n"] == 4
    assert doc["k"] == 2
    report = json.loads(rankmet.analyze(code))
    assert report["d"] == 2
    assert report["one_weight"] is True
    assert report["minimality"]["minimal"] is True
    assert report["weight_distribution"] == [1, 0, 15, 0, 0]


def test_weight_distribution_and_distance():
    code = rankmet.construct("simplex", q=3, m=2, k=2)
    dist = rankmet.weight_distribution(code)
    assert dist[0] == 1
    assert sum(dist) == 3**4
    assert rankmet.min_rank_distance(code) == 2


def test_verify_suites_pass():
    code = rankmet.construct("simplex", q=2, m=2, k=2)
    ok, report = rankmet.verify(code, suite="all")
    assert ok
    checks = json.loads(report)["checks"]
    assert all(c.get("pass", True) for c in checks)


def test_scattered633():
    code = json.loads(rankmet.construct("scattered633"))
    assert code["n"] == 6
    assert code["k"] == 3
    assert rankmet.is_minimal(json.dumps(code), method="all")


def test_search_and_existence():
    assert rankmet.existence_bound(2, 2, 4, 2) == "217"
    result = json.loads(rankmet.search(2, 2, 4, 2, strategy="exhaustive"))
    assert result["found"] is True
    assert result["minimality"]["minimal"] is True
    # determinism of seeded random search
    a = rankmet.search(2, 3, 5, 2, strategy="random", seed=7, trials=40)
    b = rankmet.search(2, 3, 5, 2, strategy="random", seed=7, trials=40)
    assert a == b


def test_scalar_helpers():
    assert rankmet.gaussian_binomial(4, 2, 2) == "35"
    assert rankmet.gaussian_binomial(2, 1, 2) == "3"
    assert rankmet.fq(2, 4, 3, 2, 0, 1) == "184"


def test_error_translation():
    with pytest.raises(rankmet.BudgetExceeded):
        rankmet.search(2, 3, 9, 3, strategy="exhaustive", budget=10)
    with pytest.raises(Exception):
        rankmet.construct("km1m", q=2, m=2, k=3)  # refused: needs m >= 3
