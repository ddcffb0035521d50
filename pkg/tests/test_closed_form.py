from itertools import product

import pytest

from app.services.arith_service import factorize, pair_from_exponents, validate_module_pair
from app.services.closed_form_service import (
    DEFAULT_TABLES,
    PLANAR_CASES,
    RING_CASES,
    bound_sites,
    classify_intersection_graph,
    classify_outerplanar,
    classify_planar,
    classify_ring,
    predict,
)
from app.services.sweep_service import module_pairs
from tests.conftest import perturb


@pytest.mark.parametrize(
    "m, n, answer, cases",
    [
        (64, 32, True, [1]),
        (2 * 3**5, 2, False, []),
        (2 * 3 * 5 * 7, 6, False, []),
        (2 * 3**4, 2 * 3**2, True, [5]),
        (36, 6, True, [7]),
        (30, 30, True, [8]),
    ],
)
def test_classify_planar(m: int, n: int, answer: bool, cases) -> None:
    result = classify_planar(validate_module_pair(m, n))
    assert result.answer == answer
    assert result.matched_cases == cases


@pytest.mark.parametrize(
    "m, n, answer, cases",
    [
        (64, 32, False, []),
        (2 * 3**4, 2 * 3**2, False, []),
        (36, 6, True, [7]),
        (18, 18, True, [5]),
        (30, 6, True, [6]),
    ],
)
def test_classify_ring(m: int, n: int, answer: bool, cases) -> None:
    result = classify_ring(validate_module_pair(m, n))
    assert result.answer == answer
    assert result.matched_cases == cases


@pytest.mark.parametrize(
    "m, n, answer, cases",
    [
        (18, 18, True, [5]),
        (32, 32, False, []),
        (30, 30, True, [8]),
    ],
)
def test_classify_outerplanar(m: int, n: int, answer: bool, cases) -> None:
    result = classify_outerplanar(validate_module_pair(m, n))
    assert result.answer == answer
    assert result.matched_cases == cases


def test_classify_intersection_graph() -> None:
    p = classify_intersection_graph(factorize(32))
    assert p.planar and not p.ring and not p.outerplanar

    p = classify_intersection_graph(factorize(18))
    assert p.planar and p.ring and p.outerplanar

    p = classify_intersection_graph(factorize(36))
    assert not (p.planar or p.ring or p.outerplanar)
    assert p.matched_cases == {"planar": [], "ring": [], "outerplanar": []}


def test_classify_intersection_graph_reports_matched_cases() -> None:
    p = classify_intersection_graph(factorize(30))
    assert p.matched_cases == {"planar": [8], "ring": [8], "outerplanar": [8]}
    for m in range(2, 201):
        p = classify_intersection_graph(factorize(m))
        for prop in ("planar", "ring", "outerplanar"):
            assert bool(p.matched_cases[prop]) == getattr(p, prop), (m, prop)


def test_prime_power_thresholds() -> None:
    for a in range(1, 11):
        for b in range(1, a + 1):
            prediction = predict(validate_module_pair(2**a, 2**b))
            assert prediction.planar == (b <= 5)
            assert prediction.ring == (b <= 4)


def _shapes():
    for alpha in [(1,), (4,), (7,), (1, 1), (2, 3), (1, 5), (4, 4), (1, 1, 1), (3, 1, 1), (2, 2, 1), (1, 1, 1, 1)]:
        for beta in product(*(range(a + 1) for a in alpha)):
            if any(beta):
                yield alpha, beta


def test_answers_do_not_depend_on_prime_values() -> None:
    for alpha, beta in _shapes():
        s = len(alpha)
        small = predict(pair_from_exponents((2, 3, 5, 7)[:s], alpha, beta))
        large = predict(pair_from_exponents((11, 13, 17, 19)[:s], alpha, beta))
        assert small == large


def test_answers_do_not_depend_on_prime_order() -> None:
    for alpha, beta in _shapes():
        s = len(alpha)
        ascending = predict(pair_from_exponents((2, 3, 5, 7)[:s], alpha, beta))
        descending = predict(pair_from_exponents((7, 5, 3, 2)[:s], alpha, beta))
        assert ascending == descending


def test_implications_and_corollaries_over_all_small_pairs() -> None:
    for m, n in module_pairs(2000):
        pair = validate_module_pair(m, n)
        prediction = predict(pair)
        assert prediction.outerplanar == prediction.ring
        if prediction.ring:
            assert prediction.planar
        if m == n:
            corollary = classify_intersection_graph(pair.m)
            assert (corollary.planar, corollary.ring, corollary.outerplanar) == (
                prediction.planar,
                prediction.ring,
                prediction.outerplanar,
            )


def test_bound_sites() -> None:
    planar_sites = bound_sites(PLANAR_CASES)
    assert (1, 0, "beta") in planar_sites
    assert (7, 0, "alpha") in planar_sites and (7, 1, "alpha") in planar_sites
    assert all(site[2] in ("alpha", "beta") for site in bound_sites(RING_CASES))


def test_custom_table_changes_the_answer() -> None:
    pair = validate_module_pair(128, 64)
    assert not predict(pair).planar
    loosened = perturb(DEFAULT_TABLES, "planar", 1, 0, "beta", 1)
    assert predict(pair, loosened).planar
    assert predict(pair, loosened).matched_cases["planar"] == [1]
    assert not predict(pair).planar
