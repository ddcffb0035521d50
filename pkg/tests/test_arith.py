import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.exceptions import NotAModule, OutOfRange
from app.services.arith_service import (
    divisor_exponents,
    factorize,
    gcd,
    is_prime,
    lcm,
    pair_from_exponents,
    proper_nontrivial_divisors,
    validate_module_pair,
)


def test_factorize_examples() -> None:
    assert factorize(2).factors == ((2, 1),)
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(9973).factors == ((9973, 1),)
    assert factorize(2 * 9973).s == 2


@pytest.mark.parametrize("k", [1, 0, -7])
def test_factorize_rejects_small_values(k: int) -> None:
    with pytest.raises(OutOfRange):
        factorize(k)


@given(st.integers(min_value=2, max_value=10**6))
def test_factorization_multiplies_back(k: int) -> None:
    f = factorize(k)
    assert math.prod(p**e for p, e in f.factors) == k
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_prime(p) and e >= 1 for p, e in f.factors)


def test_proper_nontrivial_divisors() -> None:
    assert proper_nontrivial_divisors(factorize(12)) == [2, 3, 4, 6]
    assert proper_nontrivial_divisors(factorize(7)) == []
    assert proper_nontrivial_divisors(factorize(36)) == [2, 3, 4, 6, 9, 12, 18]


def test_divisor_count_formula() -> None:
    for m in range(2, 10_001):
        f = factorize(m)
        expected = math.prod(a + 1 for a in f.exponents) - 2
        divisors = proper_nontrivial_divisors(f)
        assert len(divisors) == expected
        assert divisors == sorted(set(divisors))


def test_divisor_exponents_align_with_primes() -> None:
    f = factorize(72)
    for d, exps in divisor_exponents(f):
        assert d == math.prod(p**e for p, e in zip(f.primes, exps))


@given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=1, max_value=10**9))
def test_gcd_lcm_identity(a: int, b: int) -> None:
    assert gcd(a, b) * lcm(a, b) == a * b
    assert lcm(a, b) % a == 0 and lcm(a, b) % b == 0


def test_validate_module_pair_examples() -> None:
    pair = validate_module_pair(36, 6)
    assert pair.alpha == (2, 2)
    assert pair.beta == (1, 1)
    assert pair.support == frozenset({0, 1})

    pair = validate_module_pair(360, 4)
    assert pair.beta == (2, 0, 0)
    assert pair.support == frozenset({0})
    assert str(pair) == "G_4(Z_360)"


def test_validate_module_pair_rejects_non_divisor() -> None:
    with pytest.raises(NotAModule) as excinfo:
        validate_module_pair(12, 5)
    assert (excinfo.value.m, excinfo.value.n) == (12, 5)


@pytest.mark.parametrize("m, n", [(1, 1), (12, 1), (0, 2), (-4, 2)])
def test_validate_module_pair_rejects_out_of_range(m: int, n: int) -> None:
    with pytest.raises(OutOfRange):
        validate_module_pair(m, n)


def test_validate_module_pair_exhaustive() -> None:
    for m in range(2, 301):
        for n in range(2, m + 1):
            if m % n == 0:
                pair = validate_module_pair(m, n)
                assert math.prod(p**b for p, b in zip(pair.primes, pair.beta)) == n
            else:
                with pytest.raises(NotAModule):
                    validate_module_pair(m, n)


def test_pair_from_exponents() -> None:
    pair = pair_from_exponents((2, 3, 5), (1, 2, 1), (1, 1, 0))
    assert (pair.m.value, pair.n.value) == (90, 6)
    assert pair.beta == (1, 1, 0)
