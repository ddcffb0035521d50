"""
Integer arithmetic for the module pair (m, n): factorization by trial
division, divisor enumeration and validation of n | m.
"""

import math
from functools import lru_cache
from itertools import product
from typing import List, Tuple

from app.exceptions import NotAModule, OutOfRange
from app.schemas.arith_schema import Factorization, ModulePair


@lru_cache(maxsize=4096)
def factorize(k: int) -> Factorization:
    """Prime factorization of k >= 2 with increasing primes."""
    if k < 2:
        raise OutOfRange(f"cannot factorize {k}: value must be at least 2")

    factors: List[Tuple[int, int]] = []
    rest = k
    for p in (2, 3):
        exponent = 0
        while rest % p == 0:
            rest //= p
            exponent += 1
        if exponent:
            factors.append((p, exponent))

    # remaining candidates are 6j +- 1
    p = 5
    step = 2
    while p * p <= rest:
        exponent = 0
        while rest % p == 0:
            rest //= p
            exponent += 1
        if exponent:
            factors.append((p, exponent))
        p += step
        step = 6 - step

    if rest > 1:
        factors.append((rest, 1))

    return Factorization(factors=tuple(factors), value=k)


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    return factorize(k).factors == ((k, 1),)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def divisor_exponents(f: Factorization) -> List[Tuple[int, Tuple[int, ...]]]:
    """Every divisor of f.value with its exponent vector, ascending by value."""
    divisors = []
    for exps in product(*(range(e + 1) for e in f.exponents)):
        d = 1
        for p, e in zip(f.primes, exps):
            d *= p**e
        divisors.append((d, tuple(exps)))
    divisors.sort()
    return divisors


def proper_nontrivial_divisors(f: Factorization) -> List[int]:
    """Divisors d of f.value with 1 < d < f.value, strictly increasing."""
    return [d for d, _ in divisor_exponents(f) if 1 < d < f.value]


def validate_module_pair(m: int, n: int) -> ModulePair:
    if m < 2 or n < 2:
        raise OutOfRange(f"m and n must both be at least 2 (got m={m}, n={n})")
    if m % n != 0:
        raise NotAModule(m, n)

    fm = factorize(m)
    fn = factorize(n)
    n_exponents = dict(fn.factors)
    beta = tuple(n_exponents.get(p, 0) for p in fm.primes)
    support = frozenset(i for i, b in enumerate(beta) if b >= 1)

    return ModulePair(m=fm, n=fn, beta=beta, support=support)


def pair_from_exponents(
    primes: Tuple[int, ...], alpha: Tuple[int, ...], beta: Tuple[int, ...]
) -> ModulePair:
    """Instantiate an exponent pattern over concrete primes."""
    m = 1
    n = 1
    for p, a, b in zip(primes, alpha, beta):
        m *= p**a
        n *= p**b
    return validate_module_pair(m, n)
