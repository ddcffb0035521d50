from typing import FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class Factorization(BaseModel):
    """Prime-exponent form of an integer >= 2, primes strictly increasing."""

    model_config = ConfigDict(frozen=True)

    factors: Tuple[Tuple[int, int], ...]
    value: int

    @model_validator(mode="after")
    def check_factors(self):
        if self.value < 2:
            raise ValueError("value must be at least 2")
        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be strictly increasing")
            if exponent < 1:
                raise ValueError("exponents must be positive")
            if any(prime % q == 0 for q in range(2, int(prime**0.5) + 1)):
                raise ValueError(f"{prime} is not prime")
            product *= prime**exponent
            previous = prime
        if product != self.value:
            raise ValueError(f"factors multiply to {product}, not {self.value}")
        return self

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    @property
    def s(self) -> int:
        return len(self.factors)


class ModulePair(BaseModel):
    """
    The pair (m, n) with n | m that parameterizes G_n(Z_m).

    beta is aligned to m's prime list, zeros included. support holds the
    0-based indices i with beta[i] >= 1.
    """

    model_config = ConfigDict(frozen=True)

    m: Factorization
    n: Factorization
    beta: Tuple[int, ...]
    support: FrozenSet[int]

    @model_validator(mode="after")
    def check_alignment(self):
        if len(self.beta) != self.m.s:
            raise ValueError("beta must be aligned to the primes of m")
        for b, a in zip(self.beta, self.m.exponents):
            if not 0 <= b <= a:
                raise ValueError("beta must satisfy 0 <= beta_i <= alpha_i")
        if self.support != frozenset(i for i, b in enumerate(self.beta) if b >= 1):
            raise ValueError("support must be the indices of nonzero beta")
        return self

    @property
    def alpha(self) -> Tuple[int, ...]:
        return self.m.exponents

    @property
    def primes(self) -> Tuple[int, ...]:
        return self.m.primes

    @property
    def support_size(self) -> int:
        return len(self.support)

    def __str__(self) -> str:
        return f"G_{self.n.value}(Z_{self.m.value})"
