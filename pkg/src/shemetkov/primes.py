"""Trial-division number theory for prime sets and values like 2^k - 1.

Prime sets are plain ``frozenset[int]``; anything that is rendered or iterated
for output goes through ``sorted`` first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Iterable

from .errors import ValidationError


@dataclass(frozen=True)
class Factorization:
    base: int
    factors: dict[int, int] = field(default_factory=dict)

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(self.factors)

    def value(self) -> int:
        out = 1
        for q, e in self.factors.items():
            out *= q**e
        return out


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for d in range(3, isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


def require_prime(m: int, what: str = "value") -> int:
    if isinstance(m, bool) or not isinstance(m, int) or not is_prime(m):
        raise ValidationError(f"{what} {m!r} is not a prime")
    return m


def prime_set_of(values: Iterable[int]) -> frozenset[int]:
    """Validate that every value is prime and return them as a frozenset."""
    return frozenset(require_prime(v) for v in values)


def factorize(m: int) -> Factorization:
    if m < 1:
        raise ValueError(f"cannot factorize {m}")
    factors: dict[int, int] = {}
    rest = m
    d = 2
    while d * d <= rest:
        while rest % d == 0:
            factors[d] = factors.get(d, 0) + 1
            rest //= d
        d += 1 if d == 2 else 2
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    return Factorization(m, factors)


def prime_set(m: int) -> frozenset[int]:
    """The set of prime divisors of ``m``."""
    return factorize(m).primes


@lru_cache(maxsize=1 << 16)
def multiplicative_order(a: int, q: int) -> int:
    """Smallest d >= 1 with a^d == 1 (mod q), for a prime q not dividing a."""
    require_prime(q, "modulus")
    if a % q == 0:
        raise ValueError(f"{q} divides {a}; no multiplicative order")
    order = q - 1
    # strip prime factors of q-1 while the power still collapses to 1
    for r in factorize(q - 1).factors:
        while order % r == 0 and pow(a, order // r, q) == 1:
            order //= r
    return order


def divides_mersenne_like(q: int, base: int, k: int) -> bool:
    """True iff q divides base^k - 1, decided without building base^k."""
    return k % multiplicative_order(base, q) == 0


def divides_power_plus_one(q: int, base: int, k: int) -> bool:
    """True iff q divides base^k + 1 (q prime, q not dividing base, k >= 1)."""
    if q == 2:
        return base % 2 == 1
    # for odd q, base^k + 1 and base^k - 1 share no factor q
    return divides_mersenne_like(q, base, 2 * k) and not divides_mersenne_like(q, base, k)


def prime_divisors_within(m: int, pi: Iterable[int]) -> Factorization | None:
    """Divide ``m`` by every prime of ``pi`` with multiplicity.

    Returns the factorization if nothing is left over (every prime divisor of
    ``m`` lies in ``pi``), otherwise ``None``.  ``m`` may be arbitrarily large.
    """
    factors, rest = _divide_out(m, pi)
    if rest != 1:
        return None
    return Factorization(m, factors)


def cofactor_outside(m: int, pi: Iterable[int]) -> int:
    """The part of ``m`` left after removing all primes of ``pi``."""
    return _divide_out(m, pi)[1]


def _divide_out(m: int, pi: Iterable[int]) -> tuple[dict[int, int], int]:
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    factors: dict[int, int] = {}
    rest = m
    for q in sorted(pi):
        if rest == 1:
            break
        e = 0
        while rest % q == 0:
            rest //= q
            e += 1
        if e:
            factors[q] = e
    return factors, rest


def power_divisors_within(
    base: int, k: int, delta: int, pi: Iterable[int]
) -> tuple[Factorization | None, int]:
    """Check that every prime divisor of base^k + delta (delta = +-1) lies in ``pi``.

    Primes of ``pi`` are first filtered by multiplicative order, so only actual
    divisors are used in the big-integer divide-out.  Returns the factorization
    (or ``None``) together with the left-over cofactor.
    """
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    test = divides_mersenne_like if delta == -1 else divides_power_plus_one
    hits = [q for q in pi if base % q and test(q, base, k)]
    m = base**k + delta
    factors, rest = _divide_out(m, hits)
    if rest != 1:
        return None, rest
    return Factorization(m, factors), 1
