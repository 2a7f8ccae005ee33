"""Exact integer number theory: totients, divisors, factorization, orders.

Everything works on plain Python ints, which are arbitrary precision, so
there is no overflow to guard against; the practical ceiling is
trial-division factorization, comfortable up to about 10**12.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "divisors",
    "euler_phi",
    "factorize",
    "is_composite",
    "is_prime",
    "multiplicative_order",
]


def _require_natural(n: int, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((prime, exponent), ...), primes ascending."""
    _require_natural(n)
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p = 5
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 2 if p % 6 == 5 else 4
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def euler_phi(n: int) -> int:
    """Number of integers in [1, n] coprime to n."""
    phi = n
    for p, _ in factorize(n):
        phi -= phi // p
    return phi


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def is_prime(n: int) -> bool:
    """True when n has exactly two divisors; 1 is not prime."""
    factors = factorize(n)
    return len(factors) == 1 and factors[0][1] == 1


def is_composite(n: int) -> bool:
    """True when n > 1 and n is not prime; 1 is neither prime nor composite."""
    return n > 1 and not is_prime(n)


def multiplicative_order(x: int, n: int) -> int:
    """Least t >= 1 with x**t congruent to 1 modulo n.

    Requires gcd(x, n) == 1; the result always divides euler_phi(n).
    """
    _require_natural(x, "x")
    _require_natural(n, "n")
    g = math.gcd(x, n)
    if g != 1:
        raise DomainError(f"multiplicative order needs gcd(x, n) == 1, got gcd = {g}")
    if n == 1:
        return 1
    t = euler_phi(n)
    for p, _ in factorize(t):
        while t % p == 0 and pow(x, t // p, n) == 1:
            t //= p
    return t
