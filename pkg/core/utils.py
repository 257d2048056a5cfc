"""Shared number-theoretic helpers used across multiple modules."""

from __future__ import annotations

import logging
import re
from functools import lru_cache

from sympy import factorint, primefactors, totient

logger = logging.getLogger(__name__)

# Big integers on disk

_DECIMAL_RE = re.compile(r"^\s*[+-]?\d+\s*$")


def parse_decimal(value) -> int:
    """Accept an int or a decimal string; reject floats and booleans."""
    if isinstance(value, bool):
        raise ValueError("expected a decimal integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL_RE.match(value):
        return int(value)
    raise ValueError(f"expected a decimal integer string, got {value!r}")


# Primes and divisors


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"prime_factors needs a positive integer, got {n}")
    return tuple(int(p) for p in primefactors(n))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(totient(n))


def prime_multiplicity(n: int, p: int) -> int:
    """Exponent of p in n."""
    return int(factorint(n).get(p, 0))


def is_prime(p: int) -> bool:
    return p > 1 and prime_factors(p) == (p,)


def prime_divisors_of(orders) -> set[int]:
    """Union of the prime divisors of a collection of element orders."""
    primes: set[int] = set()
    for order in orders:
        primes.update(prime_factors(order))
    return primes
