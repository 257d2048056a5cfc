# Process-wide cache of cyclotomic polynomials and reduction modulo them.

from __future__ import annotations

import logging
import threading
from fractions import Fraction

from sympy import cyclotomic_poly

logger = logging.getLogger(__name__)

_cache: dict[int, tuple[int, ...]] = {}
_lock = threading.Lock()


def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Return the coefficients of Φ_n, constant term first (monic, degree φ(n))."""
    if n not in _cache:
        with _lock:
            if n not in _cache:
                poly = cyclotomic_poly(n, polys=True)
                _cache[n] = tuple(int(c) for c in reversed(poly.all_coeffs()))
                logger.debug("Cyclotomic polynomial cached: n=%d degree=%d", n, len(_cache[n]) - 1)
    return _cache[n]


def reduce_mod_cyclotomic(n: int, dense: list[Fraction]) -> list[Fraction]:
    """Reduce Σ dense[e]·x^e modulo Φ_n; the result has length φ(n)."""
    phi = cyclotomic_coefficients(n)
    degree = len(phi) - 1
    work = list(dense)
    if len(work) < degree:
        work.extend([Fraction(0)] * (degree - len(work)))
    for e in range(len(work) - 1, degree - 1, -1):
        c = work[e]
        if not c:
            continue
        shift = e - degree
        for i in range(degree):
            if phi[i]:
                work[shift + i] -= c * phi[i]
        work[e] = Fraction(0)
    return work[:degree]
