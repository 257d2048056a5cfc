"""Exact elements of cyclotomic fields Q(ζ_n).

A value is stored as a conductor n together with the coefficients
c_0 .. c_{φ(n)-1} of Σ c_k ζ_n^k reduced modulo Φ_n, where n is the
smallest conductor whose field contains the value. Two values are equal
iff these representations are identical. ζ_d is identified with
ζ_n^{n/d} whenever d divides n.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from math import gcd, lcm

from core.cyclo.polys import reduce_mod_cyclotomic
from core.utils import prime_factors

_ZERO = Fraction(0)


def _shrink(n: int, p: int, dense: list[Fraction]) -> list[Fraction] | None:
    """Return the value as a length-(n/p) vector if it lies in Q(ζ_{n/p}), else None."""
    m = n // p
    if m % p == 0:
        # Φ_n(x) = Φ_m(x^p): the power basis splits by exponent residue mod p.
        reduced = reduce_mod_cyclotomic(n, dense)
        if any(c for i, c in enumerate(reduced) if i % p):
            return None
        out = [_ZERO] * m
        for i in range(0, len(reduced), p):
            out[i // p] = reduced[i]
        return out

    # p exactly divides n: Q(ζ_n) = Q(ζ_m)(ζ_p) with basis 1, ζ_p, .., ζ_p^{p-2}.
    # With 1 = u·m + w·p we have ζ_n^e = ζ_p^{u·e} · ζ_m^{w·e}.
    w = pow(p, -1, m) if m > 1 else 0
    u = (1 - w * p) // m
    rows = [[_ZERO] * m for _ in range(p)]
    for e, c in enumerate(dense):
        if c:
            rows[(u * e) % p][(w * e) % m] += c
    last = rows[p - 1]
    for j in range(p - 1):
        row = rows[j]
        for i, c in enumerate(last):
            if c:
                row[i] -= c
    for j in range(1, p - 1):
        if any(reduce_mod_cyclotomic(m, rows[j])):
            return None
    return rows[0]


def _canonicalize(n: int, dense: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    while n > 1:
        for p in prime_factors(n):
            shrunk = _shrink(n, p, dense)
            if shrunk is not None:
                n, dense = n // p, shrunk
                break
        else:
            break
    return n, tuple(reduce_mod_cyclotomic(n, dense))


def _coerce(value) -> CycloValue | None:
    if isinstance(value, CycloValue):
        return value
    if isinstance(value, (int, Fraction)):
        return CycloValue(value)
    return None


class CycloValue:
    # Immutable; safe to share between threads and processes.

    __slots__ = ("_conductor", "_coeffs", "_hash")

    def __init__(self, value: int | Fraction | CycloValue = 0):
        if isinstance(value, CycloValue):
            self._conductor, self._coeffs = value._conductor, value._coeffs
        elif isinstance(value, (int, Fraction)):
            self._conductor, self._coeffs = 1, (Fraction(value),)
        else:
            raise TypeError(f"cannot build a CycloValue from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _trusted(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> CycloValue:
        obj = cls.__new__(cls)
        obj._conductor = conductor
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _from_dense(cls, n: int, dense: list[Fraction]) -> CycloValue:
        return cls._trusted(*_canonicalize(n, dense))

    @classmethod
    def from_terms(cls, conductor: int, terms: Mapping[int, int | Fraction]) -> CycloValue:
        """Build Σ terms[k]·ζ_conductor^k in canonical form."""
        if conductor < 1:
            raise ValueError(f"conductor must be a positive integer, got {conductor}")
        dense = [_ZERO] * conductor
        for k, c in terms.items():
            dense[k % conductor] += Fraction(c)
        return cls._from_dense(conductor, dense)

    @classmethod
    def parse(cls, text: str) -> CycloValue:
        from core.cyclo.grammar import parse_value

        return parse_value(text)

    # Accessors

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def terms(self) -> dict[int, Fraction]:
        """Nonzero canonical coefficients keyed by exponent of ζ_conductor."""
        return {k: c for k, c in enumerate(self._coeffs) if c}

    def is_rational(self) -> bool:
        return self._conductor == 1

    def to_rational(self) -> Fraction | None:
        return self._coeffs[0] if self._conductor == 1 else None

    def is_positive(self) -> bool:
        return self._conductor == 1 and self._coeffs[0] > 0

    def _embedded_terms(self, n: int) -> list[tuple[int, Fraction]]:
        step = n // self._conductor
        return [(k * step, c) for k, c in enumerate(self._coeffs) if c]

    # Galois action

    def galois(self, k: int) -> CycloValue:
        """Apply ζ_n ↦ ζ_n^k; k must be coprime to the conductor."""
        n = self._conductor
        if n == 1:
            return self
        if gcd(k, n) != 1:
            raise ValueError(f"exponent {k} is not coprime to conductor {n}")
        dense = [_ZERO] * n
        for e, c in enumerate(self._coeffs):
            if c:
                dense[(e * k) % n] += c
        return CycloValue._from_dense(n, dense)

    def conjugate(self) -> CycloValue:
        return self.galois(-1)

    # Field operations

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._conductor == 1 and other._conductor == 1:
            return CycloValue(self._coeffs[0] + other._coeffs[0])
        n = lcm(self._conductor, other._conductor)
        dense = [_ZERO] * n
        for e, c in self._embedded_terms(n):
            dense[e] += c
        for e, c in other._embedded_terms(n):
            dense[e] += c
        return CycloValue._from_dense(n, dense)

    __radd__ = __add__

    def __neg__(self) -> CycloValue:
        return CycloValue._trusted(self._conductor, tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def _scaled(self, scalar: Fraction) -> CycloValue:
        if not scalar:
            return CycloValue(0)
        return CycloValue._trusted(self._conductor, tuple(c * scalar for c in self._coeffs))

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._conductor == 1:
            return other._scaled(self._coeffs[0])
        if other._conductor == 1:
            return self._scaled(other._coeffs[0])
        n = lcm(self._conductor, other._conductor)
        dense = [_ZERO] * n
        right = other._embedded_terms(n)
        for i, c in self._embedded_terms(n):
            for j, d in right:
                dense[(i + j) % n] += c * d
        return CycloValue._from_dense(n, dense)

    __rmul__ = __mul__

    def inverse(self) -> CycloValue:
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        if self._conductor == 1:
            return CycloValue(1 / self._coeffs[0])
        # 1/a = (Π_{σ≠1} σ(a)) / N(a), N(a) rational.
        n = self._conductor
        others = CycloValue(1)
        for k in range(2, n):
            if gcd(k, n) == 1:
                others = others * self.galois(k)
        norm = (self * others).to_rational()
        if norm is None:
            raise ArithmeticError(f"norm of {self} did not reduce to a rational")
        return others._scaled(1 / norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other._conductor == 1:
            if not other._coeffs[0]:
                raise ZeroDivisionError("division by zero cyclotomic value")
            return self._scaled(1 / other._coeffs[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    # Comparison and display

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._conductor == other._conductor and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if self._conductor == 1:
                self._hash = hash(self._coeffs[0])
            else:
                self._hash = hash((self._conductor, self._coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __str__(self) -> str:
        return format_value(self)

    def __repr__(self) -> str:
        return f"CycloValue.parse({format_value(self)!r})"


def format_value(a: CycloValue) -> str:
    """Print in the value grammar, e.g. '-1/2+2*E(7)^3'."""
    if a.conductor == 1:
        return str(a.coefficients[0])
    n = a.conductor
    pieces: list[str] = []
    for k, c in a.terms().items():
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            root = f"E({n})" if k == 1 else f"E({n})^{k}"
            body = root if magnitude == 1 else f"{magnitude}*{root}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(pieces)


def root_of_unity(n: int, k: int = 1) -> CycloValue:
    """ζ_n^k in canonical form; k is reduced mod n."""
    if n < 1:
        raise ValueError(f"root_of_unity needs n >= 1, got {n}")
    return CycloValue.from_terms(n, {k % n: 1})


def add(a: CycloValue, b: CycloValue) -> CycloValue:
    return a + b


def mul(a: CycloValue, b: CycloValue) -> CycloValue:
    return a * b


def conjugate(a: CycloValue) -> CycloValue:
    return a.conjugate()


def to_rational(a: CycloValue) -> Fraction | None:
    return a.to_rational()
