"""Permutations on {1..n} with cycle-notation I/O and generator words.

Products compose left to right: (p * q)(i) = q(p(i)). Points are 1-based in
text and 0-based in `images`.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from math import lcm

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SEP_RE = re.compile(r"[\s,]+")
_EXPONENT_RE = re.compile(r"[+-]?\d+")


class DegreeMismatchError(ValueError):
    pass


class WordSyntaxError(ValueError):
    def __init__(self, message: str, word: str, position: int):
        super().__init__(f"{message} at position {position} in {word!r}")
        self.word = word
        self.position = position


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"images {self.images} do not form a permutation")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse '(1,2,3)(4,5)'; '()' is the identity."""
        stripped = text.strip()
        cycles: list[list[int]] = []
        pos = 0
        for match in _CYCLE_RE.finditer(stripped):
            if stripped[pos:match.start()].strip():
                raise ValueError(f"could not parse permutation {text!r}")
            pos = match.end()
            body = match.group(1).strip()
            if body:
                try:
                    cycles.append([int(x) for x in _SEP_RE.split(body)])
                except ValueError:
                    raise ValueError(f"non-integer point in permutation {text!r}") from None
        if stripped[pos:].strip() or (not cycles and "(" not in stripped):
            raise ValueError(f"could not parse permutation {text!r}")

        largest = max((max(c) for c in cycles), default=0)
        n = largest if degree is None else degree
        if largest > n:
            raise DegreeMismatchError(f"point {largest} exceeds degree {n} in {text!r}")
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            if min(cycle) < 1:
                raise ValueError(f"points are 1-based, got {min(cycle)} in {text!r}")
            if seen.intersection(cycle) or len(set(cycle)) != len(cycle):
                raise ValueError(f"cycles are not disjoint in {text!r}")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 0-based point."""
        return self.images[point]

    def _check(self, other: Permutation) -> None:
        if len(other.images) != len(self.images):
            raise DegreeMismatchError(
                f"degree {len(self.images)} and degree {len(other.images)} permutations"
            )

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check(other)
        q = other.images
        return Permutation._trusted(tuple(q[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, by: Permutation) -> Permutation:
        """by^-1 * self * by."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out: list[tuple[int, ...]] = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(p + 1 for p in cycle))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({str(self)!r}, {self.degree})"


def common_degree(perms: Iterable[Permutation]) -> int | None:
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"permutations of different degrees {sorted(degrees)}")
    return degrees.pop() if degrees else None


# Generator words: products, integer powers and parentheses, e.g. "((ab^2)^3ab)^7".


class _WordParser:
    def __init__(self, gens: Mapping[str, Permutation], word: str, degree: int):
        self.gens = gens
        self.names = sorted(gens, key=len, reverse=True)
        self.word = word
        self.pos = 0
        self.degree = degree

    def error(self, message: str):
        raise WordSyntaxError(message, self.word, self.pos)

    def peek(self) -> str:
        while self.pos < len(self.word) and self.word[self.pos].isspace():
            self.pos += 1
        return self.word[self.pos] if self.pos < len(self.word) else ""

    def exponent(self) -> int:
        self.peek()
        match = _EXPONENT_RE.match(self.word, self.pos)
        if not match:
            self.error("expected an integer exponent")
        self.pos = match.end()
        return int(match.group())

    def atom(self) -> Permutation:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.product()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if ch == "1":
            self.pos += 1
            return Permutation.identity(self.degree)
        for name in self.names:
            if self.word.startswith(name, self.pos):
                self.pos += len(name)
                return self.gens[name]
        if ch:
            self.error("unknown generator name")
        self.error("unexpected end of word")

    def factor(self) -> Permutation:
        value = self.atom()
        while self.peek() == "^":
            self.pos += 1
            value = value ** self.exponent()
        return value

    def product(self) -> Permutation:
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch and ch not in ")":
                value = value * self.factor()
            else:
                return value


def word_evaluate(gens: Mapping[str, Permutation], word: str) -> Permutation:
    """Evaluate a word over named generators; names match longest first."""
    degree = common_degree(gens.values())
    if degree is None:
        raise ValueError("word_evaluate needs at least one generator")
    if not word.strip():
        raise WordSyntaxError("empty word", word, 0)
    parser = _WordParser(gens, word, degree)
    value = parser.product()
    if parser.peek():
        parser.error("unexpected character")
    return value
