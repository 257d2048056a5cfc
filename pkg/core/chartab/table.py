"""Character-table lookups and exact consistency validation."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import gcd
from typing import Literal

from core.cyclo import CycloValue
from core.domain import CharacterSelector, CharacterTable
from core.utils import prime_factors

logger = logging.getLogger(__name__)


class UnknownClassError(KeyError):
    def __init__(self, name: str, group_name: str):
        super().__init__(name)
        self.name = name
        self.group_name = group_name

    def __str__(self) -> str:
        return f"unknown class {self.name!r} in {self.group_name}"


class CorruptTableError(ValueError):
    pass


class CharacterSelectionError(LookupError):
    pass


# Lookups


def resolve_class(t: CharacterTable, name: str) -> int:
    """Position of a class given its name or one of its aliases."""
    index = t.lookup(name)
    if index is None:
        raise UnknownClassError(name, t.group_name)
    return index


def class_size(t: CharacterTable, c: str | int) -> int:
    index = c if isinstance(c, int) else resolve_class(t, c)
    quotient, remainder = divmod(t.group_order, t.classes[index].centralizer_order)
    if remainder:
        raise CorruptTableError(
            f"{t.group_name}: centralizer order of {t.classes[index].name} does not divide |G|"
        )
    return quotient


def class_sizes(t: CharacterTable) -> list[int]:
    return [class_size(t, i) for i in range(len(t.classes))]


def degree(row: Sequence[CycloValue]) -> int:
    value = row[0].to_rational()
    if value is None or value.denominator != 1:
        raise CorruptTableError(f"character degree {row[0]} is not an integer")
    return int(value)


def _matches(t: CharacterTable, row: Sequence[CycloValue], selector: CharacterSelector) -> bool:
    if row[0] != selector.degree:
        return False
    for constraint in selector.constraints:
        value = row[resolve_class(t, constraint.class_name)]
        if constraint.value is not None:
            if value != constraint.value:
                return False
            continue
        rational = value.to_rational()
        if constraint.sign == "zero":
            ok = not value
        elif rational is None:
            ok = False
        else:
            ok = rational > 0 if constraint.sign == "positive" else rational < 0
        if not ok:
            return False
    return True


def find_character(t: CharacterTable, selector: CharacterSelector) -> int:
    """Index of the unique irreducible matching degree and value constraints."""
    hits = [i for i, row in enumerate(t.characters) if _matches(t, row, selector)]
    if not hits:
        raise CharacterSelectionError(
            f"{t.group_name}: no character of degree {selector.degree} matches the constraints"
        )
    if len(hits) > 1:
        raise CharacterSelectionError(
            f"{t.group_name}: {len(hits)} characters of degree {selector.degree} match "
            f"(rows {hits}); add constraints"
        )
    return hits[0]


def is_principal(row: Sequence[CycloValue]) -> bool:
    return all(v == 1 for v in row)


def algebraic_class_orbit(t: CharacterTable, name: str) -> list[str]:
    """Classes reached from `name` through stored power maps for primes coprime to its order."""
    start = resolve_class(t, name)
    seen = {start}
    frontier = [start]
    while frontier:
        current = t.classes[frontier.pop()]
        for p, target in current.power_maps.items():
            if current.element_order % p == 0:
                continue
            j = resolve_class(t, target)
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    return [t.classes[i].name for i in sorted(seen)]


# Validation


@dataclass(frozen=True)
class Violation:
    severity: Literal["error", "warning"]
    location: str
    message: str

    def __str__(self) -> str:
        return f"[{self.severity}] {self.location}: {self.message}"


@dataclass
class ValidationReport:
    group_name: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def errors(self) -> list[Violation]:
        return [v for v in self.violations if v.severity == "error"]

    @property
    def warnings(self) -> list[Violation]:
        return [v for v in self.violations if v.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return bool(self.violations)

    def error(self, location: str, message: str) -> None:
        self.violations.append(Violation("error", location, message))

    def warning(self, location: str, message: str) -> None:
        self.violations.append(Violation("warning", location, message))


def _check_classes(t: CharacterTable, report: ValidationReport) -> list[int] | None:
    order = t.group_order
    sizes: list[int] = []
    for i, info in enumerate(t.classes):
        where = f"/classes/{i}"
        if order % info.element_order:
            report.error(where, f"{info.name}: element order {info.element_order} does not divide |G| = {order}")
        if order % info.centralizer_order:
            report.error(where, f"{info.name}: centralizer order {info.centralizer_order} does not divide |G|")
        else:
            sizes.append(order // info.centralizer_order)
    if len(sizes) != len(t.classes):
        return None
    if sum(sizes) != order:
        report.error("/classes", f"class sizes sum to {sum(sizes)}, expected {order}")
    first = t.classes[0]
    if first.element_order != 1 or first.centralizer_order != order:
        report.error("/classes/0", "first class must be the identity class")
    return sizes


def _check_power_maps(t: CharacterTable, report: ValidationReport) -> None:
    for i, info in enumerate(t.classes):
        where = f"/classes/{i}"
        for p in prime_factors(info.element_order) if info.element_order > 1 else ():
            if p not in info.power_maps:
                report.warning(where, f"{info.name}: missing {p}-power map")
        for p, target in info.power_maps.items():
            j = t.lookup(target)
            if j is None:
                report.error(where, f"{info.name}: {p}-power map names unknown class {target!r}")
                continue
            m = info.element_order
            expected = m // gcd(m, p)
            if t.classes[j].element_order != expected:
                report.error(
                    where,
                    f"{info.name}: {p}-power map lands in {target} of order {t.classes[j].element_order}, "
                    f"expected order {expected}",
                )
            elif m % p:
                # Coprime power maps act on every row as the Galois automorphism.
                for r, row in enumerate(t.characters):
                    if gcd(p, row[i].conductor) != 1 or row[j] != row[i].galois(p):
                        report.error(
                            f"/characters/{r}",
                            f"value on {target} is not the image of the value on {info.name} "
                            f"under the {p}-power Galois map",
                        )


def _check_characters(t: CharacterTable, sizes: list[int], report: ValidationReport) -> None:
    order = t.group_order
    k = len(t.classes)
    rows = t.characters
    if len(rows) != k:
        report.error("/characters", f"{len(rows)} characters for {k} classes")

    principal = [r for r, row in enumerate(rows) if is_principal(row)]
    if len(principal) != 1:
        report.error("/characters", f"expected exactly one principal character, found {len(principal)}")

    degrees_ok = True
    square_sum = 0
    for r, row in enumerate(rows):
        d = row[0].to_rational()
        if d is None or d.denominator != 1 or d <= 0:
            report.error(f"/characters/{r}", f"degree {row[0]} is not a positive integer")
            degrees_ok = False
            continue
        square_sum += int(d) ** 2
    if degrees_ok and square_sum != order:
        report.error("/characters", f"sum of squared degrees is {square_sum}, expected {order}")

    conjugates = [[v.conjugate() for v in row] for row in rows]

    for r in range(len(rows)):
        for s in range(r, len(rows)):
            total = CycloValue(0)
            for c in range(k):
                total = total + rows[r][c] * conjugates[s][c] * sizes[c]
            expected = order if r == s else 0
            if total != expected:
                report.error(
                    f"/characters/{r} & /characters/{s}",
                    f"row orthogonality fails: sum is {total}, expected {expected}",
                )

    for a in range(k):
        for b in range(a, k):
            total = CycloValue(0)
            for r in range(len(rows)):
                total = total + rows[r][a] * conjugates[r][b]
            expected = t.classes[a].centralizer_order if a == b else 0
            if total != expected:
                report.error(
                    f"/classes/{a} & /classes/{b}",
                    f"column orthogonality fails for ({t.classes[a].name}, {t.classes[b].name}): "
                    f"sum is {total}, expected {expected}",
                )


def validate(t: CharacterTable) -> ValidationReport:
    """Exact check of every table invariant; an empty report means consistent."""
    report = ValidationReport(t.group_name)
    sizes = _check_classes(t, report)
    _check_power_maps(t, report)
    if sizes is not None:
        _check_characters(t, sizes, report)
    logger.debug(
        "Validated %s: %d error(s), %d warning(s)",
        t.group_name, len(report.errors), len(report.warnings),
    )
    return report
