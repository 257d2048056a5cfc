"""Class multiplication coefficients and inner products, all in exact arithmetic.

m(a, b, c) = |G| / (|C(a)| |C(b)|) * sum over chi of chi(a) chi(b) conj(chi(c)) / chi(1)
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from core.chartab.table import (
    CorruptTableError,
    class_size,
    degree,
    resolve_class,
)
from core.cyclo import CycloValue
from core.domain import CharacterTable, FusionClass, FusionMap

logger = logging.getLogger(__name__)


class FusionError(ValueError):
    pass


def _as_integer(value: CycloValue, what: str) -> int:
    rational = value.to_rational()
    if rational is None or rational.denominator != 1:
        raise CorruptTableError(f"{what} evaluates to {value}, not an integer")
    return int(rational)


def struct_const(t: CharacterTable, a: str, b: str, c: str) -> int:
    """Number of pairs (u, v) in a^G x b^G with uv equal to a fixed element of c."""
    i, j, k = resolve_class(t, a), resolve_class(t, b), resolve_class(t, c)
    total = CycloValue(0)
    for row in t.characters:
        if not row[i] or not row[j] or not row[k]:
            continue
        total = total + row[i] * row[j] * row[k].conjugate() / row[0]
    rational = total.to_rational()
    if rational is None:
        raise CorruptTableError(
            f"{t.group_name}: character sum for m({a},{b},{c}) is irrational ({total})"
        )
    factor = Fraction(t.group_order, t.classes[i].centralizer_order * t.classes[j].centralizer_order)
    value = factor * rational
    if value.denominator != 1 or value < 0:
        raise CorruptTableError(
            f"{t.group_name}: m({a},{b},{c}) = {value} is not a nonnegative integer"
        )
    return int(value)


def product_classes(t: CharacterTable, a: str, b: str) -> dict[str, int]:
    """Every class c with m(a, b, c) > 0, mapped to its coefficient, in table order."""
    out: dict[str, int] = {}
    for info in t.classes:
        m = struct_const(t, a, b, info.name)
        if m:
            out[info.name] = m
    logger.debug("%s: %s * %s meets %d classes", t.group_name, a, b, len(out))
    return out


def inner_product(t: CharacterTable, chi: Sequence[CycloValue], psi: Sequence[CycloValue]) -> Fraction:
    total = CycloValue(0)
    for index, (x, y) in enumerate(zip(chi, psi, strict=True)):
        if x and y:
            total = total + x * y.conjugate() * class_size(t, index)
    rational = total.to_rational()
    if rational is None:
        raise CorruptTableError(f"{t.group_name}: inner product is irrational ({total})")
    return rational / t.group_order


def identity_fusion(t: CharacterTable) -> FusionMap:
    """The group as a subgroup of itself."""
    return FusionMap(
        schema_version=1,
        ambient=t.group_name,
        subgroup_name=t.group_name,
        subgroup_order=t.group_order,
        classes=[
            FusionClass(name=info.name, size=class_size(t, i), element_order=info.element_order)
            for i, info in enumerate(t.classes)
        ],
        assignment={info.name: info.name for info in t.classes},
    )


def restriction_inner_product(t: CharacterTable, chi: Sequence[CycloValue], f: FusionMap) -> int:
    """Multiplicity of the trivial character of the subgroup in the restriction of chi."""
    total = CycloValue(0)
    for sub in f.classes:
        target = f.assignment[sub.name]
        index = resolve_class(t, target)
        ambient_order = t.classes[index].element_order
        if ambient_order != sub.element_order:
            raise FusionError(
                f"subgroup class {sub.name} of order {sub.element_order} fuses to "
                f"{target} of order {ambient_order}"
            )
        total = total + chi[index] * sub.size
    rational = total.to_rational()
    if rational is None:
        raise FusionError(f"restriction sum {total} is irrational")
    value = rational / f.subgroup_order
    if value.denominator != 1 or value < 0:
        raise FusionError(
            f"restriction to {f.subgroup_name or 'subgroup'} gives {value}, not a nonnegative integer"
        )
    return int(value)


@dataclass(frozen=True)
class BrauerProducts:
    a: int
    b: int
    ab: int

    @property
    def holds(self) -> bool:
        return self.a + self.b > self.ab


def brauer_inequality(
    t: CharacterTable,
    chi: Sequence[CycloValue],
    fusion_a: FusionMap,
    fusion_b: FusionMap,
    fusion_ab: FusionMap | None = None,
) -> BrauerProducts:
    """(chi_A, 1_A), (chi_B, 1_B) and (chi_AB, 1_AB); a missing A ∩ B fusion means A ∩ B = 1."""
    a = restriction_inner_product(t, chi, fusion_a)
    b = restriction_inner_product(t, chi, fusion_b)
    ab = degree(chi) if fusion_ab is None else restriction_inner_product(t, chi, fusion_ab)
    return BrauerProducts(a=a, b=b, ab=ab)
