# Brauer's trick: (chi_A,1_A) + (chi_B,1_B) > (chi_{A∩B},1_{A∩B}) forces <A, B> < G.

from __future__ import annotations

from collections.abc import Mapping

from core.certify.steps import ClaimStructureError, StepContext
from core.certify.steps import default_registry as registry
from core.chartab import (
    brauer_inequality,
    find_character,
    is_principal,
    product_classes,
    resolve_class,
)
from core.domain import BrauerCaseAnalysis, BrauerProper, CharacterSelector, CharacterTable, FusionMap, StepResult


def _select(t: CharacterTable, selector: CharacterSelector) -> int:
    index = find_character(t, selector)
    if is_principal(t.characters[index]):
        raise ClaimStructureError("Brauer's inequality needs a nonprincipal character")
    return index


def _fusion(fusions: Mapping[str, FusionMap], name: str) -> FusionMap:
    if name not in fusions:
        raise ClaimStructureError(f"unknown fusion {name!r}")
    return fusions[name]


def _images(t: CharacterTable, f: FusionMap) -> dict[str, int]:
    """Ambient class name -> number of subgroup elements fusing into it."""
    counts: dict[str, int] = {}
    sizes = {c.name: c.size for c in f.classes}
    for sub, ambient in f.assignment.items():
        name = t.classes[resolve_class(t, ambient)].name
        counts[name] = counts.get(name, 0) + sizes[sub]
    return counts


def _pair_subgroup_problems(
    t: CharacterTable, socle_class: str, product_class: str, f: FusionMap, label: str
) -> list[str]:
    """A = <x1, x2> holds two elements of the socle class and their product."""
    images = _images(t, f)
    problems = []
    if images.get(socle_class, 0) < 2:
        problems.append(f"{label} has fewer than two elements in {socle_class}")
    if product_class not in images:
        problems.append(f"{label} meets no element of {product_class}")
    # two involutions generate a dihedral group of order 2 * o(x1 x2)
    x_order = t.classes[resolve_class(t, socle_class)].element_order
    m = t.classes[resolve_class(t, product_class)].element_order
    if x_order == 2 and f.subgroup_order != 2 * m:
        problems.append(f"{label} has order {f.subgroup_order}, <x1, x2> has order {2 * m}")
    return problems


def _cyclic_subgroup_problems(t: CharacterTable, socle_class: str, f: FusionMap, label: str) -> list[str]:
    """B = <x3> is cyclic of order o(x) and generated inside the socle class."""
    images = _images(t, f)
    x_order = t.classes[resolve_class(t, socle_class)].element_order
    problems = []
    if f.subgroup_order != x_order:
        problems.append(f"{label} has order {f.subgroup_order}, <x3> has order {x_order}")
    if socle_class not in images:
        problems.append(f"{label} meets no element of {socle_class}")
    return problems


def _intersection_problems(
    t: CharacterTable, f_ab: FusionMap, f_a: FusionMap, f_b: FusionMap, label: str
) -> list[str]:
    problems = []
    if f_a.subgroup_order % f_ab.subgroup_order or f_b.subgroup_order % f_ab.subgroup_order:
        problems.append(f"{label} of order {f_ab.subgroup_order} cannot lie in both A and B")
    a_images, b_images = _images(t, f_a), _images(t, f_b)
    for name, count in _images(t, f_ab).items():
        if count > min(a_images.get(name, 0), b_images.get(name, 0)):
            problems.append(f"{label} has more elements in {name} than A or B")
    return problems


def check_brauer(
    t: CharacterTable, s: BrauerProper, fusions: Mapping[str, FusionMap], index: int = 0
) -> StepResult:
    chi = _select(t, s.character)
    ab = _fusion(fusions, s.fusion_ab) if s.fusion_ab else None
    products = brauer_inequality(
        t, t.characters[chi], _fusion(fusions, s.fusion_a), _fusion(fusions, s.fusion_b), ab
    )
    relation = ">" if products.holds else "<="
    return StepResult(
        index=index, kind=s.kind, passed=products.holds,
        summary=f"{products.a} + {products.b} {relation} {products.ab}",
        values={"character": chi, "a": products.a, "b": products.b, "ab": products.ab},
    )


def check_brauer_case_analysis(
    t: CharacterTable,
    s: BrauerCaseAnalysis,
    socle_class: str,
    fusions: Mapping[str, FusionMap],
    index: int = 0,
) -> StepResult:
    """One Brauer inequality per class met by a product of two elements of the socle class.

    A = <x1, x2> is described by the case fusion, B = <x3> by fusion_b. Exact
    coverage of the product classes (identity excluded) gives alpha >= 4.
    """
    chi = _select(t, s.character)
    row = t.characters[chi]
    identity = t.classes[0].name
    socle = t.classes[resolve_class(t, socle_class)].name
    required = [c for c in product_classes(t, socle, socle) if c != identity]
    supplied: dict[str, str] = {}
    for case in s.cases:
        name = t.classes[resolve_class(t, case.product_class)].name
        if name in supplied:
            raise ClaimStructureError(f"product class {case.product_class} has two cases")
        supplied[name] = case.fusion_a

    missing = [c for c in required if c not in supplied]
    extra = sorted(c for c in supplied if c not in required)
    fusion_b = _fusion(fusions, s.fusion_b)
    fusion_ab = _fusion(fusions, s.fusion_ab) if s.fusion_ab else None
    failures = _cyclic_subgroup_problems(t, socle, fusion_b, s.fusion_b)
    cases = []
    for name in required:
        if name not in supplied:
            continue
        fusion_a = _fusion(fusions, supplied[name])
        shape = _pair_subgroup_problems(t, socle, name, fusion_a, supplied[name])
        if fusion_ab is not None:
            shape += _intersection_problems(t, fusion_ab, fusion_a, fusion_b, s.fusion_ab)
        products = brauer_inequality(t, row, fusion_a, fusion_b, fusion_ab)
        cases.append({
            "product_class": name, "fusion_a": supplied[name],
            "a": products.a, "b": products.b, "ab": products.ab, "holds": products.holds,
            "shape_problems": shape,
        })
        failures.extend(f"case {name}: {problem}" for problem in shape)
        if not products.holds:
            failures.append(f"case {name}: {products.a} + {products.b} <= {products.ab}")
    if missing:
        failures.append(f"no case for product class(es) {', '.join(missing)}")
    if extra:
        failures.append(f"case(s) {', '.join(extra)} are not product classes")

    passed = not failures
    return StepResult(
        index=index, kind=s.kind, passed=passed,
        summary=f"all {len(cases)} cases hold, alpha >= 4" if passed else "; ".join(failures),
        values={
            "character": chi,
            "product_classes": required,
            "missing": missing,
            "extra": extra,
            "cases": cases,
        },
        lower=4 if passed else None,
    )


@registry.register("BrauerProper", "Brauer's inequality for one pair of subgroups")
def _brauer(step: BrauerProper, ctx: StepContext) -> StepResult:
    return check_brauer(ctx.table, step, ctx.fusions, ctx.index)


@registry.register("BrauerCaseAnalysis", "Brauer's inequality for every product class, alpha >= 4")
def _brauer_cases(step: BrauerCaseAnalysis, ctx: StepContext) -> StepResult:
    return check_brauer_case_analysis(ctx.table, step, ctx.claim.socle_class, ctx.fusions, ctx.index)
