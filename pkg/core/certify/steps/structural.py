# Steps verified entirely from the character table and maximal-subgroup data.

from __future__ import annotations

from core.certify.steps import ClaimStructureError, StepContext
from core.certify.steps import default_registry as registry
from core.chartab import product_classes, resolve_class, struct_const
from core.domain import (
    ChainGeneration,
    CharacterTable,
    InvolutionLowerBound,
    MaximalSubgroupData,
    StepResult,
    StructConstPositive,
    TranspositionBound,
)
from core.utils import prime_divisors_of


def check_struct_positive(t: CharacterTable, s: StructConstPositive, index: int = 0) -> StepResult:
    m = struct_const(t, s.a, s.b, s.c)
    label = f"m({s.a},{s.b},{s.c}) = {m}"
    if m == 0:
        passed, summary = False, f"{label}, not positive"
    elif s.expected is not None and m != s.expected:
        passed, summary = False, f"{label}, expected {s.expected}"
    else:
        passed, summary = True, label
    return StepResult(
        index=index, kind=s.kind, passed=passed, summary=summary,
        values={"a": s.a, "b": s.b, "c": s.c, "m": m},
    )


def _considered_entries(t: CharacterTable, seed_class: str, m: MaximalSubgroupData):
    seed_outer = t.classes[resolve_class(t, seed_class)].outer
    if t.socle_index == 1 or not seed_outer:
        return list(enumerate(m.entries))
    return [(i, e) for i, e in enumerate(m.entries) if not e.inside_socle]


def check_chain_generation(
    t: CharacterTable, s: ChainGeneration, m: MaximalSubgroupData | None, index: int = 0
) -> StepResult:
    """x, x1, x2, ... generate G when no maximal subgroup meets the chain's requirements.

    Link 1 is m(x, x, c1) > 0 (c1 is a product of two conjugates of x); link i > 1
    is m(x, c_{i-1}, c_i) > 0. Every chain class then lies in the generated subgroup.
    """
    if m is None:
        raise ClaimStructureError(f"missing max data {s.max_data!r}")
    classes = [s.seed_class, *s.intermediate_classes]
    links = []
    failures = []
    previous = s.seed_class
    for c in s.intermediate_classes:
        value = struct_const(t, s.seed_class, previous, c)
        links.append({"a": s.seed_class, "b": previous, "c": c, "m": value})
        if not value:
            failures.append(f"m({s.seed_class},{previous},{c}) = 0")
        previous = c

    orders = [t.classes[resolve_class(t, c)].element_order for c in classes]
    primes = prime_divisors_of(orders)
    for p in s.required_prime_divisors:
        if p not in primes:
            failures.append(f"no chain class has order divisible by {p}")
    for r in s.required_element_orders:
        if not any(o % r == 0 for o in orders):
            failures.append(f"no chain class yields elements of order {r}")

    survivors = []
    for i, entry in _considered_entries(t, s.seed_class, m):
        missing_prime = any(entry.order % p for p in s.required_prime_divisors)
        excluded = any(
            r in entry.excluded_element_orders or entry.order % r
            for r in s.required_element_orders
        )
        if not (missing_prime or excluded):
            survivors.append({"index": i, "description": entry.description})
    for entry in survivors:
        failures.append(f"maximal subgroup {entry['description']} is not excluded")

    upper = len(s.intermediate_classes) + 1
    passed = not failures
    summary = (
        f"chain {' -> '.join(classes)} generates G, alpha <= {upper}"
        if passed else "; ".join(failures)
    )
    return StepResult(
        index=index, kind=s.kind, passed=passed, summary=summary,
        values={
            "links": links,
            "accumulated_primes": sorted(primes),
            "chain_orders": orders,
            "surviving_entries": survivors,
        },
        upper=upper if passed else None,
        axiom=m.citation if passed else None,
    )


def check_transposition_bound(t: CharacterTable, class_name: str, k: int, index: int = 0) -> StepResult:
    products = product_classes(t, class_name, class_name)
    witnesses = {c: t.classes[resolve_class(t, c)].element_order for c in products}
    offenders = sorted(c for c, o in witnesses.items() if o > k)
    passed = not offenders
    summary = (
        f"{class_name}*{class_name} meets only classes of order <= {k}"
        if passed else f"{class_name}*{class_name} reaches {', '.join(offenders)} (order > {k})"
    )
    return StepResult(
        index=index, kind="TranspositionBound", passed=passed, summary=summary,
        values={"class": class_name, "k": k, "witnesses": list(witnesses), "offenders": offenders},
    )


def check_involution_lower_bound(t: CharacterTable, class_name: str, index: int = 0) -> StepResult:
    """Two involutions generate a dihedral group, which cannot contain a nonabelian simple socle."""
    order = t.classes[resolve_class(t, class_name)].element_order
    passed = order == 2
    return StepResult(
        index=index, kind="InvolutionLowerBound", passed=passed,
        summary="involution class, alpha >= 3" if passed else f"{class_name} has order {order}, not 2",
        values={"class": class_name, "element_order": order},
        lower=3 if passed else None,
    )


@registry.register("StructConstPositive", "m(a,b,c) > 0 (optionally equal to an expected value)")
def _struct_positive(step: StructConstPositive, ctx: StepContext) -> StepResult:
    return check_struct_positive(ctx.table, step, ctx.index)


@registry.register("ChainGeneration", "structure-constant chain plus maximal-subgroup exclusion")
def _chain(step: ChainGeneration, ctx: StepContext) -> StepResult:
    return check_chain_generation(ctx.table, step, ctx.max_data.get(step.max_data), ctx.index)


@registry.register("TranspositionBound", "products of two class elements have order <= k")
def _transposition(step: TranspositionBound, ctx: StepContext) -> StepResult:
    return check_transposition_bound(ctx.table, ctx.claim.socle_class, step.k, ctx.index)


@registry.register("InvolutionLowerBound", "alpha >= 3 for involutions")
def _involution(step: InvolutionLowerBound, ctx: StepContext) -> StepResult:
    return check_involution_lower_bound(ctx.table, ctx.claim.socle_class, ctx.index)
