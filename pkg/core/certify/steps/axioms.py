# Cited facts: the verifiable part is checked, the rest is recorded as an assumed axiom.

from __future__ import annotations

from core.certify.steps import ClaimStructureError, StepContext
from core.certify.steps import default_registry as registry
from core.chartab import algebraic_class_orbit, resolve_class, struct_const
from core.domain import (
    CONCLUSION_RE,
    BeamableAxiom,
    CharacterTable,
    ClassificationAxiom,
    SpreadAxiom,
    StepResult,
)
from core.utils import is_prime, prime_multiplicity


def check_spread_step(
    t: CharacterTable, s: SpreadAxiom, socle_class: str, socle_order: int, index: int = 0
) -> StepResult:
    """Cyclic Sylow p-subgroup of order p plus x*x^g of order p gives alpha <= 3.

    Only the table part is checked. The existence of the completing element is
    the cited fact.
    """
    if not is_prime(s.p):
        raise ClaimStructureError(f"spread prime {s.p} is not prime")
    failures = []
    multiplicity = prime_multiplicity(socle_order, s.p)
    if multiplicity != 1:
        failures.append(f"{s.p}^{multiplicity} divides the socle order, Sylow is not of order {s.p}")

    witnesses = {}
    for c in t.classes:
        if c.element_order == s.p and not c.outer:
            witnesses[c.name] = struct_const(t, socle_class, socle_class, c.name)
    positive = [name for name, m in witnesses.items() if m]
    # One positive class suffices only when power maps tie all order-p classes together.
    related = bool(witnesses) and set(algebraic_class_orbit(t, next(iter(witnesses)))) >= set(witnesses)
    if not witnesses:
        failures.append(f"no inner class of order {s.p}")
    elif not positive:
        failures.append(f"m({socle_class},{socle_class},c) = 0 for every class c of order {s.p}")
    elif not related and len(positive) < len(witnesses):
        zero = [name for name in witnesses if name not in positive]
        failures.append(f"order-{s.p} classes not related by power maps and m = 0 for {', '.join(zero)}")

    passed = not failures
    return StepResult(
        index=index, kind=s.kind, passed=passed,
        summary=(
            f"Sylow {s.p} cyclic, {socle_class}*{socle_class} meets {', '.join(positive)}, alpha <= 3"
            if passed else "; ".join(failures)
        ),
        values={
            "p": s.p, "multiplicity": multiplicity, "struct_consts": witnesses, "power_related": related,
        },
        upper=3 if passed else None,
        axiom=s.citation if passed else None,
    )


def check_beamable_step(
    t: CharacterTable, s: BeamableAxiom, socle_class: str, previous: list[StepResult], index: int = 0
) -> StepResult:
    target = resolve_class(t, s.class_name)
    x = resolve_class(t, socle_class)
    supported = any(
        r.passed
        and r.kind == "StructConstPositive"
        and resolve_class(t, r.values["a"]) == x
        and resolve_class(t, r.values["b"]) == x
        and resolve_class(t, r.values["c"]) == target
        for r in previous
    )
    name = t.classes[target].name
    return StepResult(
        index=index, kind=s.kind, passed=supported,
        summary=(
            f"{socle_class}*{socle_class} meets {name}, alpha <= 3"
            if supported else f"no earlier m({socle_class},{socle_class},{name}) > 0 step"
        ),
        values={"class": name},
        upper=3 if supported else None,
        axiom=s.citation if supported else None,
    )


def parse_conclusion(conclusion: str) -> tuple[int | None, int | None]:
    """'alpha > 3' -> (4, None); returns (lower, upper) with None for unbounded."""
    match = CONCLUSION_RE.match(conclusion)
    if match is None:
        raise ClaimStructureError(f"unparsable conclusion {conclusion!r}")
    op, n = match.group(1), int(match.group(2))
    return {
        ">": (n + 1, None),
        ">=": (n, None),
        "<": (None, n - 1),
        "<=": (None, n),
        "=": (n, n),
    }[op]


def check_classification_step(s: ClassificationAxiom, passed_kinds: set[str], index: int = 0) -> StepResult:
    lower, upper = parse_conclusion(s.conclusion)
    missing = [k for k in s.requires if k not in passed_kinds]
    passed = not missing
    return StepResult(
        index=index, kind=s.kind, passed=passed,
        summary=s.conclusion.strip() if passed else f"requires {', '.join(missing)} to pass first",
        values={"conclusion": s.conclusion, "requires": list(s.requires)},
        lower=lower if passed else None,
        upper=upper if passed else None,
        axiom=s.citation if passed else None,
    )


@registry.register("SpreadAxiom", "cyclic Sylow p plus cited spread fact, alpha <= 3")
def _spread(step: SpreadAxiom, ctx: StepContext) -> StepResult:
    return check_spread_step(ctx.table, step, ctx.claim.socle_class, ctx.table.socle_order, ctx.index)


@registry.register("BeamableAxiom", "cited completion fact for an earlier product class, alpha <= 3")
def _beamable(step: BeamableAxiom, ctx: StepContext) -> StepResult:
    return check_beamable_step(ctx.table, step, ctx.claim.socle_class, ctx.previous, ctx.index)


@registry.register("ClassificationAxiom", "cited classification theorem")
def _classification(step: ClassificationAxiom, ctx: StepContext) -> StepResult:
    return check_classification_step(step, ctx.passed_kinds(), ctx.index)
