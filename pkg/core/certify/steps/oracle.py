# Exhaustive alpha search on a shipped permutation group, cross-checking the table claims.

from __future__ import annotations

import logging

from core.certify.steps import ClaimStructureError, StepContext
from core.certify.steps import default_registry as registry
from core.chartab import class_size, resolve_class
from core.domain import BruteForceOracle, StepResult
from core.permgrp import ResourceBoundExceeded, brute_alpha, conjugacy_class

logger = logging.getLogger(__name__)


@registry.register("BruteForceOracle", "exhaustive search for alpha in a permutation group")
def check_brute_force(step: BruteForceOracle, ctx: StepContext) -> StepResult:
    if step.group not in ctx.groups:
        raise ClaimStructureError(f"unknown group file {step.group!r}")
    group_file = ctx.groups[step.group]
    g = group_file.group
    if step.socle == "self":
        socle = g
    elif step.socle in ctx.groups:
        socle = ctx.groups[step.socle].group
    else:
        raise ClaimStructureError(f"unknown group file {step.socle!r}")
    x = group_file.element(step.element)
    max_k = step.max_k or ctx.config.max_alpha_k
    bound, _ = ctx.config.oracle_bounds()

    t = ctx.table
    info = t.classes[resolve_class(t, ctx.claim.socle_class)]
    expected_size = class_size(t, info.name)
    values = {"group": step.group, "element": str(x), "max_k": max_k}
    if g.order != t.group_order:
        return _fail(ctx, step, values, f"group {step.group} has order {g.order}, table says {t.group_order}")
    if x.order() != info.element_order:
        return _fail(ctx, step, values, f"{step.element} has order {x.order()}, {info.name} has {info.element_order}")
    try:
        size = conjugacy_class(g, x, bound=bound).size
        if size != expected_size:
            return _fail(ctx, step, values, f"class of {step.element} has size {size}, {info.name} has {expected_size}")
        k = brute_alpha(g, socle, x, max_k=max_k, bound=bound)
    except ResourceBoundExceeded as e:
        return _fail(ctx, step, values, str(e))

    values["alpha"] = k
    if k is None:
        return _fail(ctx, step, values, f"no generating set of at most {max_k} conjugates")
    logger.debug("Brute-force alpha for %s in %s: %d", x, step.group, k)
    return StepResult(
        index=ctx.index, kind=step.kind, passed=True,
        summary=f"exhaustive search in {step.group}: alpha = {k}",
        values=values, lower=k, upper=k,
    )


def _fail(ctx: StepContext, step: BruteForceOracle, values: dict, message: str) -> StepResult:
    return StepResult(index=ctx.index, kind=step.kind, passed=False, summary=message, values=values)
