"""Claim verification: run certificate steps in order and compose their bounds into a verdict.

Each passed step may contribute a lower bound, an upper bound and a cited axiom.
Bounds are combined by intersection starting from [2, inf], so adding steps
never widens the interval.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import core.certify.steps.axioms  # noqa: F401
import core.certify.steps.brauer  # noqa: F401
import core.certify.steps.oracle  # noqa: F401
import core.certify.steps.structural  # noqa: F401
from core.certify.steps import ClaimStructureError, StepContext, StepRegistry, default_registry
from core.config import AlphaRankConfig
from core.dataio import DataBundle, dump_verdict, missing_tables
from core.domain import Claim, StepResult, Verdict, VerdictStatus

logger = logging.getLogger(__name__)

# Every nonabelian simple group needs at least two generators.
MIN_ALPHA = 2


def _enforce_whitelist(result: StepResult, config: AlphaRankConfig) -> StepResult:
    if not result.passed or result.axiom is None or not config.enforce_citation_whitelist:
        return result
    if result.axiom in config.citation_whitelist:
        return result
    return result.model_copy(update={
        "passed": False,
        "summary": f"citation {result.axiom!r} is not on the whitelist",
        "lower": None,
        "upper": None,
        "axiom": None,
    })


def compose_bounds(results: list[StepResult]) -> tuple[int, int | None]:
    lower, upper = MIN_ALPHA, None
    for r in results:
        if not r.passed:
            continue
        if r.lower is not None:
            lower = max(lower, r.lower)
        if r.upper is not None:
            upper = r.upper if upper is None else min(upper, r.upper)
    return lower, upper


def decide_status(claim: Claim, results: list[StepResult], lower: int, upper: int | None) -> VerdictStatus:
    asserted_lo, asserted_hi = claim.asserted_interval
    if any(not r.passed for r in results):
        return "refuted"
    if upper is not None and lower > upper:
        return "refuted"
    if lower > asserted_hi or (upper is not None and upper < asserted_lo):
        return "refuted"
    if (lower, upper) == (asserted_lo, asserted_hi):
        return "verified"
    return "incomplete"


def _skipped(claim: Claim, source: str, missing: list[str]) -> Verdict:
    return Verdict(
        claim=claim, source=source, alpha_lower=MIN_ALPHA, status="skipped",
        note=f"external table(s) not present: {', '.join(missing)}",
    )


def verify_claim(
    claim: Claim,
    bundle: DataBundle,
    config: AlphaRankConfig | None = None,
    registry: StepRegistry = default_registry,
    source: str = "",
) -> Verdict:
    """Check every step of a claim against the bundle.

    Raises ClaimStructureError when the claim cannot be checked at all (unknown
    class, fusion or group, or a shipped claim whose table is missing).
    """
    cfg = config or AlphaRankConfig()
    missing = missing_tables(bundle, claim)
    if missing:
        if claim.data_source == "external":
            logger.info("Skipping claim %s %s: needs %s", claim.group, claim.socle_class, missing)
            return _skipped(claim, source, missing)
        raise ClaimStructureError(f"claim needs table(s) {', '.join(missing)} which are not loaded")

    table = bundle.tables[claim.group]
    results: list[StepResult] = []
    for i, step in enumerate(claim.steps):
        ctx = StepContext(
            table=table, claim=claim, index=i,
            fusions=bundle.fusions, max_data=bundle.max_data, groups=bundle.groups,
            config=cfg, previous=list(results),
        )
        result = _enforce_whitelist(registry.execute(step, ctx), cfg)
        logger.debug("Step %d %s: %s", i, step.kind, result.summary)
        results.append(result)

    lower, upper = compose_bounds(results)
    status = decide_status(claim, results, lower, upper)
    axioms = list(dict.fromkeys(r.axiom for r in results if r.passed and r.axiom))
    failed = [r.index for r in results if not r.passed]
    verdict = Verdict(
        claim=claim, source=source, alpha_lower=lower, alpha_upper=upper,
        verified_steps=results, axioms_assumed=axioms, status=status,
        note=f"failed step(s): {', '.join(map(str, failed))}" if failed else "",
    )
    logger.info("Claim %s %s: %s (%s)", claim.group, claim.socle_class, status, verdict.interval_text())
    return verdict


def verify_all(bundle: DataBundle, config: AlphaRankConfig | None = None) -> dict[str, Verdict]:
    """Verify every claim in the bundle; results keep the bundle's sorted claim order."""
    cfg = config or AlphaRankConfig()
    names = sorted(bundle.claims)

    def run(name: str) -> Verdict:
        source = bundle.paths.get(("claims", name), name)
        return verify_claim(bundle.claims[name], bundle, cfg, source=source)

    with ThreadPoolExecutor(max_workers=max(1, cfg.load_workers)) as pool:
        verdicts = list(pool.map(run, names))
    return dict(zip(names, verdicts))


def replay_verdict(
    recorded: Verdict, bundle: DataBundle, config: AlphaRankConfig | None = None
) -> tuple[Verdict, list[str]]:
    """Re-run a recorded claim; differences name the verdict fields that changed."""
    fresh = verify_claim(recorded.claim, bundle, config, source=recorded.source)
    differences = []
    for field in ("alpha_lower", "alpha_upper", "status", "axioms_assumed", "note"):
        if getattr(recorded, field) != getattr(fresh, field):
            differences.append(f"{field}: {getattr(recorded, field)!r} -> {getattr(fresh, field)!r}")
    before = {r.index: r for r in recorded.verified_steps}
    after = {r.index: r for r in fresh.verified_steps}
    for index in sorted(before.keys() | after.keys()):
        old, new = before.get(index), after.get(index)
        if old is None or new is None or old.model_dump() != new.model_dump():
            differences.append(f"step {index} differs")
    if not differences and dump_verdict(recorded) != dump_verdict(fresh):
        differences.append("trace text differs")
    return fresh, differences
