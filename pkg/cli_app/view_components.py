"""Plain-text renderers for CLI reports."""

from collections import Counter

from core.domain import StepResult, Verdict

_STATUS_MARK = {
    "verified": "OK",
    "refuted": "FAIL",
    "incomplete": "INCOMPLETE",
    "skipped": "SKIP",
}


def render_step(r: StepResult) -> str:
    mark = "pass" if r.passed else "FAIL"
    bounds = []
    if r.lower is not None:
        bounds.append(f">= {r.lower}")
    if r.upper is not None:
        bounds.append(f"<= {r.upper}")
    tail = f" [{', '.join(bounds)}]" if bounds else ""
    axiom = f" (assumes {r.axiom})" if r.axiom else ""
    return f"  {r.index:>2}. {mark:<4} {r.kind}: {r.summary}{tail}{axiom}"


def render_verdict(v: Verdict) -> str:
    claim = v.claim
    lo, hi = claim.asserted_interval
    asserted = f"alpha = {lo}" if lo == hi else f"alpha in [{lo}, {hi}]"
    lines = [
        f"[{_STATUS_MARK[v.status]}] {claim.group} {claim.socle_class}: {v.interval_text()} "
        f"(asserted {asserted})",
    ]
    if v.source:
        lines.append(f"  source: {v.source}")
    if claim.description:
        lines.append(f"  {claim.description}")
    lines.extend(render_step(r) for r in v.verified_steps)
    if v.axioms_assumed:
        lines.append(f"  axioms: {'; '.join(v.axioms_assumed)}")
    if v.note:
        lines.append(f"  note: {v.note}")
    return "\n".join(lines)


def render_summary(verdicts: list[Verdict]) -> str:
    counts = Counter(v.status for v in verdicts)
    parts = [f"{counts[s]} {s}" for s in ("verified", "refuted", "incomplete", "skipped") if counts[s]]
    return f"{len(verdicts)} claim(s): {', '.join(parts) or 'none'}"


def render_mapping(title: str, values: dict) -> str:
    width = max((len(str(k)) for k in values), default=0)
    lines = [title]
    lines.extend(f"  {str(k):<{width}}  {v}" for k, v in values.items())
    return "\n".join(lines)
