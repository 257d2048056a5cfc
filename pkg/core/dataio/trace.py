# Verdict traces: JSON export, re-reading and replay.

from __future__ import annotations

import logging

from core.domain import Verdict

logger = logging.getLogger(__name__)


def dump_verdict(v: Verdict) -> str:
    return v.model_dump_json(by_alias=True, indent=2)


def export_trace(v: Verdict, path: str) -> None:
    """Write a verdict as a JSON trace; OSError propagates on I/O failure."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_verdict(v))
        f.write("\n")
    logger.info("Trace written: %s (%s)", path, v.status)


def read_trace(path: str) -> Verdict:
    with open(path, encoding="utf-8") as f:
        return Verdict.model_validate_json(f.read())


def replay_trace(path: str, bundle, config=None) -> tuple[Verdict, list[str]]:
    """Re-verify the claim stored in a trace; returns the new verdict and any differences."""
    from core.certify.verifier import replay_verdict

    recorded = read_trace(path)
    return replay_verdict(recorded, bundle, config)
