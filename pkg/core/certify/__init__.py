# Certificates: step checkers and the claim verifier.

from core.certify.steps import ClaimStructureError, StepContext, StepRegistry, default_registry
from core.certify.verifier import compose_bounds, decide_status, replay_verdict, verify_all, verify_claim

__all__ = [
    "ClaimStructureError",
    "StepContext",
    "StepRegistry",
    "compose_bounds",
    "decide_status",
    "default_registry",
    "replay_verdict",
    "verify_all",
    "verify_claim",
]
