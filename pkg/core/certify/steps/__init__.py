# Decorator-based registry mapping certificate step kinds to their checkers.

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from core.chartab import CharacterSelectionError, FusionError, UnknownClassError
from core.config import AlphaRankConfig
from core.domain import CharacterTable, Claim, FusionMap, MaximalSubgroupData, StepResult

logger = logging.getLogger(__name__)


class ClaimStructureError(ValueError):
    """A claim that cannot be checked at all, as opposed to a step that fails."""


@dataclass
class StepContext:
    table: CharacterTable
    claim: Claim
    index: int = 0
    fusions: Mapping[str, FusionMap] = field(default_factory=dict)
    max_data: Mapping[str, MaximalSubgroupData] = field(default_factory=dict)
    groups: Mapping = field(default_factory=dict)
    config: AlphaRankConfig = field(default_factory=AlphaRankConfig)
    previous: list[StepResult] = field(default_factory=list)

    def fusion(self, name: str) -> FusionMap:
        try:
            return self.fusions[name]
        except KeyError:
            raise ClaimStructureError(f"unknown fusion {name!r}") from None

    def passed_kinds(self) -> set[str]:
        return {r.kind for r in self.previous if r.passed}


@dataclass
class StepInfo:
    kind: str
    description: str
    handler: Callable[..., StepResult]


class StepRegistry:
    def __init__(self):
        self._steps: dict[str, StepInfo] = {}

    def register(self, kind: str, description: str) -> Callable:
        def decorator(fn: Callable[..., StepResult]) -> Callable[..., StepResult]:
            self._steps[kind] = StepInfo(kind=kind, description=description, handler=fn)
            return fn
        return decorator

    def execute(self, step, ctx: StepContext) -> StepResult:
        info = self._steps.get(step.kind)
        if info is None:
            raise ClaimStructureError(f"no checker registered for step kind {step.kind!r}")
        try:
            return info.handler(step, ctx)
        except ClaimStructureError:
            raise
        except (UnknownClassError, FusionError, CharacterSelectionError) as e:
            raise ClaimStructureError(f"step {ctx.index} ({step.kind}): {e}") from e
        except Exception as e:
            logger.exception("Step %d (%s) crashed", ctx.index, step.kind)
            return StepResult(
                index=ctx.index, kind=step.kind, passed=False,
                summary=f"checker error: {e}",
            )

    def describe(self) -> str:
        lines = ["Certificate steps:"]
        for i, (kind, info) in enumerate(self._steps.items(), 1):
            lines.append(f"{i}. {kind} - {info.description}")
        return "\n".join(lines)

    def list_kinds(self) -> list[str]:
        return list(self._steps.keys())

    def __contains__(self, kind: str) -> bool:
        return kind in self._steps

    def __len__(self) -> int:
        return len(self._steps)


# Global registry instance
default_registry = StepRegistry()
