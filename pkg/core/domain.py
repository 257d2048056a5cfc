# Pydantic domain models shared across all modules.

from __future__ import annotations

import re
from fractions import Fraction
from typing import Annotated, Any, Literal, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    PrivateAttr,
    field_validator,
    model_validator,
)

from core.cyclo import CycloValue, parse_value
from core.utils import parse_decimal


def _to_cyclo(value) -> CycloValue:
    if isinstance(value, CycloValue):
        return value
    if isinstance(value, bool):
        raise ValueError("a character value cannot be a boolean")
    if isinstance(value, (int, Fraction)):
        return CycloValue(value)
    if isinstance(value, str):
        return parse_value(value)
    raise ValueError(f"unsupported character value {value!r}")


# Decimal strings on disk, Python ints in memory.
BigInt = Annotated[int, BeforeValidator(parse_decimal), PlainSerializer(str, return_type=str)]
PositiveBigInt = Annotated[
    int, BeforeValidator(parse_decimal), Field(gt=0), PlainSerializer(str, return_type=str)
]
Cyclo = Annotated[CycloValue, BeforeValidator(_to_cyclo), PlainSerializer(str, return_type=str)]

DataSource = Literal["shipped", "external"]


class _Document(BaseModel):
    model_config = ConfigDict(
        frozen=True, populate_by_name=True, extra="forbid", arbitrary_types_allowed=True
    )


# Character tables


class ClassInfo(_Document):
    name: str = Field(min_length=1)
    aliases: list[str] = Field(default_factory=list)
    element_order: int = Field(gt=0)
    centralizer_order: PositiveBigInt
    power_maps: dict[int, str] = Field(default_factory=dict)
    outer: bool = False

    @property
    def names(self) -> tuple[str, ...]:
        return (self.name, *self.aliases)


class CharacterTable(_Document):
    schema_version: Literal[1] = Field(alias="schema")
    group_name: str = Field(min_length=1)
    group_order: PositiveBigInt
    socle_index: int = Field(1, gt=0)
    classes: list[ClassInfo] = Field(min_length=1)
    characters: list[list[Cyclo]]

    _index: dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_shape(self) -> CharacterTable:
        width = len(self.classes)
        for i, row in enumerate(self.characters):
            if len(row) != width:
                raise ValueError(f"character {i} has {len(row)} values, expected {width}")
        seen: dict[str, int] = {}
        for i, info in enumerate(self.classes):
            for name in info.names:
                if seen.setdefault(name, i) != i:
                    raise ValueError(f"class name {name!r} is used by classes {seen[name]} and {i}")
        return self

    def model_post_init(self, __context: Any) -> None:
        for i, info in enumerate(self.classes):
            for name in info.names:
                self._index[name] = i

    def lookup(self, name: str) -> int | None:
        """Class position for a name or alias, None when unknown."""
        return self._index.get(name)

    @property
    def socle_order(self) -> int:
        return self.group_order // self.socle_index


# Fusion maps


class FusionClass(_Document):
    name: str = Field(min_length=1)
    size: PositiveBigInt
    element_order: int = Field(gt=0)


class FusionMap(_Document):
    schema_version: Literal[1] = Field(alias="schema")
    ambient: str
    subgroup_name: str = ""
    subgroup_order: PositiveBigInt
    classes: list[FusionClass] = Field(min_length=1)
    assignment: dict[str, str]
    data_source: DataSource = "shipped"

    @model_validator(mode="after")
    def _check_classes(self) -> FusionMap:
        names = [c.name for c in self.classes]
        if len(set(names)) != len(names):
            raise ValueError("subgroup class names must be unique")
        if set(self.assignment) != set(names):
            missing = sorted(set(names) - set(self.assignment))
            extra = sorted(set(self.assignment) - set(names))
            raise ValueError(f"assignment must cover every subgroup class (missing {missing}, unknown {extra})")
        total = sum(c.size for c in self.classes)
        if total != self.subgroup_order:
            raise ValueError(f"subgroup class sizes sum to {total}, expected {self.subgroup_order}")
        return self


# Maximal subgroups


class MaximalSubgroupEntry(_Document):
    description: str
    order: PositiveBigInt
    inside_socle: bool
    excluded_element_orders: list[int] = Field(default_factory=list)

    @field_validator("excluded_element_orders")
    @classmethod
    def _orders_above_one(cls, value: list[int]) -> list[int]:
        if any(o <= 1 for o in value):
            raise ValueError("excluded element orders must be greater than 1")
        return value


class MaximalSubgroupData(_Document):
    schema_version: Literal[1] = Field(alias="schema")
    group_name: str
    entries: list[MaximalSubgroupEntry]
    source: str = ""
    citation: str | None = None
    data_source: DataSource = "shipped"


# Claims and certificate steps


class ValueConstraint(_Document):
    class_name: str = Field(alias="class")
    sign: Literal["positive", "negative", "zero"] | None = None
    value: Cyclo | None = None

    @model_validator(mode="after")
    def _one_condition(self) -> ValueConstraint:
        if (self.sign is None) == (self.value is None):
            raise ValueError("a constraint needs exactly one of 'sign' or 'value'")
        return self


class CharacterSelector(_Document):
    degree: int = Field(gt=0)
    constraints: list[ValueConstraint] = Field(default_factory=list)


class StructConstPositive(_Document):
    kind: Literal["StructConstPositive"]
    a: str
    b: str
    c: str
    expected: BigInt | None = None


class ChainGeneration(_Document):
    kind: Literal["ChainGeneration"]
    seed_class: str
    intermediate_classes: list[str] = Field(min_length=1)
    required_prime_divisors: list[int] = Field(default_factory=list)
    required_element_orders: list[int] = Field(default_factory=list)
    max_data: str


class SpreadAxiom(_Document):
    kind: Literal["SpreadAxiom"]
    p: int = Field(gt=1)
    citation: str = Field(min_length=1)


class BeamableAxiom(_Document):
    kind: Literal["BeamableAxiom"]
    class_name: str = Field(alias="class")
    citation: str = Field(min_length=1)


class BrauerProper(_Document):
    kind: Literal["BrauerProper"]
    character: CharacterSelector
    fusion_a: str
    fusion_b: str
    fusion_ab: str | None = None  # None: A ∩ B is trivial


class BrauerCase(_Document):
    product_class: str
    fusion_a: str


class BrauerCaseAnalysis(_Document):
    kind: Literal["BrauerCaseAnalysis"]
    character: CharacterSelector
    fusion_b: str
    fusion_ab: str | None = None
    cases: list[BrauerCase] = Field(min_length=1)


class InvolutionLowerBound(_Document):
    kind: Literal["InvolutionLowerBound"]


class TranspositionBound(_Document):
    kind: Literal["TranspositionBound"]
    k: int = Field(gt=0)


CONCLUSION_RE = re.compile(r"^\s*alpha\s*(>=|<=|>|<|=)\s*(\d+)\s*$")


class ClassificationAxiom(_Document):
    kind: Literal["ClassificationAxiom"]
    citation: str = Field(min_length=1)
    conclusion: str
    requires: list[str] = Field(default_factory=list)

    @field_validator("conclusion")
    @classmethod
    def _conclusion_form(cls, value: str) -> str:
        if not CONCLUSION_RE.match(value):
            raise ValueError(f"conclusion must look like 'alpha > 3', got {value!r}")
        return value


class BruteForceOracle(_Document):
    kind: Literal["BruteForceOracle"]
    group: str
    socle: str = "self"
    element: str
    max_k: int | None = None


Step = Annotated[
    Union[
        StructConstPositive,
        ChainGeneration,
        SpreadAxiom,
        BeamableAxiom,
        BrauerProper,
        BrauerCaseAnalysis,
        InvolutionLowerBound,
        TranspositionBound,
        ClassificationAxiom,
        BruteForceOracle,
    ],
    Field(discriminator="kind"),
]

AXIOM_KINDS = frozenset({"SpreadAxiom", "BeamableAxiom", "ClassificationAxiom"})


class Claim(_Document):
    schema_version: Literal[1] = Field(alias="schema")
    group: str
    socle_class: str
    asserted_alpha: int | tuple[int, int]
    steps: list[Step]
    description: str = ""
    data_source: DataSource = "shipped"

    @field_validator("asserted_alpha")
    @classmethod
    def _ordered(cls, value):
        if isinstance(value, tuple) and value[0] > value[1]:
            raise ValueError(f"asserted_alpha interval {list(value)} has lower > upper")
        return value

    @property
    def asserted_interval(self) -> tuple[int, int]:
        if isinstance(self.asserted_alpha, tuple):
            return self.asserted_alpha
        return (self.asserted_alpha, self.asserted_alpha)


# Verdicts


class StepResult(_Document):
    index: int
    kind: str
    passed: bool
    summary: str
    values: dict[str, Any] = Field(default_factory=dict)
    lower: int | None = None
    upper: int | None = None
    axiom: str | None = None


VerdictStatus = Literal["verified", "refuted", "incomplete", "skipped"]


class Verdict(_Document):
    schema_version: Literal[1] = Field(1, alias="schema")
    claim: Claim
    source: str = ""
    alpha_lower: int
    alpha_upper: int | None = None  # None: no upper bound established
    verified_steps: list[StepResult] = Field(default_factory=list)
    axioms_assumed: list[str] = Field(default_factory=list)
    status: VerdictStatus
    note: str = ""

    def interval_text(self) -> str:
        if self.alpha_upper is not None and self.alpha_upper == self.alpha_lower:
            return f"alpha = {self.alpha_lower}"
        upper = "inf" if self.alpha_upper is None else str(self.alpha_upper)
        return f"alpha in [{self.alpha_lower}, {upper}]"
