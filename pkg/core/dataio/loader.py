"""Data bundle loading: parse every file, validate, then resolve cross-references.

Documents refer to each other by bundle name, the file name without its layout
suffix ("hs2" for tables/hs2.ctab.json).
"""

from __future__ import annotations

import json
import logging
import os
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from pydantic import BaseModel, ValidationError

from core.chartab import ValidationReport, validate
from core.config import DATA_LAYOUT, AlphaRankConfig, data_name, list_data_files
from core.dataio.errors import DataLoadError, LocatedError
from core.dataio.groups import GroupFile, load_group_file
from core.domain import (
    BeamableAxiom,
    BrauerCaseAnalysis,
    BrauerProper,
    BruteForceOracle,
    ChainGeneration,
    CharacterTable,
    Claim,
    FusionMap,
    MaximalSubgroupData,
    StructConstPositive,
)

logger = logging.getLogger(__name__)

_MODELS: dict[str, type[BaseModel]] = {
    "tables": CharacterTable,
    "fusions": FusionMap,
    "claims": Claim,
    "maxdata": MaximalSubgroupData,
}


@dataclass
class DataBundle:
    root: str
    tables: dict[str, CharacterTable] = field(default_factory=dict)
    fusions: dict[str, FusionMap] = field(default_factory=dict)
    groups: dict[str, GroupFile] = field(default_factory=dict)
    max_data: dict[str, MaximalSubgroupData] = field(default_factory=dict)
    claims: dict[str, Claim] = field(default_factory=dict)
    reports: dict[str, ValidationReport] = field(default_factory=dict)
    # (kind, name) -> external tables the document needs that are not present
    unavailable: dict[tuple[str, str], list[str]] = field(default_factory=dict)
    paths: dict[tuple[str, str], str] = field(default_factory=dict)

    def is_available(self, kind: str, name: str) -> bool:
        return (kind, name) not in self.unavailable


def _pointer(loc) -> str:
    return "/" + "/".join(str(part) for part in loc) if loc else "/"


def _parse_document(kind: str, path: str) -> tuple[BaseModel | None, list[LocatedError]]:
    try:
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
    except json.JSONDecodeError as e:
        return None, [LocatedError(path, f"line {e.lineno}", f"invalid JSON: {e.msg}")]
    except OSError as e:
        return None, [LocatedError(path, "/", f"cannot read file: {e}")]
    try:
        return _MODELS[kind].model_validate(raw), []
    except ValidationError as e:
        return None, [
            LocatedError(path, _pointer(err["loc"]), err["msg"]) for err in e.errors()
        ]


def _table_errors(path: str, report: ValidationReport) -> list[LocatedError]:
    return [LocatedError(path, v.location, v.message) for v in report.errors]


def load_document(kind: str, path: str):
    """Parse one JSON document of a layout kind; raise DataLoadError on any problem."""
    model, errors = _parse_document(kind, path)
    if model is not None and kind == "tables":
        errors = _table_errors(path, validate(model))
    if errors:
        raise DataLoadError(errors)
    return model


def load_table(path: str) -> CharacterTable:
    return load_document("tables", path)


def _load_one(kind: str, path: str):
    if kind == "groups":
        try:
            return load_group_file(path), [], None
        except DataLoadError as e:
            return None, e.errors, None
        except OSError as e:
            return None, [LocatedError(path, "line 1", f"cannot read file: {e}")], None
    model, errors = _parse_document(kind, path)
    report = None
    if model is not None and kind == "tables":
        report = validate(model)
        errors = _table_errors(path, report)
    return model, errors, report


# Cross-references


def _claim_class_refs(claim: Claim) -> Iterator[tuple[str, str]]:
    yield "/socle_class", claim.socle_class
    for i, step in enumerate(claim.steps):
        at = f"/steps/{i}"
        if isinstance(step, StructConstPositive):
            yield f"{at}/a", step.a
            yield f"{at}/b", step.b
            yield f"{at}/c", step.c
        elif isinstance(step, ChainGeneration):
            yield f"{at}/seed_class", step.seed_class
            for j, name in enumerate(step.intermediate_classes):
                yield f"{at}/intermediate_classes/{j}", name
        elif isinstance(step, BeamableAxiom):
            yield f"{at}/class", step.class_name
        elif isinstance(step, (BrauerProper, BrauerCaseAnalysis)):
            for j, constraint in enumerate(step.character.constraints):
                yield f"{at}/character/constraints/{j}/class", constraint.class_name
            if isinstance(step, BrauerCaseAnalysis):
                for j, case in enumerate(step.cases):
                    yield f"{at}/cases/{j}/product_class", case.product_class


def _claim_fusion_refs(claim: Claim) -> Iterator[tuple[str, str]]:
    for i, step in enumerate(claim.steps):
        at = f"/steps/{i}"
        if isinstance(step, BrauerProper):
            yield f"{at}/fusion_a", step.fusion_a
            yield f"{at}/fusion_b", step.fusion_b
            if step.fusion_ab:
                yield f"{at}/fusion_ab", step.fusion_ab
        elif isinstance(step, BrauerCaseAnalysis):
            yield f"{at}/fusion_b", step.fusion_b
            if step.fusion_ab:
                yield f"{at}/fusion_ab", step.fusion_ab
            for j, case in enumerate(step.cases):
                yield f"{at}/cases/{j}/fusion_a", case.fusion_a


class _Resolver:
    def __init__(self, bundle: DataBundle):
        self.bundle = bundle
        self.errors: list[LocatedError] = []

    def fail(self, kind: str, name: str, location: str, message: str) -> None:
        self.errors.append(LocatedError(self.bundle.paths[(kind, name)], location, message))

    def table_for(
        self, kind: str, name: str, table: str, location: str, external: bool
    ) -> CharacterTable | None:
        t = self.bundle.tables.get(table)
        if t is None:
            if external:
                self.bundle.unavailable.setdefault((kind, name), []).append(table)
            else:
                self.fail(kind, name, location, f"dangling reference to table {table!r}")
        return t

    def fusion(self, name: str, f: FusionMap) -> None:
        t = self.table_for("fusions", name, f.ambient, "/ambient", f.data_source == "external")
        if t is None:
            return
        for sub in f.classes:
            target = f.assignment[sub.name]
            index = t.lookup(target)
            where = f"/assignment/{sub.name}"
            if index is None:
                self.fail("fusions", name, where, f"unknown class {target!r} in {t.group_name}")
            elif t.classes[index].element_order != sub.element_order:
                self.fail(
                    "fusions", name, where,
                    f"class {sub.name} of order {sub.element_order} fuses to {target} "
                    f"of order {t.classes[index].element_order}",
                )

    def max_data(self, name: str, m: MaximalSubgroupData) -> None:
        t = self.table_for("maxdata", name, m.group_name, "/group_name", m.data_source == "external")
        if t is None:
            return
        for i, entry in enumerate(m.entries):
            if t.group_order % entry.order:
                self.fail("maxdata", name, f"/entries/{i}/order", f"{entry.order} does not divide |G| = {t.group_order}")

    def claim(self, name: str, c: Claim) -> None:
        external = c.data_source == "external"
        t = self.table_for("claims", name, c.group, "/group", external)
        for where, fusion in _claim_fusion_refs(c):
            if fusion in self.bundle.fusions:
                if not self.bundle.is_available("fusions", fusion):
                    missing = self.bundle.unavailable[("fusions", fusion)]
                    self.bundle.unavailable.setdefault(("claims", name), []).extend(missing)
            else:
                self.fail("claims", name, where, f"dangling reference to fusion {fusion!r}")
        for i, step in enumerate(c.steps):
            if isinstance(step, ChainGeneration):
                m = self.bundle.max_data.get(step.max_data)
                if m is None:
                    self.fail("claims", name, f"/steps/{i}/max_data", f"dangling reference to max data {step.max_data!r}")
                elif m.group_name != c.group:
                    self.fail(
                        "claims", name, f"/steps/{i}/max_data",
                        f"max data {step.max_data!r} describes {m.group_name}, not {c.group}",
                    )
            elif isinstance(step, BruteForceOracle):
                for key in (step.group, step.socle):
                    if key != "self" and key not in self.bundle.groups:
                        self.fail("claims", name, f"/steps/{i}", f"dangling reference to group file {key!r}")
        if t is None:
            return
        for where, class_name in _claim_class_refs(c):
            if t.lookup(class_name) is None:
                self.fail("claims", name, where, f"unknown class {class_name!r} in {t.group_name}")


def load_bundle(root: str | None = None, config: AlphaRankConfig | None = None) -> DataBundle:
    """Load and cross-check every document under root; raise DataLoadError listing all problems."""
    cfg = config or AlphaRankConfig()
    if root is not None:
        cfg = replace(cfg, data_dir=root)
    if not os.path.isdir(cfg.data_dir):
        raise DataLoadError([LocatedError(cfg.data_dir, "/", "data directory does not exist")])

    jobs = [(kind, path) for kind in DATA_LAYOUT for path in list_data_files(kind, cfg)]
    with ThreadPoolExecutor(max_workers=max(1, cfg.load_workers)) as pool:
        outcomes = list(pool.map(lambda job: _load_one(*job), jobs))

    bundle = DataBundle(root=cfg.data_dir)
    errors: list[LocatedError] = []
    targets = {
        "tables": bundle.tables,
        "fusions": bundle.fusions,
        "groups": bundle.groups,
        "maxdata": bundle.max_data,
        "claims": bundle.claims,
    }
    for (kind, path), (model, problems, report) in zip(jobs, outcomes):
        name = data_name(path, kind)
        bundle.paths[(kind, name)] = path
        errors.extend(problems)
        if report is not None:
            bundle.reports[name] = report
            for warning in report.warnings:
                logger.warning("%s: %s", path, warning)
        if model is not None and not problems:
            targets[kind][name] = model

    if not errors:
        resolver = _Resolver(bundle)
        for name, f in bundle.fusions.items():
            resolver.fusion(name, f)
        for name, m in bundle.max_data.items():
            resolver.max_data(name, m)
        for name, c in bundle.claims.items():
            resolver.claim(name, c)
        errors.extend(resolver.errors)

    if errors:
        raise DataLoadError(errors)
    absent: set[str] = set()
    for (kind, name), missing in bundle.unavailable.items():
        absent.update(missing)
        logger.debug("%s %s needs unavailable table(s) %s", kind, name, sorted(set(missing)))
    if absent:
        logger.warning(
            "%d document(s) wait on %d external table(s) not present: %s",
            len(bundle.unavailable), len(absent), ", ".join(sorted(absent)),
        )
    logger.info(
        "Bundle loaded from %s: %d tables, %d fusions, %d groups, %d max data, %d claims",
        cfg.data_dir, len(bundle.tables), len(bundle.fusions), len(bundle.groups),
        len(bundle.max_data), len(bundle.claims),
    )
    return bundle


def missing_tables(bundle: DataBundle, claim: Claim) -> list[str]:
    """Tables a claim needs, directly or through its fusions, that the bundle lacks."""
    needed = [claim.group]
    for _, name in _claim_fusion_refs(claim):
        fusion = bundle.fusions.get(name)
        if fusion is not None:
            needed.append(fusion.ambient)
    return sorted({name for name in needed if name not in bundle.tables})
