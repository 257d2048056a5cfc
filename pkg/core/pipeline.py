"""AlphaRank engine: one facade over the data bundle, the certificate verifier and the oracles.

Lazy loading: the bundle is read on first use, group files and their
conjugacy classes are cached per path.
"""

import logging
import os
import threading

from core.certify import verify_claim
from core.config import DATA_LAYOUT, AlphaRankConfig, data_name
from core.dataio import DataBundle, DataLoadError, GroupFile, LocatedError, load_bundle, load_document, load_group_file
from core.domain import CharacterTable, Claim, FusionMap, Verdict
from core.permgrp import ConjClass, conjugacy_classes

logger = logging.getLogger(__name__)


class AlphaRankEngine:
    # Lazy bundle + caches for tables, group files and their class lists.

    def __init__(self, config: AlphaRankConfig = None):
        self.config = config or AlphaRankConfig()
        self._bundle: DataBundle | None = None
        self._bundle_lock = threading.Lock()
        self._groups: dict[str, GroupFile] = {}
        self._classes: dict[str, list[ConjClass]] = {}
        self._cache_lock = threading.Lock()
        logger.debug("Engine ready (data dir %s)", self.config.data_dir)

    @property
    def bundle(self) -> DataBundle:
        if self._bundle is None:
            with self._bundle_lock:
                if self._bundle is None:
                    logger.info("Loading data bundle from %s", self.config.data_dir)
                    self._bundle = load_bundle(config=self.config)
        return self._bundle

    # Resolution: a CLI argument is either a file path or a bundle stem.

    def _from_bundle(self, kind: str, key: str, items: dict):
        if key in items:
            return items[key]
        raise DataLoadError([LocatedError(
            self.config.get_data_path(kind, key), "/", f"no {kind[:-1]} named {key!r} in the bundle",
        )])

    def table(self, key: str) -> CharacterTable:
        if os.path.isfile(key):
            return load_document("tables", key)
        return self._from_bundle("tables", key, self.bundle.tables)

    def fusion(self, key: str) -> FusionMap:
        if os.path.isfile(key):
            return load_document("fusions", key)
        return self._from_bundle("fusions", key, self.bundle.fusions)

    def group(self, key: str) -> GroupFile:
        if not os.path.isfile(key):
            return self._from_bundle("groups", key, self.bundle.groups)
        path = os.path.abspath(key)
        with self._cache_lock:
            if path not in self._groups:
                try:
                    self._groups[path] = load_group_file(path)
                except OSError as e:
                    raise DataLoadError([LocatedError(path, "line 1", f"cannot read file: {e}")]) from e
            return self._groups[path]

    def classes(self, group_file: GroupFile) -> list[ConjClass]:
        key = group_file.path or group_file.name
        with self._cache_lock:
            cached = self._classes.get(key)
        if cached is None:
            cached = conjugacy_classes(group_file.group, bound=self.config.oracle_bounds()[0])
            logger.debug("Cached %d classes of %s", len(cached), group_file.name)
            with self._cache_lock:
                self._classes.setdefault(key, cached)
        return cached

    # Claims

    def claim_files(self, path: str) -> list[str]:
        """A claim file, or every claim file of a directory in sorted order."""
        suffix = DATA_LAYOUT["claims"][1]
        if os.path.isdir(path):
            return sorted(
                os.path.join(path, name) for name in os.listdir(path) if name.endswith(suffix)
            )
        if not os.path.isfile(path):
            raise DataLoadError([LocatedError(path, "/", "no such claim file or directory")])
        return [path]

    def load_claim(self, path: str) -> tuple[str, Claim]:
        return data_name(path, "claims"), load_document("claims", path)

    def verify(self, path: str) -> list[Verdict]:
        verdicts = []
        for file in self.claim_files(path):
            _, claim = self.load_claim(file)
            verdicts.append(verify_claim(claim, self.bundle, self.config, source=file))
        return verdicts
