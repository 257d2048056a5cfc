"""Group files: permutation generators in cycle notation.

    # comment
    degree := 11
    a := (1,2,3,4,5,6,7,8,9,10,11)
    b := (3,7,11,8)(4,10,5,6)
    word t := ((ab^2)^3ab)^7
    centralizer t := (1,2,3) ; (4,5,6)

Words may use generators and earlier words. Centralizer lines supply
generators of C(name) for groups too large to enumerate.
"""

from __future__ import annotations

import logging
import re
import threading
from dataclasses import dataclass, field

from core.config import data_name
from core.dataio.errors import DataLoadError, LocatedError
from core.permgrp import PermGroup, Permutation, WordSyntaxError, build_group, word_evaluate

logger = logging.getLogger(__name__)

_LINE_RE = re.compile(r"^(?:(word|centralizer)\s+)?([A-Za-z_][A-Za-z0-9_]*)\s*:=\s*(.+)$")


@dataclass
class GroupFile:
    name: str
    degree: int
    generators: dict[str, Permutation]
    words: dict[str, Permutation] = field(default_factory=dict)
    centralizers: dict[str, list[Permutation]] = field(default_factory=dict)
    path: str = ""
    _group: PermGroup | None = field(default=None, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    @property
    def group(self) -> PermGroup:
        if self._group is None:
            with self._lock:
                if self._group is None:
                    logger.debug("Building group %s (degree %d)", self.name, self.degree)
                    self._group = build_group(list(self.generators.values()), degree=self.degree)
        return self._group

    def element(self, text: str) -> Permutation:
        """A named generator or word, or a permutation in cycle notation."""
        key = text.strip()
        if key in self.generators:
            return self.generators[key]
        if key in self.words:
            return self.words[key]
        return Permutation.from_cycles(key, self.degree)

    def centralizer_generators(self, text: str) -> list[Permutation] | None:
        key = text.strip()
        if key in self.centralizers:
            return self.centralizers[key]
        target = self.element(text)
        for name, gens in self.centralizers.items():
            if self.element(name) == target:
                return gens
        return None


def parse_group_text(text: str, name: str, path: str = "<string>") -> GroupFile:
    errors: list[LocatedError] = []
    degree: int | None = None
    generators: dict[str, Permutation] = {}
    words: dict[str, Permutation] = {}
    centralizers: dict[str, list[Permutation]] = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        match = _LINE_RE.match(line)
        if not match:
            errors.append(LocatedError(path, where, f"cannot parse {line!r}"))
            continue
        keyword, key, body = match.groups()
        body = body.strip()
        try:
            if keyword is None and key == "degree":
                if degree is not None:
                    raise ValueError("degree declared twice")
                degree = int(body)
                if degree < 1:
                    raise ValueError("degree must be positive")
            elif degree is None:
                raise ValueError("'degree := n' must come before any permutation")
            elif keyword == "word":
                words[key] = word_evaluate({**generators, **words}, body)
            elif keyword == "centralizer":
                centralizers[key] = [
                    Permutation.from_cycles(part, degree) for part in body.split(";") if part.strip()
                ]
            else:
                if key in generators or key in words:
                    raise ValueError(f"name {key!r} defined twice")
                generators[key] = Permutation.from_cycles(body, degree)
        except (ValueError, WordSyntaxError) as e:
            errors.append(LocatedError(path, where, str(e)))

    if degree is None and not errors:
        errors.append(LocatedError(path, "line 1", "missing 'degree := n' header"))
    if not generators and not errors:
        errors.append(LocatedError(path, "line 1", "no generators declared"))
    if errors:
        raise DataLoadError(errors)
    return GroupFile(
        name=name, degree=degree, generators=generators, words=words,
        centralizers=centralizers, path=path,
    )


def load_group_file(path: str) -> GroupFile:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return parse_group_text(text, data_name(path, "groups"), path)
