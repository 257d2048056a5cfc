"""Conjugacy classes and centralizers by conjugation orbits."""

from __future__ import annotations

import logging
import string
from collections import defaultdict
from dataclasses import dataclass, field

from core.permgrp.group import PermGroup, ResourceBoundExceeded, build_group
from core.permgrp.perm import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjClass:
    representative: Permutation
    members: tuple[Permutation, ...]
    group_order: int
    name: str = ""
    _member_set: frozenset[Permutation] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def centralizer_order(self) -> int:
        return self.group_order // len(self.members)

    @property
    def element_order(self) -> int:
        return self.representative.order()

    def __contains__(self, p: Permutation) -> bool:
        return p in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _conjugation_orbit(
    x: Permutation, gens: tuple[Permutation, ...], bound: int | None
) -> dict[Permutation, Permutation]:
    """Map each conjugate y of x to some t with x^t = y."""
    identity = Permutation.identity(x.degree)
    inverses = [s.inverse() for s in gens]
    orbit = {x: identity}
    queue = [x]
    for y in queue:
        t = orbit[y]
        for s, s_inv in zip(gens, inverses):
            z = s_inv * y * s
            if z not in orbit:
                orbit[z] = t * s
                queue.append(z)
                if bound is not None and len(orbit) > bound:
                    raise ResourceBoundExceeded("conjugacy class", len(orbit), bound)
    return orbit


def conjugacy_class(g: PermGroup, x: Permutation, bound: int | None = None, name: str = "") -> ConjClass:
    """The class of x, enumerated as the conjugation orbit under the strong generators."""
    if not g.contains(x):
        raise ValueError(f"{x} is not an element of the group")
    orbit = _conjugation_orbit(x, g.strong_generators, bound)
    return ConjClass(representative=x, members=tuple(orbit), group_order=g.order, name=name)


def centralizer(g: PermGroup, x: Permutation, bound: int | None = None) -> PermGroup:
    """C_g(x) from Schreier generators of the conjugation action on the class of x."""
    gens = g.strong_generators
    orbit = _conjugation_orbit(x, gens, bound)
    inverse_of = {}
    stabilizer_gens: list[Permutation] = []
    target = g.order // len(orbit)
    current = build_group([], degree=g.degree)
    for y, t in orbit.items():
        for s in gens:
            z = s.inverse() * y * s
            u = orbit[z]
            if u not in inverse_of:
                inverse_of[u] = u.inverse()
            schreier = t * s * inverse_of[u]
            if schreier.is_identity() or current.contains(schreier):
                continue
            stabilizer_gens.append(schreier)
            current = build_group(stabilizer_gens, degree=g.degree)
            if current.order == target:
                return current
    return current


def _atlas_letters(index: int) -> str:
    letters = string.ascii_uppercase
    out = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        out = letters[rem] + out
    return out


def conjugacy_classes(g: PermGroup, bound: int = 10**7) -> list[ConjClass]:
    """All classes, named by element order plus letters in order of decreasing centralizer."""
    if g.order > bound:
        raise ResourceBoundExceeded("group", g.order, bound)
    gens = g.strong_generators
    assigned: set[Permutation] = set()
    found: list[tuple[Permutation, tuple[Permutation, ...]]] = []
    for x in g.elements():
        if x in assigned:
            continue
        orbit = tuple(_conjugation_orbit(x, gens, None))
        assigned.update(orbit)
        found.append((min(orbit, key=lambda p: p.images), orbit))

    found.sort(key=lambda item: (item[0].order(), len(item[1]), item[0].images))
    counters: dict[int, int] = defaultdict(int)
    classes: list[ConjClass] = []
    for rep, orbit in found:
        n = rep.order()
        name = f"{n}{_atlas_letters(counters[n])}"
        counters[n] += 1
        classes.append(ConjClass(representative=rep, members=orbit, group_order=g.order, name=name))
    logger.debug("Enumerated %d classes of a group of order %d", len(classes), g.order)
    return classes
