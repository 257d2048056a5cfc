"""Permutation groups via a base and strong generating set.

The stabilizer chain is built with the deterministic incremental
Schreier-Sims algorithm: every new generator is sifted, residues extend the
chain, and all Schreier generators of an enlarged level are sifted into the
next level down.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from core.permgrp.perm import DegreeMismatchError, Permutation, common_degree

logger = logging.getLogger(__name__)


class ResourceBoundExceeded(RuntimeError):
    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what} has {size} elements, above the enumeration bound {bound}")
        self.size = size
        self.bound = bound


class _Level:
    """One link G(i) of the stabilizer chain, with G(i+1) = stabilizer of base_point."""

    def __init__(self, degree: int):
        self.degree = degree
        self.base_point: int | None = None
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}
        self.inverses: dict[int, Permutation] = {}
        self.stab: _Level | None = None

    def sift(self, p: Permutation) -> Permutation:
        level: _Level | None = self
        while level is not None and level.base_point is not None:
            inverse = level.inverses.get(p(level.base_point))
            if inverse is None:
                return p
            p = p * inverse
            level = level.stab
        return p

    def _rebuild_orbit(self) -> None:
        identity = Permutation.identity(self.degree)
        transversal = {self.base_point: identity}
        queue = [self.base_point]
        for point in queue:
            u = transversal[point]
            for s in self.gens:
                image = s(point)
                if image not in transversal:
                    transversal[image] = u * s
                    queue.append(image)
        self.transversal = transversal
        self.inverses = {b: u.inverse() for b, u in transversal.items()}

    def add(self, gen: Permutation) -> bool:
        """Extend this level by gen unless it is already a member; True if the group grew."""
        residue = self.sift(gen)
        if residue.is_identity():
            return False
        self._add_nonmember(residue)
        return True

    def _add_nonmember(self, gen: Permutation) -> None:
        if self.base_point is None:
            self.base_point = next(i for i, j in enumerate(gen.images) if i != j)
            self.stab = _Level(self.degree)
        self.gens.append(gen)
        if gen(self.base_point) == self.base_point:
            self.stab._add_nonmember(gen)
        self._rebuild_orbit()
        for point, u in list(self.transversal.items()):
            for s in list(self.gens):
                schreier = u * s * self.inverses[s(point)]
                if not schreier.is_identity():
                    self.stab.add(schreier)


@dataclass(frozen=True, eq=False)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    base: tuple[int, ...]
    strong_generators: tuple[Permutation, ...]
    transversals: tuple[dict[int, Permutation], ...]
    _chain: _Level

    @property
    def order(self) -> int:
        total = 1
        for transversal in self.transversals:
            total *= len(transversal)
        return total

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [sorted(t) for t in self.transversals]

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree {p.degree} permutation tested in a degree {self.degree} group")
        return self._chain.sift(p).is_identity()

    __contains__ = contains

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def elements(self, bound: int | None = None) -> Iterator[Permutation]:
        """Every element exactly once, as products of transversal elements."""
        if bound is not None and self.order > bound:
            raise ResourceBoundExceeded("group", self.order, bound)
        # g = u_r * ... * u_1 with u_i from level i
        levels = [list(t.values()) for t in reversed(self.transversals)]
        identity = self.identity()
        for choice in itertools.product(*levels):
            g = identity
            for u in choice:
                g = g * u
            yield g

    def random_element(self, rng: random.Random) -> Permutation:
        g = self.identity()
        for transversal in reversed(self.transversals):
            g = g * transversal[rng.choice(sorted(transversal))]
        return g


def build_group(gens: Sequence[Permutation] | Iterable[Permutation], degree: int | None = None) -> PermGroup:
    """Schreier-Sims construction; deterministic for a fixed generator sequence."""
    gens = tuple(gens)
    found = common_degree(gens)
    if degree is not None and found is not None and found != degree:
        raise DegreeMismatchError(f"generators of degree {found}, expected {degree}")
    n = found if found is not None else degree
    if n is None:
        raise ValueError("build_group needs generators or an explicit degree")

    chain = _Level(n)
    for g in gens:
        chain.add(g)

    base: list[int] = []
    strong: list[Permutation] = []
    transversals: list[dict[int, Permutation]] = []
    level: _Level | None = chain
    while level is not None and level.base_point is not None:
        base.append(level.base_point)
        transversals.append(level.transversal)
        strong.extend(s for s in level.gens if s not in strong)
        level = level.stab

    group = PermGroup(
        degree=n,
        generators=gens,
        base=tuple(base),
        strong_generators=tuple(strong),
        transversals=tuple(transversals),
        _chain=chain,
    )
    logger.debug("Built group of degree %d: order=%d base=%s", n, group.order, list(base))
    return group


def order(g: PermGroup) -> int:
    return g.order


def contains(g: PermGroup, p: Permutation) -> bool:
    return g.contains(p)


def subgroup(g: PermGroup, gens: Iterable[Permutation]) -> PermGroup:
    """Subgroup of g generated by gens (which must lie in g)."""
    gens = tuple(gens)
    for s in gens:
        if not g.contains(s):
            raise ValueError(f"{s} is not an element of the group")
    return build_group(gens, degree=g.degree)
