"""Brute-force oracles: structure constants, alpha-rank search, pair subgroups."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence

from core.permgrp.classes import ConjClass, centralizer, conjugacy_class
from core.permgrp.group import PermGroup, ResourceBoundExceeded, build_group
from core.permgrp.perm import Permutation

logger = logging.getLogger(__name__)


def brute_struct_const(a: ConjClass, b: ConjClass, c_rep: Permutation) -> int:
    """Count u in a with u^-1 * c_rep in b, i.e. pairs (u, v) with uv = c_rep."""
    return sum(1 for u in a.members if (u.inverse() * c_rep) in b)


def _contains_all(h: PermGroup, gens: Sequence[Permutation]) -> bool:
    return all(h.contains(s) for s in gens)


def brute_alpha(
    g: PermGroup,
    socle: PermGroup,
    x: Permutation,
    max_k: int = 5,
    bound: int = 10**7,
) -> int | None:
    """Least k such that k conjugates of x in g generate a subgroup containing socle.

    Breadth-first over k with the first conjugate fixed to x. A subgroup generated
    by class elements is determined by the class elements it contains, so states
    are deduplicated by that set. Returns None when max_k is exceeded.
    """
    if x.is_identity():
        raise ValueError("brute_alpha needs a nonidentity element")
    target = socle.generators or socle.strong_generators
    cls = conjugacy_class(g, x, bound=bound)

    def key_of(h: PermGroup) -> frozenset[Permutation]:
        return frozenset(y for y in cls.members if h.contains(y))

    start = build_group([x])
    if _contains_all(start, target):
        return 1
    frontier: dict[frozenset[Permutation], tuple[Permutation, ...]] = {key_of(start): (x,)}
    for k in range(2, max_k + 1):
        following: dict[frozenset[Permutation], tuple[Permutation, ...]] = {}
        for key, gens in frontier.items():
            for y in cls.members:
                if y in key:
                    continue
                h = build_group(gens + (y,))
                if _contains_all(h, target):
                    logger.debug("alpha(%s) = %d witnessed by %s", x, k, [str(p) for p in gens + (y,)])
                    return k
                new_key = key_of(h)
                if new_key not in following:
                    following[new_key] = gens + (y,)
        logger.debug("alpha search for %s: %d subgroup(s) generated by %d conjugates", x, len(following), k)
        if not following:
            return None
        frontier = following
    return None


def pair_orbits(
    g: PermGroup,
    cls: ConjClass,
    fixed: Permutation,
    centralizer_gens: Sequence[Permutation] | None = None,
) -> list[list[Permutation]]:
    """Orbits of C_g(fixed) acting by conjugation on the class, in member order."""
    if fixed not in cls:
        raise ValueError(f"{fixed} is not a member of the class")
    if centralizer_gens is None:
        centralizer_gens = centralizer(g, fixed).strong_generators
    pairs = [(s, s.inverse()) for s in centralizer_gens]
    seen: set[Permutation] = set()
    orbits: list[list[Permutation]] = []
    for start in cls.members:
        if start in seen:
            continue
        seen.add(start)
        orbit = [start]
        for y in orbit:
            for s, s_inv in pairs:
                z = s_inv * y * s
                if z not in seen:
                    seen.add(z)
                    orbit.append(z)
        orbits.append(orbit)
    return orbits


def pair_orbit_count(
    g: PermGroup,
    cls: ConjClass,
    fixed: Permutation,
    centralizer_gens: Sequence[Permutation] | None = None,
) -> int:
    return len(pair_orbits(g, cls, fixed, centralizer_gens))


def label_order3_pair(h: PermGroup, bound: int = 10**5) -> str:
    """Isomorphism label of a group generated by two elements of order 3."""
    n = h.order
    if n == 3:
        return "Z3"
    if n == 9:
        return "Z3xZ3"
    if n not in (12, 24, 60):
        return f"other({n})"
    if n > bound:
        raise ResourceBoundExceeded("pair subgroup", n, bound)
    elements = list(h.elements())
    orders = Counter(p.order() for p in elements)
    if n == 12 and orders[2] == 3 and orders[3] == 8:
        return "A4"
    if n == 24 and orders[2] == 1 and orders[3] == 8:
        return "SL2(3)"
    if n == 60:
        central = [z for z in elements if all(z * s == s * z for s in h.generators)]
        abelian = all(a * b == b * a for a in h.generators for b in h.generators)
        if not abelian and len(central) == 1:
            return "A5"
    return f"other({n})"


def classify_two_generated(
    g: PermGroup,
    cls: ConjClass,
    centralizer_gens: Sequence[Permutation] | None = None,
    bound: int = 10**5,
) -> Counter[str]:
    """Label <d1, d2> for d1 the class representative and one d2 per centralizer orbit.

    An orbit whose inverse orbit has already been labelled is skipped, since
    <d1, d2> = <d1, d2^-1>.
    """
    if any(p.order() != 3 for p in cls.members):
        raise ValueError("classify_two_generated needs a class of elements of order 3")
    d1 = cls.representative
    orbits = pair_orbits(g, cls, d1, centralizer_gens)
    where = {p: i for i, orbit in enumerate(orbits) for p in orbit}
    done: set[int] = set()
    labels: Counter[str] = Counter()
    for i, orbit in enumerate(orbits):
        inverse_orbit = where.get(orbit[0].inverse())
        if inverse_orbit is not None and inverse_orbit in done:
            continue
        done.add(i)
        labels[label_order3_pair(build_group([d1, orbit[0]]), bound)] += 1
    logger.info("Classified %d pair orbit(s): %s", sum(labels.values()), dict(labels))
    return labels
