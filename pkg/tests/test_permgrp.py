import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from core.permgrp import (
    DegreeMismatchError,
    Permutation,
    ResourceBoundExceeded,
    WordSyntaxError,
    build_group,
    centralizer,
    conjugacy_class,
    conjugacy_classes,
    subgroup,
    word_evaluate,
)


def perm(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)


@st.composite
def perms(draw, degree: int = 7):
    return Permutation(tuple(draw(st.permutations(range(degree)))))


# --- permutations ---


@pytest.mark.parametrize("text,degree,images", [
    ("()", 3, (0, 1, 2)),
    ("(1,2,3)", 3, (1, 2, 0)),
    ("(1,2)(3,4)", 5, (1, 0, 3, 2, 4)),
    (" (1, 3) ", None, (2, 1, 0)),
])
def test_from_cycles(text, degree, images):
    assert Permutation.from_cycles(text, degree).images == images


@pytest.mark.parametrize("text", ["1,2", "(1,2", "(1,a)", "(0,1)", "(1,2)(2,3)", "(1,1)"])
def test_from_cycles_rejects(text):
    with pytest.raises(ValueError):
        Permutation.from_cycles(text, 4)


def test_point_beyond_degree():
    with pytest.raises(DegreeMismatchError):
        perm("(1,5)", 4)


def test_products_apply_left_factor_first():
    assert str(perm("(1,2)", 3) * perm("(2,3)", 3)) == "(1,3,2)"
    assert str(perm("(2,3)", 3) * perm("(1,2)", 3)) == "(1,2,3)"


def test_mixed_degrees_rejected():
    with pytest.raises(DegreeMismatchError):
        perm("(1,2)", 3) * perm("(1,2)", 4)


def test_cycles_start_at_smallest_point():
    p = perm("(3,1,2)(5,4)", 6)
    assert p.cycles() == [(1, 2, 3), (4, 5)]
    assert p.order() == 6
    assert p.support() == [0, 1, 2, 3, 4]


@given(perms(), perms(), perms())
def test_product_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perms(), perms())
def test_product_matches_sympy(p, q):
    expected = SymPermutation(list(p.images)) * SymPermutation(list(q.images))
    assert list((p * q).images) == expected.array_form


@given(perms())
def test_inverse_order_and_printing(p):
    assert (p * p.inverse()).is_identity()
    assert (p ** p.order()).is_identity()
    assert p ** -1 == p.inverse()
    assert Permutation.from_cycles(str(p), p.degree) == p


@given(perms(), perms())
def test_conjugate(p, t):
    assert p.conjugate(t) == t.inverse() * p * t
    assert p.conjugate(t).order() == p.order()


# --- words ---


@pytest.fixture
def ab():
    return {"a": perm("(1,2)(3,4)", 5), "b": perm("(1,3,5)", 5)}


@pytest.mark.parametrize("word,expected", [
    ("ab", "(1,2,3,4,5)"),
    ("a*b", "(1,2,3,4,5)"),
    ("(ab)^5", "()"),
    ("b^-1", "(1,5,3)"),
    ("a^2 b", "(1,3,5)"),
    ("1", "()"),
    ("a^0", "()"),
])
def test_word_evaluate(ab, word, expected):
    assert str(word_evaluate(ab, word)) == expected


def test_longest_generator_name_wins():
    gens = {"a": perm("(1,2)", 3), "aa": perm("(1,2,3)", 3)}
    assert word_evaluate(gens, "aa") == perm("(1,2,3)", 3)


@pytest.mark.parametrize("word", ["", "a^", "c", "(ab", "ab)", "a^x"])
def test_word_syntax_errors(ab, word):
    with pytest.raises(WordSyntaxError):
        word_evaluate(ab, word)


# --- groups ---


@pytest.mark.parametrize("name,order", [
    ("s3", 6), ("d8", 8), ("a4", 12), ("a5", 60), ("s5", 120), ("m11", 7920), ("z3xz3", 9),
])
def test_group_orders(groups, name, order):
    g = groups[name].group
    assert g.order == order
    sym = PermutationGroup([SymPermutation(list(p.images)) for p in g.generators])
    assert sym.order() == order


def test_membership(groups):
    a5, s5 = groups["a5"].group, groups["s5"].group
    assert perm("(1,2,3)", 5) in a5
    assert perm("(1,2)", 5) not in a5
    assert perm("(1,2)", 5) in s5
    assert a5.is_subgroup_of(s5)
    with pytest.raises(DegreeMismatchError):
        a5.contains(perm("(1,2)", 6))


@given(perms(degree=5))
def test_membership_matches_enumeration(groups, p):
    a5 = groups["a5"].group
    assert (p in a5) == (p in set(a5.elements()))


def test_m11_membership(groups):
    m11 = groups["m11"].group
    assert all(g in m11 for g in m11.generators)
    # a primitive group containing a transposition is symmetric
    assert perm("(1,2)", 11) not in m11


def test_elements_are_distinct(groups):
    s5 = groups["s5"].group
    elements = list(s5.elements())
    assert len(set(elements)) == len(elements) == 120


def test_elements_respect_bound(groups):
    with pytest.raises(ResourceBoundExceeded):
        next(groups["s5"].group.elements(bound=100))


def test_random_elements_are_members(groups):
    m11 = groups["m11"].group
    rng = random.Random(7)
    assert all(m11.random_element(rng) in m11 for _ in range(50))


def test_build_group_is_deterministic(groups):
    gens = list(groups["m11"].generators.values())
    first, second = build_group(gens), build_group(gens)
    assert first.base == second.base
    assert first.order == second.order == 7920


def test_build_group_checks_degree():
    with pytest.raises(DegreeMismatchError):
        build_group([perm("(1,2)", 3)], degree=4)
    with pytest.raises(ValueError):
        build_group([])
    assert build_group([], degree=4).order == 1


@pytest.mark.parametrize("name", ["s3", "d8", "a5", "m11", "z3xz3"])
def test_basic_orbits(groups, name):
    g = groups[name].group
    orbits = g.basic_orbits
    assert len(orbits) == len(g.base)
    assert all(point in orbit for point, orbit in zip(g.base, orbits))
    assert math.prod(len(orbit) for orbit in orbits) == g.order
    # the first orbit is an orbit of the whole group
    first = set(orbits[0])
    assert {p(x) for p in g.generators for x in first} == first


def test_basic_orbit_of_transitive_group(groups):
    assert groups["m11"].group.basic_orbits[0] == list(range(11))


def test_subgroup(groups):
    s5 = groups["s5"].group
    assert subgroup(s5, [perm("(1,2,3)", 5), perm("(1,2)", 5)]).order == 6
    with pytest.raises(ValueError):
        subgroup(groups["a5"].group, [perm("(1,2)", 5)])


# --- classes ---


@pytest.mark.parametrize("name,count", [
    ("s3", 3), ("d8", 5), ("a4", 4), ("a5", 5), ("s5", 7), ("m11", 10), ("z3xz3", 9),
])
def test_class_counts_and_sizes(groups, name, count):
    g = groups[name].group
    classes = conjugacy_classes(g)
    assert len(classes) == count
    assert sum(c.size for c in classes) == g.order
    assert all(g.order % c.size == 0 for c in classes)


def test_m11_class_names(groups):
    names = [c.name for c in conjugacy_classes(groups["m11"].group)]
    assert names == ["1A", "2A", "3A", "4A", "5A", "6A", "8A", "8B", "11A", "11B"]


def test_class_of_element(groups):
    a5 = groups["a5"].group
    cls = conjugacy_class(a5, perm("(1,2,3)", 5))
    assert cls.size == 20
    assert cls.centralizer_order == 3
    assert cls.element_order == 3
    assert perm("(3,4,5)", 5) in cls
    assert perm("(1,2)(3,4)", 5) not in cls


def test_class_respects_bound(groups):
    with pytest.raises(ResourceBoundExceeded):
        conjugacy_class(groups["m11"].group, perm("(1,2,3,4,5,6,7,8,9,10,11)", 11), bound=100)
    with pytest.raises(ResourceBoundExceeded):
        conjugacy_classes(groups["m11"].group, bound=1000)


@pytest.mark.parametrize("name,element,order", [
    ("a5", "(1,2,3)", 3),
    ("a5", "(1,2)(3,4)", 4),
    ("s5", "(1,2)", 12),
    ("s5", "(1,2,3,4,5)", 5),
    ("m11", "(1,2,3,4,5,6,7,8,9,10,11)", 11),
])
def test_centralizer_order(groups, name, element, order):
    g = groups[name].group
    x = perm(element, g.degree)
    c = centralizer(g, x)
    assert c.order == order
    assert all(s * x == x * s for s in c.generators)
