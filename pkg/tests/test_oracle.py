import os
from collections import Counter, defaultdict

import pytest

from core.chartab import class_size, struct_const
from core.config import EXTENDED_BOUND
from core.dataio import load_group_file
from core.permgrp import (
    ConjClass,
    Permutation,
    brute_alpha,
    brute_struct_const,
    build_group,
    classify_two_generated,
    conjugacy_class,
    conjugacy_classes,
    label_order3_pair,
    pair_orbit_count,
    pair_orbits,
)


def perm(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)


def match_classes(table, classes) -> dict[str, ConjClass]:
    """Pair table classes with computed classes by (element order, class size), in order."""
    computed = defaultdict(list)
    for c in classes:
        computed[(c.element_order, c.size)].append(c)
    out = {}
    for i, cls in enumerate(table.classes):
        candidates = computed[(cls.element_order, class_size(table, i))]
        assert candidates, f"no computed class matches {cls.name}"
        out[cls.name] = candidates.pop(0)
    return out


# The (order, size) matching is ambiguous for A5 5A/5B, A4 3A/3B, D8 2B/2C and
# M11 8A/8B, 11A/11B. Every such swap is a symmetry of the structure constants:
# an outer automorphism for the first three, and for M11 the power maps x -> x^17
# (swaps only the 11s) and x -> x^133 (swaps only the 8s).
@pytest.mark.parametrize("name", ["s3", "d8", "a4", "a5", "s5", "m11"])
def test_brute_struct_const_matches_table(tables, groups, name):
    table = tables[name]
    matched = match_classes(table, conjugacy_classes(groups[name].group))
    names = [c.name for c in table.classes]
    for a in names:
        for b in names:
            for c in names:
                brute = brute_struct_const(matched[a], matched[b], matched[c].representative)
                assert brute == struct_const(table, a, b, c), (a, b, c)


# --- alpha search ---


@pytest.mark.parametrize("element,expected", [
    ("(1,2)(3,4)", 3),
    ("(1,2,3)", 2),
    ("(1,2,3,4,5)", 2),
])
def test_alpha_in_a5(groups, element, expected):
    a5 = groups["a5"].group
    assert brute_alpha(a5, a5, perm(element, 5)) == expected


def test_transpositions_over_a5(groups):
    s5, a5 = groups["s5"].group, groups["a5"].group
    assert brute_alpha(s5, a5, perm("(1,2)", 5)) == 4
    assert brute_alpha(s5, a5, perm("(1,2)", 5), max_k=3) is None


def test_alpha_is_monotone_in_max_k(groups):
    s5, a5 = groups["s5"].group, groups["a5"].group
    x = perm("(1,2,3)(4,5)", 5)
    alpha = brute_alpha(s5, a5, x)
    assert alpha is not None
    for k in range(2, 6):
        assert brute_alpha(s5, a5, x, max_k=k) == (alpha if k >= alpha else None)


def test_alpha_of_a_power_is_no_smaller(groups):
    s5, a5 = groups["s5"].group, groups["a5"].group
    x = perm("(1,2,3)(4,5)", 5)
    alpha = brute_alpha(s5, a5, x)
    for k in (2, 3, 4, 5):
        assert alpha <= brute_alpha(s5, a5, x ** k)


def test_alpha_rejects_identity(groups):
    a5 = groups["a5"].group
    with pytest.raises(ValueError):
        brute_alpha(a5, a5, a5.identity())


@pytest.mark.extended
def test_alpha_of_m11_involutions(groups):
    m11 = groups["m11"].group
    x = perm("(3,11)(4,5)(6,10)(7,8)", 11)
    assert x in m11
    assert brute_alpha(m11, m11, x) == 3


@pytest.mark.extended
def test_suz_3a_pairs(config):
    path = config.get_data_path("groups", "suz")
    if not os.path.exists(path):
        pytest.skip("suz.grp not present (Suz on 1782 points, standard generators a, b)")
    suz = load_group_file(path)
    g, t = suz.group, suz.words["t"]
    assert g.order == 448345497600
    assert t.order() == 3
    centralizer_gens = suz.centralizers.get("t")
    assert centralizer_gens, "suz.grp needs a 'centralizer t := ...' line"
    assert build_group(centralizer_gens, degree=g.degree).order == 9797760
    cls = conjugacy_class(g, t, bound=EXTENDED_BOUND)
    assert cls.size == 45760
    assert pair_orbit_count(g, cls, t, centralizer_gens) == 8
    labels = classify_two_generated(g, cls, centralizer_gens)
    assert labels == Counter({"Z3": 1, "Z3xZ3": 1, "A4": 1, "A5": 1, "SL2(3)": 1})


# --- pair orbits ---


def test_pair_orbit_count(groups):
    a5 = groups["a5"].group
    d1 = perm("(1,2,3)", 5)
    cls = conjugacy_class(a5, d1)
    # two fixed points (d1 and its inverse), the other 18 in orbits of size 3
    assert pair_orbit_count(a5, cls, d1) == 8
    assert sorted(len(o) for o in pair_orbits(a5, cls, d1)) == [1, 1] + [3] * 6


def test_pair_orbits_with_supplied_centralizer(groups):
    a5 = groups["a5"].group
    d1 = perm("(1,3,5)", 5)
    cls = conjugacy_class(a5, d1)
    assert pair_orbit_count(a5, cls, d1, groups["a5"].centralizers["b"]) == 8


def test_pair_orbits_need_a_class_member(groups):
    a5 = groups["a5"].group
    cls = conjugacy_class(a5, perm("(1,2,3)", 5))
    with pytest.raises(ValueError):
        pair_orbits(a5, cls, perm("(1,2)(3,4)", 5))


@pytest.mark.parametrize("gens,label", [
    (["(1,2,3)", "(1,2,3)"], "Z3"),
    (["(1,2,3)", "(4,5,6)"], "Z3xZ3"),
    (["(1,2,3)", "(1,2,4)"], "A4"),
    (["(1,2,3)", "(3,4,5)"], "A5"),
])
def test_label_order3_pair(gens, label):
    assert label_order3_pair(build_group([perm(g, 6) for g in gens])) == label


def test_classify_pairs_in_a5(groups):
    a5 = groups["a5"].group
    cls = conjugacy_class(a5, perm("(1,2,3)", 5))
    # 3-cycles sharing two points give A4, sharing one give A5
    assert classify_two_generated(a5, cls) == Counter({"Z3": 1, "A4": 2, "A5": 1})


def test_classify_pairs_in_abelian_group(groups):
    g = groups["z3xz3"].group
    a = groups["z3xz3"].generators["a"]
    others = [p for p in g.elements() if not p.is_identity() and p != a]
    cls = ConjClass(representative=a, members=(a, *others), group_order=g.order)
    assert classify_two_generated(g, cls) == Counter({"Z3": 1, "Z3xZ3": 3})


def test_classify_needs_order3_class(groups):
    a5 = groups["a5"].group
    with pytest.raises(ValueError):
        classify_two_generated(a5, conjugacy_class(a5, perm("(1,2)(3,4)", 5)))


def test_classify_pairs_in_a4(groups):
    a4 = groups["a4"].group
    cls = conjugacy_class(a4, perm("(1,2,3)", 4))
    assert classify_two_generated(a4, cls) == Counter({"Z3": 1, "A4": 1})


def test_pair_orbits_in_s3(groups):
    s3 = groups["s3"].group
    d1 = perm("(1,2,3)", 3)
    assert pair_orbit_count(s3, conjugacy_class(s3, d1), d1) == 2
