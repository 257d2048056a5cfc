# Permutation-group engine backing the brute-force oracles.

from core.permgrp.classes import ConjClass, centralizer, conjugacy_class, conjugacy_classes
from core.permgrp.group import (
    PermGroup,
    ResourceBoundExceeded,
    build_group,
    contains,
    order,
    subgroup,
)
from core.permgrp.oracle import (
    brute_alpha,
    brute_struct_const,
    classify_two_generated,
    label_order3_pair,
    pair_orbit_count,
    pair_orbits,
)
from core.permgrp.perm import DegreeMismatchError, Permutation, WordSyntaxError, word_evaluate

__all__ = [
    "ConjClass",
    "DegreeMismatchError",
    "PermGroup",
    "Permutation",
    "ResourceBoundExceeded",
    "WordSyntaxError",
    "brute_alpha",
    "brute_struct_const",
    "build_group",
    "centralizer",
    "classify_two_generated",
    "conjugacy_class",
    "conjugacy_classes",
    "contains",
    "label_order3_pair",
    "order",
    "pair_orbit_count",
    "pair_orbits",
    "subgroup",
    "word_evaluate",
]
