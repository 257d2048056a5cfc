# Exact cyclotomic arithmetic: the scalar type of all character values.

from core.cyclo.field import (
    CycloValue,
    add,
    conjugate,
    format_value,
    mul,
    root_of_unity,
    to_rational,
)
from core.cyclo.grammar import CycloSyntaxError, parse_value

__all__ = [
    "CycloSyntaxError",
    "CycloValue",
    "add",
    "conjugate",
    "format_value",
    "mul",
    "parse_value",
    "root_of_unity",
    "to_rational",
]
