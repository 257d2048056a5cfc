# Character tables: validation, structure constants and restrictions via fusion maps.

from core.chartab.constants import (
    BrauerProducts,
    FusionError,
    brauer_inequality,
    identity_fusion,
    inner_product,
    product_classes,
    restriction_inner_product,
    struct_const,
)
from core.chartab.table import (
    CharacterSelectionError,
    CorruptTableError,
    UnknownClassError,
    ValidationReport,
    Violation,
    algebraic_class_orbit,
    class_size,
    class_sizes,
    degree,
    find_character,
    is_principal,
    resolve_class,
    validate,
)

__all__ = [
    "BrauerProducts",
    "CharacterSelectionError",
    "CorruptTableError",
    "FusionError",
    "UnknownClassError",
    "ValidationReport",
    "Violation",
    "algebraic_class_orbit",
    "brauer_inequality",
    "class_size",
    "class_sizes",
    "degree",
    "find_character",
    "identity_fusion",
    "inner_product",
    "is_principal",
    "product_classes",
    "resolve_class",
    "restriction_inner_product",
    "struct_const",
]
