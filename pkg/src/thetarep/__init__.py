"""Exact character theory of finite groups and theta classification of product-group representations."""

__version__ = "0.1.0"

from .groups import (FiniteGroup, GroupError, GroupTooLarge, Subgroup, direct_product,  # noqa: E402
                     graph_subgroup, quotient, quotient_iso, subgroup)
from .chartable import (CharacterError, ClassFunction, NotACharacter,  # noqa: E402
                        character_table, inner_product, register_groups)
from .functors import decompose, induce, restrict  # noqa: E402
from .theta import classify, multiplicity_matrix, verify_main_theorem  # noqa: E402

__all__ = ["FiniteGroup", "GroupError", "GroupTooLarge", "Subgroup", "direct_product",
           "graph_subgroup", "quotient", "quotient_iso", "subgroup", "CharacterError",
           "ClassFunction", "NotACharacter", "character_table", "inner_product",
           "register_groups", "decompose", "induce", "restrict", "classify",
           "multiplicity_matrix", "verify_main_theorem"]
