"""Integer complexity tables and the compact set K of fractions m/3^k."""
from .complexity import (EXHAUSTIVE, ComplexityTable, CutoffPolicy, build_complexity_table,
                         complexity, eval_expression, largest_with_complexity,
                         parse_expression, solid_numbers, witness_expression)
from .frac3 import Frac3
from .ordinal import Ordinal
from .stability import StableTable, kappa, stable_complexity
from .compact import (KPrefix, Section, build_k_prefix, check_limit_relations,
                      check_self_similarity, derived_prefix, emit_family_tail,
                      enumerate_tu, family_generators, section_at_limit, section_of, sections)
from .modified import ModifiedTable, build_h_prefix, build_modified_table, compare_prefixes

__all__ = [
    "EXHAUSTIVE", "ComplexityTable", "CutoffPolicy", "build_complexity_table", "complexity",
    "eval_expression", "largest_with_complexity", "parse_expression", "solid_numbers",
    "witness_expression", "Frac3", "Ordinal", "StableTable", "kappa", "stable_complexity",
    "KPrefix", "Section", "build_k_prefix", "check_limit_relations",
    "check_self_similarity", "derived_prefix", "emit_family_tail", "enumerate_tu",
    "family_generators", "section_at_limit", "section_of", "sections", "ModifiedTable",
    "build_h_prefix", "build_modified_table", "compare_prefixes",
]
