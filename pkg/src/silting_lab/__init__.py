"""Graded arcs on a marked torus, their string complexes over the algebra
1 => 2 => 3 with relations x1x2 and y1y2, and exact Hom computations in the
homotopy category of projectives."""

from .arcs import (
    GradedArc, canonicalize, end_point, format_arc, gamma, index_sequence, is_gamma, is_simple,
    parse_arc, reverse, shift_arc,
)
from .bridge import arc_to_complex
from .complexes import ProjComplex, parse_literal, shift, to_literal, validate_complex
from .gfp import FieldPrime
from .homotopy import hom_dim, is_presilting, pair_presilting
from .quiver import GentleAlgebra, lambda_fixed, parse_algebra
from .search import SearchConfig, enumerate_arcs, find_complement, verify_paper

__all__ = [
    "FieldPrime", "GentleAlgebra", "GradedArc", "ProjComplex", "SearchConfig", "arc_to_complex",
    "canonicalize", "end_point", "enumerate_arcs", "find_complement", "format_arc", "gamma",
    "hom_dim", "index_sequence", "is_gamma", "is_presilting", "is_simple", "lambda_fixed",
    "pair_presilting", "parse_algebra", "parse_arc", "parse_literal", "reverse", "shift",
    "shift_arc", "to_literal", "validate_complex", "verify_paper",
]
