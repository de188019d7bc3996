"""Exact graded algebra for ideals containing regular sequences of products
of linear forms, and a constructive monomial realization of their Hilbert
functions."""
from __future__ import annotations

from .egh import (DegreeStep, EghInput, EghResult, VerificationReport, egh_construct,
                  factor_order, lemma20_check, order_factors, slice_hilbert_functions,
                  slice_intersection_dims, theorem21_degree_step, verify)
from .errors import (ArgumentError, DimensionError, EghError, InternalInvariantError,
                     NotRealizableError, ProblemSyntaxError)
from .field import GF, QQ, field_from_spec
from .graded import (GradedBasis, HilbertFunction, IdealPresentation, colon_component,
                     colon_ideal, complete_intersection_hilbert, hilbert_function,
                     ideal_component, quotient_by_linear)
from .lpp import (LppIdeal, MonomialIdeal, kk_bound_check, lexsegment, lpp_realize,
                  squarefree_kk_ideal)
from .macaulay import MacaulayExpansion, macaulay_expansion, macaulay_upper
from .monomial import Monomial, enumerate_monomials, lex_compare
from .poly import Polynomial
from .problem import ProblemFile, parse_problem
from .regseq import (QuadraticSplitSequence, SplitSequence, is_regular_general,
                     is_regular_minors, s1_growth_formula, squarefree_reduce)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError", "DegreeStep", "DimensionError", "EghError", "EghInput", "EghResult",
    "GF", "GradedBasis", "HilbertFunction", "IdealPresentation", "InternalInvariantError",
    "LppIdeal", "MacaulayExpansion", "Monomial", "MonomialIdeal", "NotRealizableError",
    "Polynomial", "ProblemFile", "ProblemSyntaxError", "QQ", "QuadraticSplitSequence",
    "SplitSequence", "VerificationReport", "colon_component", "colon_ideal",
    "complete_intersection_hilbert", "egh_construct", "enumerate_monomials", "factor_order",
    "field_from_spec", "hilbert_function", "ideal_component", "is_regular_general",
    "is_regular_minors", "kk_bound_check", "lemma20_check", "lex_compare", "lexsegment",
    "lpp_realize", "macaulay_expansion", "macaulay_upper", "order_factors", "parse_problem",
    "quotient_by_linear", "s1_growth_formula", "slice_hilbert_functions",
    "slice_intersection_dims", "squarefree_kk_ideal", "squarefree_reduce",
    "theorem21_degree_step", "verify",
]
