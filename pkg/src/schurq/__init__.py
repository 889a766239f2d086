"""Exact multiparameter Schur P- and Q-functions in finitely many variables."""

from .polyring import MultiPoly, USeries, is_supersymmetric, parse_poly, poly_eval, render, restrict_last_var
from .shapes import ParameterSequence, StrictPartition, parse_params, parse_partition
from .tableaux import (
    p_classical,
    p_factorial,
    p_multiparam,
    q_classical,
    q_factorial,
    q_multiparam,
    q_via_unmarked,
)
from .pfaffian import SkewMatrix, giambelli, nimmo_eval, pfaffian
from .identities import definition_oracle_eval, interpolate, pieri_check, vanishing_check
from .dimensions import g_formula, g_paths, g_pfaffian
from .series import d_coeffs, one_row_genfun_check, transition_matrix, two_row_relations_check

__all__ = [
    "MultiPoly", "USeries", "is_supersymmetric", "parse_poly", "poly_eval", "render", "restrict_last_var",
    "ParameterSequence", "StrictPartition", "parse_params", "parse_partition",
    "p_classical", "p_factorial", "p_multiparam", "q_classical", "q_factorial", "q_multiparam", "q_via_unmarked",
    "SkewMatrix", "giambelli", "nimmo_eval", "pfaffian",
    "definition_oracle_eval", "interpolate", "pieri_check", "vanishing_check",
    "g_formula", "g_paths", "g_pfaffian",
    "d_coeffs", "one_row_genfun_check", "transition_matrix", "two_row_relations_check",
]
