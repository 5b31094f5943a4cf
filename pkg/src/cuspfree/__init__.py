"""Jacobian syzygies, Tjurina numbers and free / nearly free plane curves."""

from .classify import Classification, classify, tau_formula
from .coverage import coverage, exception_table, profile
from .defect import defect_profile, nu, sat_dim
from .graded import ar_basis, ar_dim, mdr, milnor_dim, tjurina
from .linalg import ExactMatrix, LinalgConfig, kernel, member, rank
from .poly import HomPoly, dim_S, make_context, parse_poly, partial

__all__ = [
    "Classification", "ExactMatrix", "HomPoly", "LinalgConfig", "ar_basis", "ar_dim",
    "classify", "coverage", "defect_profile", "dim_S", "exception_table", "kernel",
    "make_context", "mdr", "member", "milnor_dim", "nu", "parse_poly", "partial",
    "profile", "rank", "sat_dim", "tau_formula", "tjurina",
]
