"""Exact computation of Rayleigh differences and correlation properties of matroids."""

from .analysis import (
    BALANCED_NECESSARY,
    STRONG,
    SquareCertificate,
    balanced_check,
    binet_cauchy_check,
    central_term,
    coefficient_nonneg_check,
    delta_at,
    delta_table,
    hpp_spot_check,
    independent_pair_check,
    negative_correlation_check,
    rayleigh_diff,
    rayleigh_diff_alt,
    rayleigh_sample_check,
    rz_lc_check,
    transitive_formula_check,
    triple_condition_check,
    verify_square_certificate,
)
from .errors import MatroidError, ParseError
from .fields import FieldMatrix
from .graphic import (
    Graph,
    effective_conductance,
    graphic_matroid,
    monotonicity_check,
    spanning_trees,
    square_certificate,
)
from .isomorphism import has_minor, is_isomorphic
from .matroid import (
    Matroid,
    dual,
    from_bases,
    from_lines_rank3,
    from_matrix,
    from_transversal,
    matroid_minor,
    parallel_expand,
    profile,
    two_sum,
    uniform,
)
from .poly import SparsePoly, basis_poly, format_poly, minor_poly, parse_poly, partition_poly
from .report import POSITIVE, REAL, PropertyReport, SampleDomain, Verdict
from .unipoly import UniPoly, discriminant, real_root_census

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
