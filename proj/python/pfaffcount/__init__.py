"""Exact counts, oracles and degree bounds for projective Pfaff systems."""

from ._pfaffcount import (
    PreconditionViolated,
    SingularPoint,
    bound_report,
    check_decomposable,
    check_flag,
    check_integrable,
    degree_of_form,
    example_field,
    example_flag,
    h_omega,
    h_tangent,
    oracle_matrix_cols,
    oracle_pfaff_count,
    oracle_vf_count,
    pfaff_count,
    pfaff_count_piecewise,
    slope,
    twisted_form_dim,
    vf_count,
)

__all__ = [
    "PreconditionViolated",
    "SingularPoint",
    "bound_report",
    "check_decomposable",
    "check_flag",
    "check_integrable",
    "degree_of_form",
    "example_field",
    "example_flag",
    "h_omega",
    "h_tangent",
    "oracle_matrix_cols",
    "oracle_pfaff_count",
    "oracle_vf_count",
    "pfaff_count",
    "pfaff_count_piecewise",
    "slope",
    "twisted_form_dim",
    "vf_count",
]
