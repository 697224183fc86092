"""Exact invariants of generalized Suzuki curves y^q - y = x^(q0) (x^q - x)."""

from ._core import (
    GsError,
    ParameterError,
    ResourceError,
    aut_group_audit,
    brute_force_count,
    cover_table,
    decomposition_count,
    gauss_sum_coords,
    jacobian_note,
    jacobian_order,
    l_polynomial,
    newton_counts,
    period,
    point_count,
    scaled_mp,
    verify,
    verify_mp_factorization,
    voloch_precondition,
)

__all__ = [
    "GsError",
    "ParameterError",
    "ResourceError",
    "aut_group_audit",
    "brute_force_count",
    "cover_table",
    "decomposition_count",
    "gauss_sum_coords",
    "jacobian_note",
    "jacobian_order",
    "l_polynomial",
    "newton_counts",
    "period",
    "point_count",
    "scaled_mp",
    "verify",
    "verify_mp_factorization",
    "voloch_precondition",
]
