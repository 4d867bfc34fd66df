"""radlog numeric: pointwise evaluation, finite differences and residual reports."""

from radlog.numeric.evaluate import (
    as_point,
    eval_basis_term,
    eval_expr,
    eval_solution,
    extended_value,
    general_solution,
    radial,
    sample_points,
)
from radlog.numeric.finite_diff import (
    FDConfig,
    apply_iterated_numeric,
    apply_operator_numeric,
    operator_summands,
)
from radlog.numeric.residuals import (
    PointResidual,
    ResidualReport,
    TermResidual,
    hybrid_residual_check,
    numeric_residual_check,
)

__all__ = [
    "FDConfig",
    "PointResidual",
    "ResidualReport",
    "TermResidual",
    "apply_iterated_numeric",
    "apply_operator_numeric",
    "as_point",
    "eval_basis_term",
    "eval_expr",
    "eval_solution",
    "extended_value",
    "general_solution",
    "hybrid_residual_check",
    "numeric_residual_check",
    "operator_summands",
    "radial",
    "sample_points",
]
