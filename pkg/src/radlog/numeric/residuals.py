"""Residual reports for numeric verification of basis terms."""

from __future__ import annotations

import logging
from functools import partial
from typing import Callable, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from radlog.core.basis import lift_term
from radlog.core.models import FactorSpec, ProblemSpec, RealBasisTerm, SolutionBasis
from radlog.core.operators import apply_sequence_symbolic, operator_sequence
from radlog.errors import CapabilityError
from radlog.numeric.evaluate import PointLike, as_point, extended_value
from radlog.numeric.finite_diff import (
    FDConfig,
    PointFunction,
    nest_operators,
    operator_summands,
)

logger = logging.getLogger(__name__)

# (function to difference, index of the factor applied numerically, step, normalizer floor)
_Prepared = tuple[PointFunction, int, float, Optional[Callable[[np.ndarray], float]]]

NORMALIZER_FLOOR = 1e-30
NUMERIC_TOL = 1e-4


class PointResidual(BaseModel):
    """Residual of one function at one point."""

    point: list[float]
    residual: float
    normalizer: float
    relative: float


class TermResidual(BaseModel):
    """Residuals of one basis term over the point cloud."""

    index: int
    label: str
    per_point: list[PointResidual] = Field(default_factory=list)
    max_rel: float = 0.0
    mean_rel: float = 0.0
    passed: bool = True


class ResidualReport(BaseModel):
    """Aggregate residual statistics.

    ``per_point`` holds, for each point, the worst residual over all terms.
    """

    threshold: float = NUMERIC_TOL
    per_point: list[PointResidual] = Field(default_factory=list)
    terms: list[TermResidual] = Field(default_factory=list)
    max_rel: float = 0.0
    mean_rel: float = 0.0
    passed: bool = True

    @property
    def failing_terms(self) -> list[TermResidual]:
        return [t for t in self.terms if not t.passed]


def point_residual(
    summands: np.ndarray,
    x: np.ndarray,
    floor: float = NORMALIZER_FLOOR,
) -> PointResidual:
    """Residual sum, its max-summand normalizer and the relative residual."""
    residual = float(np.sum(summands))
    normalizer = max(float(np.max(np.abs(summands))), floor, NORMALIZER_FLOOR)
    return PointResidual(
        point=x.tolist(),
        residual=residual,
        normalizer=normalizer,
        relative=abs(residual) / normalizer,
    )


def summarize_term(
    index: int,
    label: str,
    residuals: list[PointResidual],
    threshold: float,
) -> TermResidual:
    rel = np.array([r.relative for r in residuals], dtype=float)
    max_rel = float(rel.max()) if rel.size else 0.0
    return TermResidual(
        index=index,
        label=label,
        per_point=residuals,
        max_rel=max_rel,
        mean_rel=float(rel.mean()) if rel.size else 0.0,
        passed=max_rel <= threshold,
    )


def combine_terms(terms: list[TermResidual], threshold: float) -> ResidualReport:
    """Reduce per-term results into one report. Empty input passes vacuously."""
    worst: dict[int, PointResidual] = {}
    total, count = 0.0, 0
    for term in terms:
        for i, res in enumerate(term.per_point):
            if i not in worst or res.relative > worst[i].relative:
                worst[i] = res
            total += res.relative
            count += 1
    max_rel = max((t.max_rel for t in terms), default=0.0)
    return ResidualReport(
        threshold=threshold,
        per_point=[worst[i] for i in sorted(worst)],
        terms=terms,
        max_rel=max_rel,
        mean_rel=total / count if count else 0.0,
        passed=all(t.passed for t in terms),
    )


def _check_terms(
    spec: ProblemSpec,
    basis: SolutionBasis,
    points: Sequence[PointLike],
    threshold: float,
    prepare: Callable[[RealBasisTerm], _Prepared],
) -> ResidualReport:
    cloud = [as_point(x, spec.n) for x in points]
    results = []
    for idx, term in enumerate(basis.terms):
        f, last, h_rel, floor = prepare(term)
        factor = spec.factors[last]
        residuals = [
            point_residual(
                operator_summands(factor, spec.p, f, x, h_rel),
                x,
                floor(x) if floor else NORMALIZER_FLOOR,
            )
            for x in cloud
        ]
        label = term.render(spec.variable)
        summary = summarize_term(idx, label, residuals, threshold)
        logger.debug("term %d %s: max relative residual %.3g", idx, label, summary.max_rel)
        results.append(summary)
    return combine_terms(results, threshold)


def hybrid_residual_check(
    spec: ProblemSpec,
    basis: SolutionBasis,
    points: Sequence[PointLike],
    cfg: Optional[FDConfig] = None,
    threshold: float = NUMERIC_TOL,
    eps_case: Optional[float] = None,
) -> ResidualReport:
    """Exact prefix, numeric final factor.

    All operator applications but one are carried out in the term algebra; the
    resulting expression is evaluated as a function and the remaining application
    is done by finite differences, so numeric differentiation stays at order two
    whatever sum_j k_j is. The term's own factor is applied last.
    """
    cfg = cfg or FDConfig()

    def prepare(term: RealBasisTerm) -> _Prepared:
        owner = None if term.is_foreign else term.factor_index
        sequence = operator_sequence(spec, last=owner)
        prefix = apply_sequence_symbolic(spec, lift_term(term), sequence[:-1], eps_case)
        return partial(extended_value, prefix, p=spec.p), sequence[-1], cfg.h_rel, None

    return _check_terms(spec, basis, points, threshold, prepare)


def _first_level_scale(
    factor: FactorSpec, p: float, f: PointFunction, h_rel: float, x: np.ndarray
) -> float:
    return float(np.max(np.abs(operator_summands(factor, p, f, x, h_rel))))


def numeric_residual_check(
    spec: ProblemSpec,
    basis: SolutionBasis,
    points: Sequence[PointLike],
    cfg: Optional[FDConfig] = None,
    threshold: float = NUMERIC_TOL,
) -> ResidualReport:
    """Purely finite-difference residuals, for total orders within the numeric cap.

    When an inner level already annihilates the term, the outer level differentiates
    discretization noise only. The normalizer is therefore floored by the summands of
    the first level applied to the term itself.
    """
    cfg = cfg or FDConfig()
    if spec.order > cfg.max_numeric_order:
        raise CapabilityError(
            f"total operator order {spec.order} exceeds the numeric cap "
            f"{cfg.max_numeric_order}; use hybrid_residual_check instead"
        )
    h_rel = cfg.h_rel if spec.order == 1 else cfg.nested_h_rel
    sequence = operator_sequence(spec)

    def prepare(term: RealBasisTerm) -> _Prepared:
        f = partial(extended_value, lift_term(term), p=spec.p)
        floor = None
        if len(sequence) > 1:
            first = spec.factors[sequence[0]]
            floor = partial(_first_level_scale, first, spec.p, f, h_rel)
        return nest_operators(spec, f, sequence[:-1], h_rel), sequence[-1], h_rel, floor

    return _check_terms(spec, basis, points, threshold, prepare)
