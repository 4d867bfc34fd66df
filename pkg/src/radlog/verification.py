"""End-to-end verification of a solution basis against both oracles."""

from __future__ import annotations

import logging
from typing import Optional, Sequence, Union

from pydantic import BaseModel, Field

from radlog.core.annihilation import SYMBOLIC_TOL, symbolic_annihilation_check
from radlog.core.basis import construct_solution_basis, foreign_term
from radlog.core.models import BasisMode, ProblemSpec, SolutionBasis
from radlog.numeric.evaluate import sample_points
from radlog.numeric.finite_diff import FDConfig
from radlog.numeric.residuals import NUMERIC_TOL, ResidualReport, hybrid_residual_check

logger = logging.getLogger(__name__)


class SymbolicRow(BaseModel):
    """Outcome of the symbolic check for one term."""

    index: int
    label: str
    max_coefficient: float
    residual_terms: int
    passed: bool


class VerificationReport(BaseModel):
    """Combined symbolic and numeric verdict for one basis."""

    basis: SolutionBasis
    symbolic_tol: float = SYMBOLIC_TOL
    symbolic: list[SymbolicRow] = Field(default_factory=list)
    numeric: Optional[ResidualReport] = None
    numeric_skipped: bool = False
    seed: int = 0
    point_count: int = 0
    passed: bool = True

    def failures(self) -> list[str]:
        """Labels of every failing term, tagged with the oracle that rejected it."""
        out = [f"#{row.index} {row.label} (symbolic)" for row in self.symbolic if not row.passed]
        if self.numeric is not None:
            out += [f"#{t.index} {t.label} (numeric)" for t in self.numeric.failing_terms]
        return out


def verify_basis(
    spec: ProblemSpec,
    basis: SolutionBasis,
    points: int = 100,
    seed: int = 0,
    cfg: Optional[FDConfig] = None,
    symbolic_tol: float = SYMBOLIC_TOL,
    numeric_tol: float = NUMERIC_TOL,
    eps_case: Optional[float] = None,
    low: float = 0.5,
    high: float = 2.0,
) -> VerificationReport:
    """Symbolic annihilation of every term, then the hybrid numeric check.

    With ``points == 0`` the numeric stage is skipped and only the symbolic verdict
    counts.
    """
    rows = [
        SymbolicRow(
            index=res.index,
            label=res.term.render(spec.variable),
            max_coefficient=res.max_coefficient,
            residual_terms=len(res.residual),
            passed=res.passed,
        )
        for res in symbolic_annihilation_check(spec, basis, tol=symbolic_tol, eps_case=eps_case)
    ]

    numeric: Optional[ResidualReport] = None
    if points > 0:
        cloud = sample_points(spec.n, points, seed=seed, low=low, high=high)
        numeric = hybrid_residual_check(
            spec, basis, list(cloud), cfg=cfg, threshold=numeric_tol, eps_case=eps_case
        )
    else:
        logger.debug("numeric stage skipped (no points requested)")

    passed = all(r.passed for r in rows) and (numeric is None or numeric.passed)
    return VerificationReport(
        basis=basis,
        symbolic_tol=symbolic_tol,
        symbolic=rows,
        numeric=numeric,
        numeric_skipped=numeric is None,
        seed=seed,
        point_count=points,
        passed=passed,
    )


def verify_problem(
    spec: ProblemSpec,
    mode: Union[BasisMode, str] = BasisMode.PER_FACTOR,
    inject: Sequence[tuple[float, int]] = (),
    **kwargs,
) -> VerificationReport:
    """Build the basis for spec (plus any injected foreign terms) and verify it."""
    eps_case = kwargs.get("eps_case")
    basis = construct_solution_basis(spec, eps_case=eps_case, mode=mode)
    if inject:
        basis = basis.with_terms([foreign_term(e, l) for e, l in inject])
    return verify_basis(spec, basis, **kwargs)
