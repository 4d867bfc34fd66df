"""Symbolic verification: apply the whole iterated operator to each basis term."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from radlog.core.algebra import LogPowerExpr
from radlog.core.basis import lift_term
from radlog.core.models import ProblemSpec, RealBasisTerm, SolutionBasis
from radlog.core.operators import apply_iterated_symbolic

logger = logging.getLogger(__name__)

SYMBOLIC_TOL = 1e-9


@dataclass(frozen=True)
class AnnihilationResult:
    """Residual of one basis term under (prod_j L_j^{k_j})."""

    index: int
    term: RealBasisTerm
    residual: LogPowerExpr
    tol: float

    @property
    def max_coefficient(self) -> float:
        return self.residual.max_coefficient()

    @property
    def passed(self) -> bool:
        return self.max_coefficient <= self.tol


def check_term(
    spec: ProblemSpec,
    term: RealBasisTerm,
    eps_case: Optional[float] = None,
) -> LogPowerExpr:
    """Residual expression of a single lifted term."""
    return apply_iterated_symbolic(spec, lift_term(term), eps_case=eps_case)


def symbolic_annihilation_check(
    spec: ProblemSpec,
    basis: SolutionBasis,
    tol: float = SYMBOLIC_TOL,
    eps_case: Optional[float] = None,
) -> list[AnnihilationResult]:
    """Residual of every basis term; a term passes when all coefficients are <= tol."""
    results = []
    for idx, term in enumerate(basis.terms):
        residual = check_term(spec, term, eps_case)
        result = AnnihilationResult(index=idx, term=term, residual=residual, tol=tol)
        logger.debug(
            "term %d %s: max residual coefficient %.3g",
            idx,
            term.render(spec.variable),
            result.max_coefficient,
        )
        results.append(result)
    return results
