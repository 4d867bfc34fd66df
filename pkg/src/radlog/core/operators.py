"""Exact action of the operators L_j on the log-power algebra."""

from __future__ import annotations

from typing import Optional, Sequence

from radlog.core.algebra import LogPowerExpr, LogPowerTerm
from radlog.core.characteristic import (
    beta_at,
    beta_prime,
    characteristic_roots,
    compute_phi,
)
from radlog.core.models import FactorAnalysis, FactorSpec, ProblemSpec
from radlog.errors import ParameterError


def apply_factor_symbolic(
    factor: FactorSpec,
    phi: float,
    expr: LogPowerExpr,
    analysis: Optional[FactorAnalysis] = None,
) -> LogPowerExpr:
    """Image of expr under L_j, computed termwise.

    Differentiating L(r^m) = beta(m) r^m l times in m gives

        L(r^m (ln r)^l) = beta(m) r^m (ln r)^l
                          + l beta'(m) r^m (ln r)^(l-1)
                          + l (l-1) r^m (ln r)^(l-2)

    and nothing more, since beta is quadratic.
    """
    if expr.is_zero:
        return expr
    if analysis is None:
        analysis = characteristic_roots(phi, factor.lam)

    out: list[LogPowerTerm] = []
    for term in expr.terms:
        c, m, l = term.coeff, term.m, term.l
        out.append(LogPowerTerm(c * beta_at(analysis, m), m, l))
        if l >= 1:
            out.append(LogPowerTerm(c * l * beta_prime(phi, m), m, l - 1))
        if l >= 2:
            out.append(LogPowerTerm(c * (l * (l - 1)), m, l - 2))
    return LogPowerExpr.from_terms(out)


def operator_sequence(spec: ProblemSpec, last: Optional[int] = None) -> list[int]:
    """Factor indices in application order, each repeated k_j times.

    With ``last`` set, one application of that factor is moved to the end; the
    operators commute, so the composite is unchanged.
    """
    seq = [idx for idx, factor in enumerate(spec.factors) for _ in range(factor.k)]
    if last is not None and 0 <= last < spec.q:
        seq.remove(last)
        seq.append(last)
    return seq


def apply_sequence_symbolic(
    spec: ProblemSpec,
    expr: LogPowerExpr,
    sequence: Sequence[int],
    eps_case: Optional[float] = None,
) -> LogPowerExpr:
    """Apply the factors listed in ``sequence`` one at a time."""
    phis = [compute_phi(f, spec.p, spec.n) for f in spec.factors]
    analyses: dict[int, FactorAnalysis] = {}
    for idx in sequence:
        if expr.is_zero:
            break
        if idx not in analyses:
            analyses[idx] = characteristic_roots(phis[idx], spec.factors[idx].lam, eps_case)
        expr = apply_factor_symbolic(spec.factors[idx], phis[idx], expr, analyses[idx])
    return expr


def apply_iterated_symbolic(
    spec: ProblemSpec,
    expr: LogPowerExpr,
    order: Optional[Sequence[int]] = None,
    eps_case: Optional[float] = None,
) -> LogPowerExpr:
    """(prod_j L_j^{k_j}) expr, factors applied in spec order unless ``order`` permutes them."""
    factor_order = list(order) if order is not None else list(range(spec.q))
    if sorted(factor_order) != list(range(spec.q)):
        raise ParameterError(
            f"order must be a permutation of 0..{spec.q - 1}, got {factor_order}"
        )
    sequence = [idx for idx in factor_order for _ in range(spec.factors[idx].k)]
    return apply_sequence_symbolic(spec, expr, sequence, eps_case)
