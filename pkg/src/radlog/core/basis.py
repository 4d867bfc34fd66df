"""Construction of the real radial log-power solution basis."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from radlog.core.algebra import MERGE_TOL, LogPowerExpr, LogPowerTerm
from radlog.core.characteristic import analyze_factor
from radlog.core.models import (
    BasisKind,
    BasisMode,
    CaseClass,
    FactorAnalysis,
    ProblemSpec,
    RealBasisTerm,
    SolutionBasis,
    euler_problem,
)
from radlog.errors import ParameterError

logger = logging.getLogger(__name__)


def analyze_problem(spec: ProblemSpec, eps_case: Optional[float] = None) -> list[FactorAnalysis]:
    """FactorAnalysis for every factor, in spec order."""
    return [analyze_factor(f, spec.p, spec.n, eps_case) for f in spec.factors]


def realize_terms(
    analysis: FactorAnalysis,
    k: int,
    factor_index: int = 0,
) -> list[RealBasisTerm]:
    """Real basis terms contributed by one factor.

    I1 gives r^(-phi +/- sqrt(disc)) (ln r)^l and I2 the cos/sin pair of frequency
    sqrt(-disc), both for l < k. I3 gives r^(-phi) (ln r)^l for l < 2k.
    """
    if k < 1:
        raise ParameterError(f"iteration count must be >= 1, got {k}")
    phi, offset = analysis.phi, analysis.offset

    def term(kind: BasisKind, mu: float, l: int) -> RealBasisTerm:  # noqa: E741
        return RealBasisTerm(kind=kind, phi=phi, mu=mu, l=l, factor_index=factor_index)

    terms: list[RealBasisTerm] = []
    if analysis.case_class == CaseClass.I1:
        for l in range(k):  # noqa: E741
            terms.append(term(BasisKind.POWER_LOG, offset, l))
            terms.append(term(BasisKind.POWER_LOG, -offset, l))
    elif analysis.case_class == CaseClass.I2:
        # r^(-phi +/- i w) = r^(-phi) [cos(w ln r) +/- i sin(w ln r)]
        for l in range(k):  # noqa: E741
            terms.append(term(BasisKind.COS_LOG, offset, l))
            terms.append(term(BasisKind.SIN_LOG, offset, l))
    else:
        for l in range(2 * k):  # noqa: E741
            terms.append(term(BasisKind.POWER_LOG, 0.0, l))
    return terms


@dataclass
class _RootEntry:
    root: complex
    pair: bool
    phi: float
    mu: float
    owner: int
    multiplicity: int
    shared: list[int] = field(default_factory=list)

    def matches(self, root: complex, pair: bool) -> bool:
        return (
            self.pair == pair
            and abs(self.root.real - root.real) <= MERGE_TOL
            and abs(self.root.imag - root.imag) <= MERGE_TOL
        )


def _combined_terms(analyses: Sequence[FactorAnalysis], spec: ProblemSpec) -> list[RealBasisTerm]:
    """Merge equal roots across factors and sum their multiplicities k_v * mult_v(m)."""
    entries: list[_RootEntry] = []

    def add(root: complex, pair: bool, phi: float, mu: float, owner: int, mult: int) -> None:
        for entry in entries:
            if entry.matches(root, pair):
                entry.multiplicity += mult
                if owner != entry.owner and owner not in entry.shared:
                    entry.shared.append(owner)
                return
        entries.append(_RootEntry(root, pair, phi, mu, owner, mult))

    for idx, (analysis, factor) in enumerate(zip(analyses, spec.factors)):
        m1, m2 = analysis.roots
        if analysis.case_class == CaseClass.I1:
            add(m1, False, analysis.phi, analysis.offset, idx, factor.k)
            add(m2, False, analysis.phi, -analysis.offset, idx, factor.k)
        elif analysis.case_class == CaseClass.I2:
            add(m1, True, analysis.phi, analysis.offset, idx, factor.k)
        else:
            add(m1, False, analysis.phi, 0.0, idx, 2 * factor.k)

    terms: list[RealBasisTerm] = []
    for entry in entries:
        kinds = (BasisKind.COS_LOG, BasisKind.SIN_LOG) if entry.pair else (BasisKind.POWER_LOG,)
        for l in range(entry.multiplicity):  # noqa: E741
            for kind in kinds:
                terms.append(
                    RealBasisTerm(
                        kind=kind,
                        phi=entry.phi,
                        mu=entry.mu,
                        l=l,
                        factor_index=entry.owner,
                        shared_with=tuple(entry.shared),
                    )
                )
    return terms


def construct_solution_basis(
    spec: ProblemSpec,
    eps_case: Optional[float] = None,
    mode: Union[BasisMode, str] = BasisMode.PER_FACTOR,
) -> SolutionBasis:
    """Radial basis of (prod_j L_j^{k_j}) u = 0.

    In per-factor mode each factor contributes its terms independently (2 k_v of them).
    Combined mode pools equal roots across factors so that shared roots receive the
    full log multiplicity; the term count is 2 sum_v k_v in both modes.
    """
    mode = BasisMode.parse(mode)
    analyses = analyze_problem(spec, eps_case)

    if mode == BasisMode.PER_FACTOR:
        terms: list[RealBasisTerm] = []
        for idx, (analysis, factor) in enumerate(zip(analyses, spec.factors)):
            terms.extend(realize_terms(analysis, factor.k, factor_index=idx))
    else:
        terms = _combined_terms(analyses, spec)

    logger.debug("built %d basis terms for %d factors (%s mode)", len(terms), spec.q, mode.value)
    return SolutionBasis(spec=spec, mode=mode, terms=tuple(terms))


def euler_solution_basis(
    alphas: Sequence[float],
    lambdas: Sequence[float],
    ks: Sequence[int],
    eps_case: Optional[float] = None,
    mode: Union[BasisMode, str] = BasisMode.PER_FACTOR,
) -> SolutionBasis:
    """General solution basis of prod_v E_v^{k_v} u = 0, E_v = x^2 D^2 + alpha_v x D + lambda_v.

    This is the n = 1 case, where phi_v = (alpha_v - 1) / 2 for every p.
    """
    spec = euler_problem(alphas, lambdas, ks)
    return construct_solution_basis(spec, eps_case=eps_case, mode=mode)


def lift_term(term: RealBasisTerm) -> LogPowerExpr:
    """Express a real basis term in the complex log-power algebra."""
    phi, mu, l = term.phi, term.mu, term.l
    if term.kind == BasisKind.POWER_LOG:
        return LogPowerExpr.monomial(complex(-phi + mu, 0.0), l)
    upper = complex(-phi, mu)
    lower = complex(-phi, -mu)
    if term.kind == BasisKind.COS_LOG:
        pieces = [LogPowerTerm(0.5 + 0j, upper, l), LogPowerTerm(0.5 + 0j, lower, l)]
    else:
        pieces = [LogPowerTerm(-0.5j, upper, l), LogPowerTerm(0.5j, lower, l)]
    return LogPowerExpr.from_terms(pieces)


def basis_expr(basis: SolutionBasis, coeffs: Optional[Sequence[float]] = None) -> LogPowerExpr:
    """Coefficient-weighted sum of the basis lifted into the algebra (all ones by default)."""
    weights = check_coefficients(basis, coeffs)
    out: list[LogPowerTerm] = []
    for weight, term in zip(weights, basis.terms):
        out.extend(t.scaled(weight) for t in lift_term(term).terms)
    return LogPowerExpr.from_terms(out)


def check_coefficients(
    basis: SolutionBasis, coeffs: Optional[Sequence[float]] = None
) -> list[float]:
    """Validate a coefficient list against the basis size, defaulting to all ones."""
    if coeffs is None:
        return [1.0] * len(basis.terms)
    if len(coeffs) != len(basis.terms):
        raise ParameterError(
            f"expected {len(basis.terms)} coefficients for the basis, got {len(coeffs)}"
        )
    return [float(c) for c in coeffs]


def foreign_term(exponent: float, l: int = 0) -> RealBasisTerm:  # noqa: E741
    """A PowerLog term r^exponent (ln r)^l owned by no factor (negative control)."""
    return RealBasisTerm(
        kind=BasisKind.POWER_LOG, phi=0.0, mu=exponent, l=l, factor_index=-1
    )
