"""Assertion functions for radlog.

Provides pytest-compatible assertions for validating solution bases and residual
reports. Failures raise AssertionError naming the offending term.
"""

from typing import Iterable, Optional

from radlog.core.annihilation import SYMBOLIC_TOL, check_term
from radlog.core.models import BasisKind, ProblemSpec, RealBasisTerm, SolutionBasis
from radlog.numeric.residuals import ResidualReport


def term_annihilated(
    spec: ProblemSpec,
    term: RealBasisTerm,
    tol: float = SYMBOLIC_TOL,
    eps_case: Optional[float] = None,
) -> None:
    """Assert that the iterated operator maps the term to zero in the term algebra."""
    residual = check_term(spec, term, eps_case)
    worst = residual.max_coefficient()
    if worst > tol:
        raise AssertionError(
            f"Term '{term.render(spec.variable)}' is NOT annihilated "
            f"(max coefficient {worst:.3g} > {tol:.3g}).\nResidual: {residual}"
        )


def term_not_annihilated(
    spec: ProblemSpec,
    term: RealBasisTerm,
    tol: float = SYMBOLIC_TOL,
) -> None:
    """Assert that a candidate term survives the iterated operator."""
    residual = check_term(spec, term)
    if residual.max_coefficient() <= tol:
        raise AssertionError(
            f"Term '{term.render(spec.variable)}' WAS annihilated but should not have been."
        )


def basis_annihilated(
    spec: ProblemSpec,
    basis: SolutionBasis,
    tol: float = SYMBOLIC_TOL,
    eps_case: Optional[float] = None,
) -> None:
    """Assert that every basis term passes the symbolic check."""
    failed = []
    for term in basis.terms:
        worst = check_term(spec, term, eps_case).max_coefficient()
        if worst > tol:
            failed.append(f"{term.render(spec.variable)} ({worst:.3g})")
    if failed:
        raise AssertionError(
            f"Expected every term to be annihilated, but {len(failed)} term(s) survived: "
            f"{failed}"
        )


def basis_size(basis: SolutionBasis, expected: Optional[int] = None) -> None:
    """Assert the term count, 2 * sum_v k_v unless ``expected`` is given."""
    if expected is None:
        expected = 2 * basis.spec.order
    if basis.count != expected:
        raise AssertionError(
            f"Expected {expected} basis terms, but got {basis.count}.\nTerms: {basis.labels()}"
        )


def labels_equal(basis: SolutionBasis, expected: Iterable[str]) -> None:
    """Assert the rendered terms, ignoring order."""
    got = sorted(basis.labels())
    want = sorted(expected)
    if got != want:
        raise AssertionError(f"Basis terms differ.\nExpected: {want}\nGot:      {got}")


def exponents_close(
    basis: SolutionBasis,
    expected: Iterable[float],
    tol: float = 1e-12,
) -> None:
    """Assert the multiset of PowerLog exponents (log power 0) matches ``expected``."""
    got = sorted(
        t.exponent for t in basis.terms if t.kind == BasisKind.POWER_LOG and t.l == 0
    )
    want = sorted(expected)
    if len(got) != len(want) or any(abs(a - b) > tol for a, b in zip(got, want)):
        raise AssertionError(f"Exponents differ.\nExpected: {want}\nGot:      {got}")


def residual_below(report: ResidualReport, threshold: float) -> None:
    """Assert that every relative residual in the report is at most ``threshold``."""
    if report.max_rel > threshold:
        worst = max(report.terms, key=lambda t: t.max_rel)
        raise AssertionError(
            f"Max relative residual {report.max_rel:.3g} exceeds {threshold:.3g} "
            f"(worst term #{worst.index} '{worst.label}')."
        )


def residual_above(report: ResidualReport, threshold: float) -> None:
    """Assert that some relative residual exceeds ``threshold`` (negative controls)."""
    if report.max_rel < threshold:
        raise AssertionError(
            f"Expected a relative residual of at least {threshold:.3g}, "
            f"but the largest was {report.max_rel:.3g}."
        )
