"""Characteristic quantities of a factor: phi, the quadratic beta(m), and its roots."""

from __future__ import annotations

import logging
import math
from typing import Optional

from radlog.core.algebra import MERGE_TOL
from radlog.core.models import CaseClass, FactorAnalysis, FactorSpec
from radlog.errors import ParameterError

logger = logging.getLogger(__name__)

CASE_REL_TOL = 1e-9


def compute_phi(factor: FactorSpec, p: float, n: int) -> float:
    """phi_j with 2 phi_j = -p + n (p - 1) + sum_i alpha_i."""
    if len(factor.alphas) != n:
        raise ParameterError(f"factor has {len(factor.alphas)} alphas but n = {n}")
    if p <= 0:
        raise ParameterError(f"p must be positive, got {p}")
    return (-p + n * (p - 1) + math.fsum(factor.alphas)) / 2


def beta(phi: float, lam: float, m: complex) -> complex:
    """Eigenvalue of L on r^m: m (m + 2 phi) + lambda."""
    return m * (m + 2 * phi) + lam


def beta_prime(phi: float, m: complex) -> complex:
    """d beta / dm = 2m + 2 phi. The second derivative is the constant 2."""
    return 2 * m + 2 * phi


def case_tolerance(phi: float, lam: float) -> float:
    """Default classification band, scaled to the magnitude of phi^2 and lambda."""
    return CASE_REL_TOL * max(1.0, phi * phi, abs(lam))


def characteristic_roots(
    phi: float,
    lam: float,
    eps_case: Optional[float] = None,
) -> FactorAnalysis:
    """Classify beta(m) = m^2 + 2 phi m + lambda and return its roots.

    Inside the band |disc| <= eps_case the roots are snapped to the double root -phi.
    """
    eps = case_tolerance(phi, lam) if eps_case is None else eps_case
    if eps < 0:
        raise ParameterError(f"eps_case must be nonnegative, got {eps}")
    disc = phi * phi - lam

    if disc > eps:
        offset = math.sqrt(disc)
        case = CaseClass.I1
        roots = (complex(-phi + offset, 0.0), complex(-phi - offset, 0.0))
    elif disc < -eps:
        offset = math.sqrt(-disc)
        case = CaseClass.I2
        roots = (complex(-phi, offset), complex(-phi, -offset))
    else:
        offset = 0.0
        case = CaseClass.I3
        roots = (complex(-phi, 0.0), complex(-phi, 0.0))

    return FactorAnalysis(
        phi=phi,
        lam=lam,
        disc=disc,
        eps_case=eps,
        case_class=case,
        offset=offset,
        roots=roots,
    )


def analyze_factor(
    factor: FactorSpec,
    p: float,
    n: int,
    eps_case: Optional[float] = None,
) -> FactorAnalysis:
    """phi, discriminant, case class and both roots of one factor."""
    phi = compute_phi(factor, p, n)
    analysis = characteristic_roots(phi, factor.lam, eps_case)
    logger.debug(
        "factor alphas=%s lambda=%g: phi=%g disc=%g class=%s",
        factor.alphas,
        factor.lam,
        phi,
        analysis.disc,
        analysis.case_class.value,
    )
    return analysis


def beta_at(analysis: FactorAnalysis, m: complex) -> complex:
    """beta(m), exact zero when m coincides with one of the stored roots.

    At a root the factored form (m - m1)(m - m2) is used so that the basis exponents,
    which are built from the same floats, are annihilated without roundoff. A factor
    snapped to a double root inside the classification band has stored roots that are
    not roots of beta; it always gets the expanded form, which is lambda - phi^2 at -phi.
    """
    if analysis.case_class == CaseClass.I3 and analysis.disc != 0:
        return beta(analysis.phi, analysis.lam, m)
    for root in analysis.roots:
        if abs(m.real - root.real) <= MERGE_TOL and abs(m.imag - root.imag) <= MERGE_TOL:
            m1, m2 = analysis.roots
            return (m - m1) * (m - m2)
    return beta(analysis.phi, analysis.lam, m)
