"""Pointwise evaluation of r, basis terms, expressions and full solutions."""

from __future__ import annotations

from functools import partial
from typing import Callable, Optional, Sequence, Union

import numpy as np
from numpy.typing import DTypeLike

from radlog.core.algebra import LogPowerExpr
from radlog.core.basis import check_coefficients
from radlog.core.models import BasisKind, RealBasisTerm, SolutionBasis
from radlog.errors import DomainError, ParameterError

PointLike = Union[Sequence[float], np.ndarray]


def as_point(x: PointLike, n: Optional[int] = None, dtype: DTypeLike = np.float64) -> np.ndarray:
    """Validate x as a point of the open positive orthant and return it as an array."""
    arr = np.atleast_1d(np.asarray(x, dtype=dtype))
    if arr.ndim != 1:
        raise DomainError(f"point must be a flat vector, got shape {arr.shape}")
    if n is not None and arr.size != n:
        raise DomainError(f"point {arr.tolist()} has {arr.size} coordinates, expected {n}")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise DomainError(f"point {arr.tolist()} is not in the open positive orthant")
    return arr


def radial(x: PointLike, p: float, dtype: DTypeLike = np.float64) -> float:
    """r = (sum_i x_i^p)^(1/p)."""
    arr = as_point(x, dtype=dtype)
    scale = arr.max()
    # factor out the largest coordinate so x_i^p cannot overflow
    r = scale * np.sum((arr / scale) ** p) ** (1 / arr.dtype.type(p))
    return float(r) if arr.dtype == np.float64 else r


def eval_basis_term(term: RealBasisTerm, x: PointLike, p: float) -> float:
    """Value of a real basis term at x."""
    r = radial(x, p)
    log_r = np.log(r)
    log_part = log_r**term.l
    if term.kind == BasisKind.POWER_LOG:
        return float(r**term.exponent * log_part)
    angle = term.frequency * log_r
    osc = np.cos(angle) if term.kind == BasisKind.COS_LOG else np.sin(angle)
    return float(r ** (-term.phi) * osc * log_part)


def extended_value(expr: LogPowerExpr, x: PointLike, p: float) -> np.longdouble:
    """Real part of expr at x, computed in extended precision.

    Used as the function fed to the finite-difference stencil: with float64 the
    evaluation noise divided by h^2 is of the order of the residuals being measured.
    Where the platform has no wider type than float64 this is an ordinary evaluation.
    """
    r = radial(x, p, dtype=np.longdouble)
    log_r = np.log(r)
    total = np.clongdouble(0)
    for term in expr:
        power = np.exp(np.clongdouble(term.m) * log_r)
        total += np.clongdouble(term.coeff) * power * log_r**term.l
    return total.real


def eval_expr(expr: LogPowerExpr, x: PointLike, p: float) -> float:
    """Real part of a log-power expression at x."""
    return float(np.real(expr.evaluate(radial(x, p))))


def eval_solution(
    basis: SolutionBasis,
    x: PointLike,
    coeffs: Optional[Sequence[float]] = None,
) -> float:
    """u(x) = sum_t c_t * term_t(x); every constant is 1 unless coeffs are given."""
    weights = check_coefficients(basis, coeffs)
    point = as_point(x, basis.spec.n)
    return float(
        sum(w * eval_basis_term(t, point, basis.spec.p) for w, t in zip(weights, basis.terms))
    )


def general_solution(
    basis: SolutionBasis,
    coeffs: Optional[Sequence[float]] = None,
) -> Callable[[PointLike], float]:
    """The weighted solution as a callable of the point."""
    check_coefficients(basis, coeffs)
    return partial(eval_solution, basis, coeffs=coeffs)


def sample_points(
    n: int,
    count: int,
    seed: int = 0,
    low: float = 0.5,
    high: float = 2.0,
) -> np.ndarray:
    """``count`` points drawn uniformly from [low, high]^n with a seeded generator."""
    if low <= 0 or high <= low:
        raise DomainError(f"sampling box [{low}, {high}] must lie in the positive reals")
    if seed < 0:
        raise ParameterError(f"seed must be nonnegative, got {seed}")
    rng = np.random.default_rng(seed)
    return rng.uniform(low, high, size=(count, n))
