"""Finite-difference application of the raw operator L_j, independent of the algebra."""

from __future__ import annotations

from functools import partial
from typing import Callable, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from radlog.core.models import FactorSpec, ProblemSpec
from radlog.core.operators import operator_sequence
from radlog.errors import CapabilityError, DomainError
from radlog.numeric.evaluate import PointLike, as_point, radial

PointFunction = Callable[[np.ndarray], float]

# stencil arithmetic runs in the widest native float so that f values computed in
# extended precision keep their extra digits through the h^-2 division
_WIDE = np.longdouble


class FDConfig(BaseModel):
    """Step and depth settings for numeric operator application.

    ``h_rel`` is the single-level relative step, h_i = h_rel * x_i. Its default is
    1e-4 rather than the customary 1e-5: at 1e-5 the h^-2 amplification puts the float64
    noise floor near 1e-6 relative, level with the tightest acceptance threshold.
    Nested application (total order above one) uses the coarser ``nested_h_rel`` at
    every level, since each level amplifies the previous level's roundoff by h^-2.
    """

    model_config = ConfigDict(frozen=True)

    h_rel: float = Field(default=1e-4, gt=0, lt=0.5)
    nested_h_rel: float = Field(default=1e-3, gt=0, lt=0.5)
    scheme: Literal["central2"] = "central2"
    max_numeric_order: int = Field(default=2, ge=1)


def _stencil(x: np.ndarray, i: int, h_rel: float) -> tuple[np.ndarray, np.ndarray, float]:
    plus = x.copy()
    plus[i] = x[i] + h_rel * x[i]
    h = plus[i] - x[i]  # representable step
    minus = x.copy()
    minus[i] = x[i] - h
    if minus[i] - h <= 0:
        raise DomainError(
            f"finite-difference step {h:.3g} leaves the positive orthant at {x.tolist()}"
        )
    return plus, minus, h


def operator_summands(
    factor: FactorSpec,
    p: float,
    f: PointFunction,
    x: PointLike,
    h_rel: float,
) -> np.ndarray:
    """Individual summands of L_j f at x.

    Returns [(r/x_1)^p x_1^2 f_11, (r/x_1)^p alpha_1 x_1 f_1, ..., lambda f], with the
    derivatives taken by second-order central differences.
    """
    point = as_point(x, len(factor.alphas))
    r = radial(point, p)
    f0 = _WIDE(f(point))
    parts = []
    for i, alpha in enumerate(factor.alphas):
        plus, minus, h = _stencil(point, i, h_rel)
        fp = _WIDE(f(plus))
        fm = _WIDE(f(minus))
        step = _WIDE(h)
        d1 = (fp - fm) / (2 * step)
        d2 = (fp - 2 * f0 + fm) / (step * step)
        weight = np.exp(p * (np.log(r) - np.log(point[i])))
        parts.append(weight * point[i] ** 2 * d2)
        parts.append(weight * alpha * point[i] * d1)
    parts.append(factor.lam * f0)
    return np.asarray(parts, dtype=_WIDE)


def apply_operator_numeric(
    factor: FactorSpec,
    p: float,
    f: PointFunction,
    x: PointLike,
    cfg: Optional[FDConfig] = None,
) -> float:
    """L_j f at x by central differences with step cfg.h_rel."""
    cfg = cfg or FDConfig()
    return float(np.sum(operator_summands(factor, p, f, x, cfg.h_rel)))


def _apply_level(factor: FactorSpec, p: float, f: PointFunction, h_rel: float, y):
    return np.sum(operator_summands(factor, p, f, y, h_rel))


def nest_operators(
    spec: ProblemSpec,
    f: PointFunction,
    sequence: list[int],
    h_rel: float,
) -> PointFunction:
    """Compose numeric applications of the listed factors around f."""
    g = f
    for idx in sequence:
        g = partial(_apply_level, spec.factors[idx], spec.p, g, h_rel)
    return g


def apply_iterated_numeric(
    spec: ProblemSpec,
    f: PointFunction,
    x: PointLike,
    cfg: Optional[FDConfig] = None,
) -> float:
    """(prod_j L_j^{k_j}) f at x by nested finite differences.

    Only total orders up to cfg.max_numeric_order are supported; higher orders should
    go through hybrid_residual_check.
    """
    cfg = cfg or FDConfig()
    if spec.order > cfg.max_numeric_order:
        raise CapabilityError(
            f"total operator order {spec.order} exceeds the numeric cap "
            f"{cfg.max_numeric_order}; use hybrid_residual_check instead"
        )
    h_rel = cfg.h_rel if spec.order == 1 else cfg.nested_h_rel
    g = nest_operators(spec, f, operator_sequence(spec), h_rel)
    return float(g(as_point(x, spec.n)))
