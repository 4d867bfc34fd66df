"""Log-power term algebra: finite sums of c * r^m (ln r)^l with complex c and m.

Every operator L_j maps this span into itself, so symbolic application never leaves it.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Iterator, Union

import numpy as np

MERGE_TOL = 1e-12
PRUNE_REL = 1e-14

Scalar = Union[int, float, complex, Number]


@dataclass(frozen=True, slots=True)
class LogPowerTerm:
    """A single monomial coeff * r^m * (ln r)^l."""

    coeff: complex
    m: complex
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        if self.l < 0:
            raise ValueError(f"log power must be nonnegative, got {self.l}")

    def scaled(self, factor: Scalar) -> LogPowerTerm:
        return LogPowerTerm(self.coeff * factor, self.m, self.l)

    def same_key(self, other: LogPowerTerm) -> bool:
        """True when both terms share l and their exponents agree within MERGE_TOL."""
        return (
            self.l == other.l
            and abs(self.m.real - other.m.real) <= MERGE_TOL
            and abs(self.m.imag - other.m.imag) <= MERGE_TOL
        )


@dataclass(frozen=True, slots=True)
class LogPowerExpr:
    """Normalized finite sum of LogPowerTerms.

    Build through ``from_terms`` (or the arithmetic operators) so that the term tuple
    holds at most one entry per (m, l) key and no negligible coefficients.
    """

    terms: tuple[LogPowerTerm, ...] = ()

    # numpy scalars on the left defer to __rmul__ instead of iterating the terms
    __array_ufunc__ = None

    @classmethod
    def zero(cls) -> LogPowerExpr:
        return cls(())

    @classmethod
    def monomial(cls, m: Scalar, l: int = 0, coeff: Scalar = 1.0) -> LogPowerExpr:  # noqa: E741
        return cls.from_terms([LogPowerTerm(complex(coeff), complex(m), l)])

    @classmethod
    def from_terms(cls, terms: Iterable[LogPowerTerm]) -> LogPowerExpr:
        """Merge terms with matching keys, prune tiny coefficients, sort canonically."""
        buckets: list[list] = []  # [representative term, accumulated coefficient]
        for term in terms:
            for bucket in buckets:
                if bucket[0].same_key(term):
                    bucket[1] += term.coeff
                    break
            else:
                buckets.append([term, complex(term.coeff)])

        if not buckets:
            return cls(())

        largest = max(abs(c) for _, c in buckets)
        threshold = PRUNE_REL * largest
        kept = [
            LogPowerTerm(coeff, rep.m, rep.l)
            for rep, coeff in buckets
            if abs(coeff) > threshold
        ]
        kept.sort(key=lambda t: (t.m.real, t.m.imag, t.l))
        return cls(tuple(kept))

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def __add__(self, other: LogPowerExpr) -> LogPowerExpr:
        if not isinstance(other, LogPowerExpr):
            return NotImplemented
        return LogPowerExpr.from_terms(self.terms + other.terms)

    def __sub__(self, other: LogPowerExpr) -> LogPowerExpr:
        if not isinstance(other, LogPowerExpr):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LogPowerExpr:
        return LogPowerExpr(tuple(t.scaled(-1) for t in self.terms))

    def __mul__(self, factor: Scalar) -> LogPowerExpr:
        if not isinstance(factor, Number):
            return NotImplemented
        factor = complex(factor)
        if factor == 0:
            return LogPowerExpr.zero()
        return LogPowerExpr(tuple(t.scaled(factor) for t in self.terms))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[LogPowerTerm]:
        return iter(self.terms)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def log_degree(self) -> int:
        """Highest log power present, -1 for the zero expression."""
        return max((t.l for t in self.terms), default=-1)

    def max_coefficient(self) -> float:
        return max((abs(t.coeff) for t in self.terms), default=0.0)

    def coefficient(self, m: Scalar, l: int = 0) -> complex:  # noqa: E741
        """Coefficient of r^m (ln r)^l, zero when absent."""
        probe = LogPowerTerm(0j, complex(m), l)
        for term in self.terms:
            if term.same_key(probe):
                return term.coeff
        return 0j

    def isclose(self, other: LogPowerExpr, rel: float = 1e-10, abs_tol: float = 0.0) -> bool:
        """Coefficient-wise comparison, relative to the larger expression's scale."""
        scale = max(self.max_coefficient(), other.max_coefficient())
        worst = (self - other).max_coefficient()
        return worst <= max(rel * scale, abs_tol)

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def evaluate(self, r: Union[float, np.ndarray]) -> Union[complex, np.ndarray]:
        """Value of the sum at radius r (scalar or array, r > 0)."""
        r_arr = np.asarray(r, dtype=float)
        log_r = np.log(r_arr)
        total = np.zeros(r_arr.shape, dtype=complex)
        for term in self.terms:
            total = total + term.coeff * np.exp(term.m * log_r) * log_r**term.l
        if total.ndim == 0:
            return complex(total)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for t in self.terms:
            piece = f"({t.coeff:.6g})*r^({t.m:.6g})"
            if t.l:
                piece += f"*(ln r)^{t.l}"
            pieces.append(piece)
        return " + ".join(pieces)
