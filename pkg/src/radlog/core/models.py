"""Pydantic models for iterated singular operator problems and their solution bases."""

from __future__ import annotations

from enum import Enum
from typing import Any, Sequence

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    computed_field,
    model_validator,
)

from radlog.errors import ParameterError


class CaseClass(str, Enum):
    """Root class of a factor's characteristic quadratic."""

    I1 = "I1"  # two distinct real roots
    I2 = "I2"  # complex conjugate pair
    I3 = "I3"  # double root


class BasisKind(str, Enum):
    """Shape of a real basis function."""

    POWER_LOG = "PowerLog"
    COS_LOG = "CosLog"
    SIN_LOG = "SinLog"


class BasisMode(str, Enum):
    """How log multiplicities are assigned when building a basis."""

    PER_FACTOR = "per-factor"
    COMBINED = "combined"

    @classmethod
    def parse(cls, value: Any) -> BasisMode:
        """Accept the short names as well as the long spelled-out aliases."""
        if isinstance(value, cls):
            return value
        aliases = {
            "paper": cls.PER_FACTOR,
            "per_factor": cls.PER_FACTOR,
            "paper-literal": cls.PER_FACTOR,
            "combined-multiplicity": cls.COMBINED,
        }
        text = str(value).strip().lower()
        if text in aliases:
            return aliases[text]
        return cls(text)


class FactorSpec(BaseModel):
    """One operator L_j: its alpha coefficients, lambda and iteration count."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    alphas: tuple[float, ...]
    lam: float = Field(alias="lambda")
    k: int = Field(default=1, ge=1)


class ProblemSpec(BaseModel):
    """Full parameterization of the iterated equation (prod_j L_j^{k_j}) u = 0."""

    model_config = ConfigDict(frozen=True)

    p: float = Field(gt=0)
    n: int = Field(ge=1)
    factors: tuple[FactorSpec, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_dimensions(self) -> ProblemSpec:
        for idx, factor in enumerate(self.factors):
            if len(factor.alphas) != self.n:
                raise ValueError(
                    f"factor {idx} has {len(factor.alphas)} alphas but n = {self.n}"
                )
        return self

    @property
    def q(self) -> int:
        """Number of distinct factors."""
        return len(self.factors)

    @property
    def order(self) -> int:
        """Total number of operator applications, sum of k_j."""
        return sum(f.k for f in self.factors)

    @property
    def is_euler(self) -> bool:
        """True for the one-dimensional (iterated Euler) specialization."""
        return self.n == 1

    @property
    def variable(self) -> str:
        """Name of the radial variable used when rendering terms."""
        return "x" if self.is_euler else "r"


class FactorAnalysis(BaseModel):
    """Characteristic data of one factor: phi, discriminant, class and roots."""

    model_config = ConfigDict(frozen=True)

    phi: float
    lam: float
    disc: float
    eps_case: float
    case_class: CaseClass
    offset: float = 0.0  # sqrt(|disc|), zero for I3
    roots: tuple[complex, complex]


class RealBasisTerm(BaseModel):
    """One real-valued summand of the radial solution.

    PowerLog is r^(-phi + mu) (ln r)^l; CosLog / SinLog are
    r^(-phi) cos(mu ln r) (ln r)^l and the sine analogue, with mu the frequency.
    """

    model_config = ConfigDict(frozen=True)

    kind: BasisKind
    phi: float
    mu: float
    l: int = Field(ge=0)  # noqa: E741
    factor_index: int = Field(ge=-1)  # -1 marks a term with no owning factor
    shared_with: tuple[int, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def exponent(self) -> float:
        """Real part of the power of r."""
        if self.kind == BasisKind.POWER_LOG:
            return -self.phi + self.mu
        return -self.phi

    @computed_field  # type: ignore[prop-decorator]
    @property
    def frequency(self) -> float:
        """Oscillation frequency in ln r (zero for PowerLog)."""
        return 0.0 if self.kind == BasisKind.POWER_LOG else self.mu

    @property
    def is_foreign(self) -> bool:
        return self.factor_index < 0

    def render(self, variable: str = "r") -> str:
        """Canonical text form, e.g. ``r^(-1) * (ln r)^2`` or ``cos(2 ln x)``."""
        parts: list[str] = []
        if self.exponent != 0:
            parts.append(f"{variable}^({_fmt(self.exponent)})")
        if self.kind == BasisKind.COS_LOG:
            parts.append(f"cos({_fmt(self.frequency)} ln {variable})")
        elif self.kind == BasisKind.SIN_LOG:
            parts.append(f"sin({_fmt(self.frequency)} ln {variable})")
        if self.l == 1:
            parts.append(f"ln {variable}")
        elif self.l > 1:
            parts.append(f"(ln {variable})^{self.l}")
        return " * ".join(parts) if parts else "1"


class SolutionBasis(BaseModel):
    """Real radial log-power basis of the iterated equation."""

    model_config = ConfigDict(frozen=True)

    spec: ProblemSpec
    mode: BasisMode = BasisMode.PER_FACTOR
    terms: tuple[RealBasisTerm, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def count(self) -> int:
        return len(self.terms)

    def labels(self) -> list[str]:
        """Rendered form of every term, in basis order."""
        return [t.render(self.spec.variable) for t in self.terms]

    def with_terms(self, extra: Sequence[RealBasisTerm]) -> SolutionBasis:
        """Return a copy with additional terms appended."""
        return self.model_copy(update={"terms": self.terms + tuple(extra)})


def _fmt(value: float) -> str:
    # adding 0.0 turns -0.0 into 0.0
    return format(value + 0.0, ".6g")


def make_problem(
    p: float,
    n: int,
    factors: Sequence[Any],
) -> ProblemSpec:
    """Build a ProblemSpec, raising ParameterError on invalid input.

    Each factor may be a FactorSpec, a mapping with ``alphas``/``lambda``/``k`` keys,
    or a tuple ``(alphas, lam, k)``.
    """
    built: list[Any] = []
    for item in factors:
        if isinstance(item, (tuple, list)):
            alphas, lam, k = item
            built.append({"alphas": tuple(alphas), "lambda": lam, "k": k})
        else:
            built.append(item)
    try:
        return ProblemSpec(p=p, n=n, factors=tuple(built))
    except ValidationError as exc:
        raise ParameterError(_first_error(exc)) from exc


def euler_problem(
    alphas: Sequence[float],
    lambdas: Sequence[float],
    ks: Sequence[int],
    p: float = 1.0,
) -> ProblemSpec:
    """One-dimensional iterated Euler problem prod_v E_v^{k_v} u = 0."""
    if not (len(alphas) == len(lambdas) == len(ks)):
        raise ParameterError(
            f"alphas, lambdas and ks must have equal length, got "
            f"{len(alphas)}, {len(lambdas)}, {len(ks)}"
        )
    if not alphas:
        raise ParameterError("at least one Euler factor is required")
    return make_problem(p, 1, [((a,), lam, k) for a, lam, k in zip(alphas, lambdas, ks)])


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    loc = ".".join(str(part) for part in err.get("loc", ()))
    msg = err.get("msg", str(exc))
    return f"{loc}: {msg}" if loc else msg
