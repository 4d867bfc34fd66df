"""radlog core: models, term algebra, characteristic roots, operators and bases."""

from radlog.core.algebra import LogPowerExpr, LogPowerTerm
from radlog.core.annihilation import AnnihilationResult, symbolic_annihilation_check
from radlog.core.basis import (
    analyze_problem,
    basis_expr,
    construct_solution_basis,
    euler_solution_basis,
    foreign_term,
    lift_term,
    realize_terms,
)
from radlog.core.characteristic import analyze_factor, beta, beta_prime, compute_phi
from radlog.core.models import (
    BasisKind,
    BasisMode,
    CaseClass,
    FactorAnalysis,
    FactorSpec,
    ProblemSpec,
    RealBasisTerm,
    SolutionBasis,
    euler_problem,
    make_problem,
)
from radlog.core.operators import apply_factor_symbolic, apply_iterated_symbolic

__all__ = [
    "AnnihilationResult",
    "BasisKind",
    "BasisMode",
    "CaseClass",
    "FactorAnalysis",
    "FactorSpec",
    "LogPowerExpr",
    "LogPowerTerm",
    "ProblemSpec",
    "RealBasisTerm",
    "SolutionBasis",
    "analyze_factor",
    "analyze_problem",
    "apply_factor_symbolic",
    "apply_iterated_symbolic",
    "basis_expr",
    "beta",
    "beta_prime",
    "compute_phi",
    "construct_solution_basis",
    "euler_problem",
    "euler_solution_basis",
    "foreign_term",
    "lift_term",
    "make_problem",
    "realize_terms",
    "symbolic_annihilation_check",
]
