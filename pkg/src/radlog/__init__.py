"""radlog - Radial log-power solutions of iterated singular Euler-type equations."""

__version__ = "0.1.0"

from radlog import assertions
from radlog.config import SpecDocument, load_spec, parse_spec
from radlog.core.algebra import LogPowerExpr, LogPowerTerm
from radlog.core.annihilation import symbolic_annihilation_check
from radlog.core.basis import construct_solution_basis, euler_solution_basis, realize_terms
from radlog.core.characteristic import analyze_factor, beta, compute_phi
from radlog.core.models import (
    FactorSpec,
    ProblemSpec,
    RealBasisTerm,
    SolutionBasis,
    euler_problem,
    make_problem,
)
from radlog.core.operators import apply_factor_symbolic, apply_iterated_symbolic
from radlog.errors import CapabilityError, DomainError, ParameterError, RadlogError
from radlog.numeric.evaluate import eval_basis_term, general_solution, radial
from radlog.numeric.finite_diff import FDConfig, apply_iterated_numeric, apply_operator_numeric
from radlog.numeric.residuals import ResidualReport, hybrid_residual_check
from radlog.reporters.json_reporter import load_basis, to_json
from radlog.reporters.junit import to_junit_xml
from radlog.reporters.terminal import print_basis, print_roots, print_verification
from radlog.verification import VerificationReport, verify_basis, verify_problem

__all__ = [
    "CapabilityError",
    "DomainError",
    "FDConfig",
    "FactorSpec",
    "LogPowerExpr",
    "LogPowerTerm",
    "ParameterError",
    "ProblemSpec",
    "RadlogError",
    "RealBasisTerm",
    "ResidualReport",
    "SolutionBasis",
    "SpecDocument",
    "VerificationReport",
    "analyze_factor",
    "apply_factor_symbolic",
    "apply_iterated_numeric",
    "apply_iterated_symbolic",
    "apply_operator_numeric",
    "assertions",
    "beta",
    "compute_phi",
    "construct_solution_basis",
    "euler_problem",
    "euler_solution_basis",
    "eval_basis_term",
    "general_solution",
    "hybrid_residual_check",
    "load_basis",
    "load_spec",
    "make_problem",
    "parse_spec",
    "print_basis",
    "print_roots",
    "print_verification",
    "radial",
    "realize_terms",
    "symbolic_annihilation_check",
    "to_json",
    "to_junit_xml",
    "verify_basis",
    "verify_problem",
]
