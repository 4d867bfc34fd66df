"""Tests for the hybrid and fully numeric residual checks."""

import numpy as np
import pytest

from radlog import assertions
from radlog.core.basis import construct_solution_basis, foreign_term
from radlog.errors import CapabilityError
from radlog.numeric.evaluate import sample_points
from radlog.numeric.residuals import (
    NORMALIZER_FLOOR,
    combine_terms,
    hybrid_residual_check,
    numeric_residual_check,
    point_residual,
)
from tests.problems import euler, laplace, shared_root_euler


class TestPointResidual:
    def test_relative_to_largest_summand(self):
        res = point_residual(np.array([3.0, -4.0, 1.5]), np.array([1.0]))
        assert res.residual == pytest.approx(0.5)
        assert res.normalizer == 4.0
        assert res.relative == pytest.approx(0.125)

    def test_floor(self):
        res = point_residual(np.zeros(3), np.array([1.0, 2.0]))
        assert res.normalizer == NORMALIZER_FLOOR
        assert res.relative == 0.0
        assert res.point == [1.0, 2.0]

    def test_empty_input_passes(self):
        report = combine_terms([], 1e-4)
        assert report.passed
        assert report.max_rel == 0.0
        assert report.per_point == []


class TestHybridCheck:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_laplace(self, n):
        spec = laplace(n)
        basis = construct_solution_basis(spec)
        report = hybrid_residual_check(spec, basis, sample_points(n, 100, seed=0))
        assert report.passed
        assertions.residual_below(report, 1e-4)
        assert len(report.per_point) == 100
        assert len(report.terms) == 2

    @pytest.mark.parametrize(
        "alpha, lam, k",
        [(1.0, 0.0, 2), (1.0, 4.0, 1), (3.0, 1.0, 1), (0.0, -2.0, 3)],
    )
    def test_euler(self, alpha, lam, k):
        spec = euler(alpha, lam, k)
        basis = construct_solution_basis(spec)
        report = hybrid_residual_check(spec, basis, sample_points(1, 50, seed=1))
        assertions.residual_below(report, 1e-6)

    def test_high_order_stays_second_order_numerically(self, make_problem):
        spec = make_problem(2, 3, [((0, 0, 0), 0, 3), ((1, 0, -1), 2, 2)])
        basis = construct_solution_basis(spec)
        report = hybrid_residual_check(spec, basis, sample_points(3, 30, seed=2))
        assertions.residual_below(report, 1e-4)

    def test_combined_mode_shared_root(self):
        spec = shared_root_euler()
        basis = construct_solution_basis(spec, mode="combined")
        report = hybrid_residual_check(spec, basis, sample_points(1, 40, seed=3))
        assertions.residual_below(report, 1e-6)

    def test_foreign_term_fails(self):
        spec = euler(1.0, 0.0, k=2)
        basis = construct_solution_basis(spec).with_terms([foreign_term(5.0)])
        report = hybrid_residual_check(spec, basis, sample_points(1, 20, seed=4))
        assert not report.passed
        assert [t.index for t in report.failing_terms] == [4]
        assertions.residual_above(report, 0.1)

    def test_no_points(self):
        spec = laplace(3)
        report = hybrid_residual_check(spec, construct_solution_basis(spec), [])
        assert report.passed
        assert report.per_point == []
        assert all(t.max_rel == 0.0 for t in report.terms)

    def test_per_point_keeps_worst_term(self):
        spec = laplace(3)
        basis = construct_solution_basis(spec).with_terms([foreign_term(2.0)])
        report = hybrid_residual_check(spec, basis, sample_points(3, 5, seed=5))
        foreign = report.terms[-1]
        for worst, own in zip(report.per_point, foreign.per_point):
            assert worst.relative == own.relative


class TestNumericCheck:
    def test_second_order_problem(self):
        spec = euler(1.0, 0.0, k=2)
        basis = construct_solution_basis(spec)
        report = numeric_residual_check(spec, basis, sample_points(1, 20, seed=6))
        assertions.residual_below(report, 1e-3)

    def test_first_order_problem(self):
        spec = laplace(3)
        report = numeric_residual_check(
            spec, construct_solution_basis(spec), sample_points(3, 20, seed=7)
        )
        assertions.residual_below(report, 1e-4)

    def test_order_cap(self):
        spec = euler(1.0, 0.0, k=3)
        with pytest.raises(CapabilityError):
            numeric_residual_check(spec, construct_solution_basis(spec), [[1.0]])
