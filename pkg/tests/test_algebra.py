"""Tests for the log-power term algebra."""

import math

import numpy as np
import pytest

from radlog.core.algebra import MERGE_TOL, LogPowerExpr, LogPowerTerm


class TestConstruction:
    def test_zero(self):
        zero = LogPowerExpr.zero()
        assert zero.is_zero
        assert len(zero) == 0
        assert zero.log_degree == -1
        assert str(zero) == "0"

    def test_monomial(self):
        expr = LogPowerExpr.monomial(2.0, l=1, coeff=3.0)
        assert len(expr) == 1
        assert expr.coefficient(2.0, 1) == 3.0
        assert expr.log_degree == 1

    def test_negative_log_power_rejected(self):
        with pytest.raises(ValueError):
            LogPowerTerm(1.0, 0.0, -1)

    def test_equal_keys_merge(self):
        expr = LogPowerExpr.from_terms(
            [LogPowerTerm(1.0, 1.0, 0), LogPowerTerm(2.0, 1.0 + MERGE_TOL / 2, 0)]
        )
        assert len(expr) == 1
        assert expr.coefficient(1.0) == 3.0

    def test_distinct_log_powers_kept_apart(self):
        expr = LogPowerExpr.from_terms([LogPowerTerm(1.0, 1.0, 0), LogPowerTerm(1.0, 1.0, 1)])
        assert len(expr) == 2

    def test_cancellation_prunes(self):
        expr = LogPowerExpr.from_terms([LogPowerTerm(1.0, 0.5, 2), LogPowerTerm(-1.0, 0.5, 2)])
        assert expr.is_zero

    def test_relative_pruning(self):
        expr = LogPowerExpr.from_terms([LogPowerTerm(1.0, 0.0, 0), LogPowerTerm(1e-16, 1.0, 0)])
        assert len(expr) == 1
        assert expr.coefficient(1.0) == 0

    def test_canonical_order(self):
        expr = LogPowerExpr.from_terms(
            [
                LogPowerTerm(1.0, 2.0, 0),
                LogPowerTerm(1.0, complex(-1.0, 1.0), 0),
                LogPowerTerm(1.0, complex(-1.0, -1.0), 1),
                LogPowerTerm(1.0, complex(-1.0, -1.0), 0),
            ]
        )
        keys = [(t.m, t.l) for t in expr]
        assert keys == [
            (complex(-1.0, -1.0), 0),
            (complex(-1.0, -1.0), 1),
            (complex(-1.0, 1.0), 0),
            (complex(2.0, 0.0), 0),
        ]


class TestArithmetic:
    def test_addition_and_subtraction(self):
        a = LogPowerExpr.monomial(1.0) + LogPowerExpr.monomial(2.0, coeff=2.0)
        b = LogPowerExpr.monomial(1.0, coeff=-1.0)
        total = a + b
        assert total.coefficient(1.0) == 0
        assert total.coefficient(2.0) == 2.0
        assert (a - a).is_zero

    def test_scalar_multiplication(self):
        expr = LogPowerExpr.monomial(1.0, l=2, coeff=1.5)
        assert (2 * expr).coefficient(1.0, 2) == 3.0
        assert (expr * 1j).coefficient(1.0, 2) == 1.5j
        assert (expr * 0).is_zero

    def test_numpy_scalar_multiplication(self):
        expr = LogPowerExpr.monomial(1.0, coeff=1.5)
        assert (expr * np.int64(2)).coefficient(1.0) == 3.0
        assert (np.int64(2) * expr).coefficient(1.0) == 3.0
        assert (np.float32(0.5) * expr).coefficient(1.0) == 0.75
        assert (expr * np.complex128(1j)).coefficient(1.0) == 1.5j

    def test_negation(self):
        expr = LogPowerExpr.monomial(-0.5, coeff=2.0)
        assert (-expr).coefficient(-0.5) == -2.0

    def test_isclose(self):
        a = LogPowerExpr.monomial(1.0, coeff=1.0)
        b = LogPowerExpr.monomial(1.0, coeff=1.0 + 1e-13)
        c = LogPowerExpr.monomial(1.0, coeff=1.1)
        assert a.isclose(b)
        assert not a.isclose(c)


class TestEvaluation:
    def test_power_and_log(self):
        expr = LogPowerExpr.monomial(2.0, l=1, coeff=3.0)
        assert expr.evaluate(2.0) == pytest.approx(3 * 4 * math.log(2.0))

    def test_conjugate_pair_is_real(self):
        expr = LogPowerExpr.from_terms(
            [LogPowerTerm(0.5, complex(-1.0, 2.0), 0), LogPowerTerm(0.5, complex(-1.0, -2.0), 0)]
        )
        value = expr.evaluate(3.0)
        assert value.imag == pytest.approx(0.0, abs=1e-15)
        assert value.real == pytest.approx(math.cos(2 * math.log(3.0)) / 3.0)

    def test_array_input(self):
        expr = LogPowerExpr.monomial(1.0)
        values = expr.evaluate([1.0, 2.0, 4.0])
        assert values.shape == (3,)
        assert values.real.tolist() == pytest.approx([1.0, 2.0, 4.0])
