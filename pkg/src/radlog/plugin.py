"""Pytest plugin for radlog.

Provides fixtures and a marker for testing radial solution bases.

Usage:
    def test_laplace(make_problem, radlog_report):
        spec = make_problem(2, 3, [((0, 0, 0), 0, 1)])
        report = verify_problem(spec, points=20)
        radlog_report(report)
        assert report.passed
"""

import numpy as np
import pytest

from radlog.core.models import make_problem as _make_problem
from radlog.reporters.terminal import print_verification


def pytest_configure(config):
    """Register the radlog marker."""
    config.addinivalue_line(
        "markers",
        "radlog: mark test as a radlog solution-basis test",
    )


@pytest.fixture
def make_problem():
    """Fixture that returns the ProblemSpec factory.

    Usage:
        def test_something(make_problem):
            spec = make_problem(1, 1, [((1,), 0, 2)])
    """
    return _make_problem


@pytest.fixture
def rng():
    """Seeded numpy Generator, so randomized checks are reproducible."""
    return np.random.default_rng(1234)


@pytest.fixture
def radlog_report():
    """Fixture that prints collected verification reports after the test completes.

    Usage:
        def test_something(radlog_report):
            report = verify_problem(spec)
            radlog_report(report)
    """
    _reports: list = []

    def _collect(report):
        _reports.append(report)

    yield _collect

    for report in _reports:
        print_verification(report, detailed=True)
