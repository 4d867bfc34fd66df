"""Tests for the JSON, JUnit XML and terminal reporters."""

import json
import os
import tempfile
import xml.etree.ElementTree as ET

import pytest
from rich.console import Console

from radlog.core.basis import analyze_problem, construct_solution_basis
from radlog.reporters.json_reporter import load_basis, to_json
from radlog.reporters.junit import to_junit_xml
from radlog.reporters.terminal import (
    print_basis,
    print_roots,
    print_values,
    print_verification,
    roots_row,
)
from radlog.verification import verify_problem
from tests.problems import euler, laplace, shared_root_euler


@pytest.fixture
def passing_report():
    return verify_problem(laplace(3), points=10, seed=1)


@pytest.fixture
def failing_report():
    return verify_problem(laplace(3), inject=[(1.0, 0)], points=10, seed=1)


def recorded():
    return Console(record=True, width=120)


# ---------------------------------------------------------------------------
# JSON reporter
# ---------------------------------------------------------------------------


class TestJsonReporter:
    def test_basis_document(self):
        data = json.loads(to_json(construct_solution_basis(euler(1.0, 4.0))))
        assert data["count"] == 2
        assert data["mode"] == "per-factor"
        assert [t["kind"] for t in data["terms"]] == ["CosLog", "SinLog"]
        assert data["terms"][0]["frequency"] == 2.0
        assert data["spec"]["factors"][0]["lambda"] == 4.0

    def test_writes_to_file(self):
        basis = construct_solution_basis(shared_root_euler(), mode="combined")
        with tempfile.NamedTemporaryFile(suffix=".json", delete=False) as f:
            path = f.name
        try:
            to_json(basis, output_path=path)
            assert load_basis(path) == basis
        finally:
            os.unlink(path)

    def test_report_document(self, failing_report):
        data = json.loads(to_json(failing_report))
        assert data["passed"] is False
        assert [row["passed"] for row in data["symbolic"]] == [True, True, False]
        assert data["numeric"]["terms"][2]["passed"] is False

    def test_custom_indent(self):
        basis = construct_solution_basis(laplace(2))
        compact = to_json(basis, indent=0)
        indented = to_json(basis, indent=4)
        assert len(indented) > len(compact)


# ---------------------------------------------------------------------------
# JUnit reporter
# ---------------------------------------------------------------------------


class TestJunitReporter:
    def test_passing(self, passing_report):
        root = ET.fromstring(to_junit_xml(passing_report))
        suite = root.find("testsuite")
        assert suite.get("name") == "radlog"
        assert suite.get("tests") == "2"
        assert suite.get("failures") == "0"
        names = [tc.get("name") for tc in suite.findall("testcase")]
        assert names == ["#0 1", "#1 r^(-1)"]

    def test_failing(self, failing_report):
        root = ET.fromstring(to_junit_xml(failing_report))
        cases = root.find("testsuite").findall("testcase")
        failure = cases[2].find("failure")
        assert failure is not None
        assert failure.get("type") == "ResidualError"
        assert "symbolic residual" in failure.get("message")
        assert "numeric relative residual" in failure.get("message")
        assert cases[0].find("failure") is None

    def test_declaration_and_file(self, passing_report):
        with tempfile.NamedTemporaryFile(suffix=".xml", delete=False) as f:
            path = f.name
        try:
            xml = to_junit_xml(passing_report, output_path=path)
            assert xml.startswith('<?xml version="1.0" encoding="UTF-8"?>')
            with open(path) as f:
                assert f.read() == xml
        finally:
            os.unlink(path)

    def test_skipped_numeric_stage(self):
        report = verify_problem(laplace(3), points=0)
        root = ET.fromstring(to_junit_xml(report))
        assert root.find("testsuite").get("failures") == "0"


# ---------------------------------------------------------------------------
# Terminal reporter
# ---------------------------------------------------------------------------


class TestTerminalReporter:
    def test_roots_row(self):
        spec = euler(3.0, 1.0)
        (analysis,) = analyze_problem(spec)
        assert roots_row(analysis) == "phi=1 disc=0 I3 roots -1, -1"

    def test_roots_table(self):
        console = recorded()
        spec = laplace(4)
        print_roots(spec, analyze_problem(spec), console=console)
        out = console.export_text()
        assert "p=2, n=4" in out
        assert "I1" in out

    def test_basis_tree(self):
        console = recorded()
        print_basis(construct_solution_basis(shared_root_euler(), mode="combined"), console=console)
        out = console.export_text()
        assert "factor 0" in out
        assert "factor 1" in out
        assert "shared with [1]" in out
        assert "4 terms | combined mode" in out

    def test_verification_passed(self, passing_report):
        console = recorded()
        print_verification(passing_report, detailed=True, console=console)
        out = console.export_text()
        assert "PASSED" in out
        assert "10 points, seed 1" in out

    def test_verification_failed(self, failing_report):
        console = recorded()
        print_verification(failing_report, console=console)
        out = console.export_text()
        assert "FAILED" in out
        assert "failing term #2 r^(1) (symbolic)" in out

    def test_verification_skipped(self):
        console = recorded()
        print_verification(verify_problem(laplace(3), points=0), console=console)
        out = console.export_text()
        assert "numeric check skipped (0 points)" in out
        assert "skipped" in out

    def test_values(self):
        console = recorded()
        print_values([([1.0, 2.0], 0.5)], console=console)
        assert "1, 2" in console.export_text()
