"""JUnit XML reporter for radlog verification runs.

Each basis term becomes a test case, so CI systems that consume test results
(GitHub Actions, Jenkins) show which term failed which oracle.
"""

from pathlib import Path
from typing import Optional
from xml.dom.minidom import parseString
from xml.etree.ElementTree import Element, SubElement, tostring

from radlog.verification import VerificationReport


def _term_info(report: VerificationReport) -> list[dict]:
    """Flatten the report into one dict per term."""
    numeric = {t.index: t for t in report.numeric.terms} if report.numeric else {}
    info = []
    for row in report.symbolic:
        num = numeric.get(row.index)
        messages = []
        if not row.passed:
            messages.append(
                f"symbolic residual {row.max_coefficient:.3g} > {report.symbolic_tol:.3g}"
            )
        if num is not None and not num.passed:
            messages.append(
                f"numeric relative residual {num.max_rel:.3g} > {report.numeric.threshold:.3g}"
            )
        info.append({"index": row.index, "label": row.label, "failures": messages})
    return info


def to_junit_xml(report: VerificationReport, output_path: Optional[str] = None) -> str:
    """Generate JUnit XML from a verification report.

    Args:
        report: The VerificationReport to export.
        output_path: If provided, write XML to this file path.

    Returns:
        The XML string.
    """
    terms = _term_info(report)
    failures = sum(1 for t in terms if t["failures"])

    testsuites = Element("testsuites")
    testsuite = SubElement(testsuites, "testsuite")
    testsuite.set("name", "radlog")
    testsuite.set("tests", str(len(terms)))
    testsuite.set("failures", str(failures))
    testsuite.set("errors", "0")

    for term in terms:
        testcase = SubElement(testsuite, "testcase")
        testcase.set("name", f"#{term['index']} {term['label']}")
        testcase.set("classname", "radlog.basis")

        if term["failures"]:
            failure = SubElement(testcase, "failure")
            failure.set("message", "; ".join(term["failures"]))
            failure.set("type", "ResidualError")
            failure.text = "\n".join(term["failures"])

    raw_xml = tostring(testsuites, encoding="unicode", xml_declaration=True)
    pretty_xml = parseString(raw_xml).toprettyxml(indent="  ")
    # Remove extra xml declaration from minidom
    lines = pretty_xml.split("\n")
    pretty_xml = "\n".join(lines[1:])
    pretty_xml = '<?xml version="1.0" encoding="UTF-8"?>\n' + pretty_xml.strip()

    if output_path:
        Path(output_path).write_text(pretty_xml, encoding="utf-8")

    return pretty_xml
