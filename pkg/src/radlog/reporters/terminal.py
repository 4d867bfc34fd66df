"""Rich-based terminal reporter for radlog."""

from __future__ import annotations

from typing import Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.tree import Tree

from radlog.core.models import FactorAnalysis, ProblemSpec, SolutionBasis
from radlog.verification import VerificationReport


def _fmt(value: float) -> str:
    return format(value + 0.0, ".6g")


def _fmt_root(root: complex) -> str:
    if root.imag == 0:
        return _fmt(root.real)
    sign = "+" if root.imag > 0 else "-"
    return f"{_fmt(root.real)}{sign}{_fmt(abs(root.imag))}i"


def roots_row(analysis: FactorAnalysis) -> str:
    """One-line summary, e.g. ``phi=0.5 disc=0.25 I1 roots 0, -1``."""
    m1, m2 = analysis.roots
    return (
        f"phi={_fmt(analysis.phi)} disc={_fmt(analysis.disc)} "
        f"{analysis.case_class.value} roots {_fmt_root(m1)}, {_fmt_root(m2)}"
    )


def print_roots(
    spec: ProblemSpec,
    analyses: Sequence[FactorAnalysis],
    console: Optional[Console] = None,
) -> None:
    """Table of phi, discriminant, case class and roots per factor."""
    if console is None:
        console = Console()

    table = Table(title=f"Characteristic roots (p={_fmt(spec.p)}, n={spec.n})")
    table.add_column("Factor", justify="right")
    table.add_column("k", justify="right")
    table.add_column("phi", justify="right")
    table.add_column("disc", justify="right")
    table.add_column("Class")
    table.add_column("Roots")

    for idx, (analysis, factor) in enumerate(zip(analyses, spec.factors)):
        m1, m2 = analysis.roots
        table.add_row(
            str(idx),
            str(factor.k),
            _fmt(analysis.phi),
            _fmt(analysis.disc),
            analysis.case_class.value,
            f"{_fmt_root(m1)}, {_fmt_root(m2)}",
        )
    console.print(table)


def print_basis(basis: SolutionBasis, console: Optional[Console] = None) -> None:
    """Basis terms grouped by owning factor, with the term count in the subtitle."""
    if console is None:
        console = Console()

    tree = Tree(f"[bold]u({basis.spec.variable})[/bold]")
    branches: dict[int, Tree] = {}
    for term in basis.terms:
        owner = term.factor_index
        if owner not in branches:
            title = "foreign" if owner < 0 else f"factor {owner}"
            branches[owner] = tree.add(f"[cyan]{title}[/cyan]")
        suffix = f" [dim](shared with {list(term.shared_with)})[/dim]" if term.shared_with else ""
        branches[owner].add(term.render(basis.spec.variable) + suffix)

    subtitle = f"{basis.count} terms | {basis.mode.value} mode"
    console.print(Panel(tree, title="[bold]radlog basis[/bold]", subtitle=subtitle))


def print_verification(
    report: VerificationReport,
    detailed: bool = False,
    console: Optional[Console] = None,
) -> None:
    """Per-term symbolic residual and numeric max relative residual."""
    if console is None:
        console = Console()

    numeric_terms = {t.index: t for t in report.numeric.terms} if report.numeric else {}

    table = Table(title="Verification")
    table.add_column("#", justify="right")
    table.add_column("Term")
    table.add_column("Symbolic max |c|", justify="right")
    table.add_column("Numeric max rel", justify="right")
    table.add_column("Status")

    for row in report.symbolic:
        num = numeric_terms.get(row.index)
        ok = row.passed and (num is None or num.passed)
        status = "[green]OK[/green]" if ok else "[red]FAIL[/red]"
        table.add_row(
            str(row.index),
            row.label,
            f"{row.max_coefficient:.3g}",
            "skipped" if num is None else f"{num.max_rel:.3g}",
            status,
        )
    console.print(table)

    if report.numeric_skipped:
        console.print("[yellow]numeric check skipped (0 points)[/yellow]")
    elif detailed and report.numeric is not None:
        console.print(
            f"numeric: {len(report.numeric.per_point)} points, seed {report.seed}, "
            f"max rel {report.numeric.max_rel:.3g}, mean rel {report.numeric.mean_rel:.3g}"
        )

    verdict = "[green]PASSED[/green]" if report.passed else "[red]FAILED[/red]"
    console.print(f"{verdict} | {len(report.symbolic)} terms")
    for failure in report.failures():
        console.print(f"[red]failing term {failure}[/red]")


def print_values(
    rows: Sequence[tuple[Sequence[float], float]],
    console: Optional[Console] = None,
) -> None:
    """Table of u(x) values."""
    if console is None:
        console = Console()

    table = Table(title="u(x)")
    table.add_column("x")
    table.add_column("u", justify="right")
    for point, value in rows:
        table.add_row(", ".join(_fmt(c) for c in point), repr(value))
    console.print(table)
