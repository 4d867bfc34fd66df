"""Command-line front end: ``radlog roots|solve|verify|eval <spec.json>``.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from radlog.config import SpecDocument, load_spec
from radlog.core.basis import analyze_problem, construct_solution_basis
from radlog.errors import RadlogError
from radlog.numeric.evaluate import as_point, eval_solution
from radlog.reporters.json_reporter import to_json
from radlog.reporters.junit import to_junit_xml
from radlog.reporters.terminal import (
    print_basis,
    print_roots,
    print_values,
    print_verification,
    roots_row,
)
from radlog.verification import verify_problem

logger = logging.getLogger("radlog")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def _floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _injected(text: str) -> tuple[float, int]:
    exponent, _, power = text.partition(":")
    try:
        return float(exponent), int(power) if power else 0
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected EXPONENT[:LOGPOWER], got {text!r}") from exc


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_roots(doc: SpecDocument, args: argparse.Namespace, console: Console) -> int:
    spec = doc.to_problem()
    analyses = analyze_problem(spec, doc.options.eps_case)
    print_roots(spec, analyses, console=console)
    for idx, analysis in enumerate(analyses):
        console.print(f"factor {idx}: {roots_row(analysis)}", markup=False, highlight=False)
    return EXIT_OK


def cmd_solve(doc: SpecDocument, args: argparse.Namespace, console: Console) -> int:
    spec = doc.to_problem()
    basis = construct_solution_basis(spec, doc.options.eps_case, mode=doc.options.mode)
    if args.json:
        _emit(to_json(basis), args.output)
        return EXIT_OK
    print_basis(basis, console=console)
    console.print(f"{basis.count} terms", highlight=False)
    return EXIT_OK


def cmd_verify(doc: SpecDocument, args: argparse.Namespace, console: Console) -> int:
    opts = doc.options
    report = verify_problem(
        doc.to_problem(),
        mode=opts.mode,
        inject=args.inject_term or (),
        points=opts.points,
        seed=opts.seed,
        cfg=doc.fd_config(),
        symbolic_tol=opts.symbolic_tol,
        numeric_tol=opts.numeric_tol,
        eps_case=opts.eps_case,
        low=opts.low,
        high=opts.high,
    )
    if args.junit:
        to_junit_xml(report, output_path=args.junit)
    if args.json:
        _emit(to_json(report), args.output)
    else:
        print_verification(report, detailed=args.verbose, console=console)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_eval(doc: SpecDocument, args: argparse.Namespace, console: Console) -> int:
    spec = doc.to_problem()
    basis = construct_solution_basis(spec, doc.options.eps_case, mode=doc.options.mode)
    rows = []
    for coords in args.at:
        point = as_point(coords, spec.n)
        rows.append((point.tolist(), eval_solution(basis, point, args.coeffs)))
    if args.json:
        doc_rows = [{"point": point, "value": value} for point, value in rows]
        _emit(json.dumps({"values": doc_rows}, indent=2), None)
    else:
        print_values(rows, console=console)
    return EXIT_OK


_COMMANDS = {
    "roots": cmd_roots,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "eval": cmd_eval,
}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radlog",
        description="Radial log-power solutions of iterated singular Euler-type equations.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    roots = sub.add_parser("roots", help="characteristic roots and case class per factor")
    roots.add_argument("spec_file")

    solve = sub.add_parser("solve", help="list the radial solution basis")
    solve.add_argument("spec_file")
    solve.add_argument("--json", action="store_true", help="machine-readable output")
    solve.add_argument("--mode", choices=["per-factor", "paper", "combined"], default=None)
    solve.add_argument("--output", help="write machine-readable output to this file")

    verify = sub.add_parser("verify", help="check every basis term with both oracles")
    verify.add_argument("spec_file")
    verify.add_argument("--points", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--h-rel", dest="h_rel", type=float, default=None)
    verify.add_argument("--mode", choices=["per-factor", "paper", "combined"], default=None)
    verify.add_argument(
        "--inject-term",
        dest="inject_term",
        type=_injected,
        action="append",
        metavar="EXPONENT[:LOGPOWER]",
        help="add a foreign r^e (ln r)^l term (negative control)",
    )
    verify.add_argument("--json", action="store_true", help="machine-readable output")
    verify.add_argument("--junit", help="write a JUnit XML report to this path")
    verify.add_argument("--output", help="write machine-readable output to this file")

    evaluate = sub.add_parser("eval", help="evaluate the weighted solution at points")
    evaluate.add_argument("spec_file")
    evaluate.add_argument("--at", type=_floats, action="append", required=True)
    evaluate.add_argument("--coeffs", type=_floats, default=None)
    evaluate.add_argument("--json", action="store_true", help="machine-readable output")

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None, console: Optional[Console] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    console = console or Console()
    err_console = Console(stderr=True, soft_wrap=True)

    try:
        doc = load_spec(args.spec_file)
        doc = doc.with_overrides(
            points=getattr(args, "points", None),
            seed=getattr(args, "seed", None),
            h_rel=getattr(args, "h_rel", None),
            mode=getattr(args, "mode", None),
        )
        logger.debug("loaded %s: p=%g n=%d q=%d", args.spec_file, doc.p, doc.n, len(doc.factors))
        return _COMMANDS[args.command](doc, args, console)
    except RadlogError as exc:
        err_console.print(f"[red]error:[/red] {escape(str(exc))}", highlight=False)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
