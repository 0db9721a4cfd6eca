"""
Main Entry Point.

This module provides the command-line interface: classification of single
curves and corpora, the verification pipeline, and the cusp, point-count and
Fermat-quartic tools. Record streams go to stdout (or --out); tables and
diagnostics go to stderr.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import dotenv
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text
from sympy import isprime

from .ecurve.curve import Curve
from .ecurve.finite_field import count_points_extension
from .ecurve.reduction import reduce_curve
from .modcurves.cusps import ogg_cusps
from .modcurves.fermat import DEFAULT_COEFF_BOUND, fermat_quartic_search
from .qfield.field import EISENSTEIN, FIELDS, GAUSS, field_by_name
from .qfield.rings import primes_above
from .tools.corpus import CorpusRunner, corpus_records, deduplicate
from .tools.record_parser import CurveRecord, RecordParser, ResultRecord, dumps
from .torsion.groups import TorsionGroup
from .utils.config import configure, get_settings
from .utils.errors import ClassificationViolation, InvalidInputError, TorsionGrowthError, VerificationMismatch
from .utils.logger import get_logger, setup_global_logging
from .utils.metrics import CorpusEvaluator
from .workflow.orchestrator import VerificationOrchestrator
from .workflow.state import SUITE_ORDER

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_INTERRUPT = 130

DEFAULT_CORPUS_BOUND = 3


def _emit_lines(lines: List[str], out: Optional[str], stream: Optional[TextIO] = None):
    """Write JSON lines to a file, or to stdout when no path is given."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")
        return
    stream = stream or sys.stdout
    for line in lines:
        stream.write(line + "\n")
    stream.flush()


def _emit_results(results: List[ResultRecord], out: Optional[str]):
    if out:
        RecordParser().write_results(results, out)
    else:
        _emit_lines([dumps(r) for r in results], None)


def _dump_violation(console: Console, exc: ClassificationViolation):
    evidence = json.dumps(exc.evidence, indent=2, sort_keys=True, default=str)
    console.print(Panel(Text(f"{exc}\n\n{evidence}"), title="Classification violation", border_style="red"))


def _expectation_mismatches(record: CurveRecord, result: ResultRecord) -> List[Dict[str, str]]:
    found = []
    if record.expected_torsion_K is not None:
        expected = TorsionGroup.parse(record.expected_torsion_K).format()
        if expected != result.torsion_K:
            found.append({"id": record.id, "check": "torsion_K", "expected": expected, "computed": result.torsion_K})
    if record.expected_torsion_F is not None:
        expected = TorsionGroup.parse(record.expected_torsion_F).format()
        computed = result.torsion_F.get("exact", "|".join(result.torsion_F.get("candidates", [])))
        if expected != computed:
            found.append({"id": record.id, "check": "torsion_F", "expected": expected, "computed": computed})
    return found


def cmd_classify(args: argparse.Namespace, console: Console) -> int:
    """
    Classify one curve (--curve) or every curve of a corpus file (--input).

    Returns:
        0 on success, 2 if an input record's expected groups disagree
    """
    if bool(args.curve) == bool(args.input):
        raise InvalidInputError("classify needs exactly one of --curve or --input")
    if args.curve:
        if not args.field:
            raise InvalidInputError("--curve needs --field")
        E = Curve.parse(args.curve, field_by_name(args.field))
        records = [CurveRecord.from_curve("curve-1", E)]
    else:
        records = RecordParser().read_curves(args.input)
        if args.field:
            records = [r for r in records if r.field == args.field]

    results = CorpusRunner(workers=args.workers).run(records)
    _emit_results(results, args.out)

    mismatches = [m for record, result in zip(records, results) for m in _expectation_mismatches(record, result)]
    if mismatches:
        table = Table(title="Expectation mismatches")
        for column in ("id", "check", "expected", "computed"):
            table.add_column(column)
        for m in mismatches:
            table.add_row(m["id"], m["check"], m["expected"], m["computed"])
        console.print(table)
        return EXIT_VIOLATION
    console.print(f"[green]Classified {len(results)} curve(s)[/green]")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, console: Console) -> int:
    """Run the verification pipeline; nonzero exit on any failing check."""
    orchestrator = VerificationOrchestrator(args.suites, console=console)
    result = orchestrator.run()
    orchestrator.display_results(result)
    for violation in result["violations"]:
        evidence = json.dumps(violation["evidence"], indent=2, sort_keys=True, default=str)
        console.print(Panel(Text(f"{violation['message']}\n\n{evidence}"), title=violation["suite"], border_style="red"))
    if args.out:
        payload = {k: result[k] for k in ("run_id", "suites", "reports", "violations", "errors", "summary", "passed")}
        _emit_lines([json.dumps(payload, sort_keys=True, default=str)], args.out)
    return EXIT_OK if result["passed"] else EXIT_VIOLATION


def _display_corpus_summary(console: Console, summary: Dict[str, Any]):
    histogram = Table(title=f"E(F)_tors over {summary['records']} curves")
    histogram.add_column("Group", style="cyan")
    histogram.add_column("Curves", style="yellow", justify="right")
    for label, count in summary["histogram"].items():
        histogram.add_row(label, str(count))
    console.print(histogram)

    checks = Table(title="Corpus checks")
    checks.add_column("Check", style="cyan")
    checks.add_column("Result", style="yellow", justify="right")
    checks.add_row("Exact results", str(summary["exact"]))
    checks.add_row("Candidate sets", str(summary["candidate_sets"]))
    checks.add_row("Inside the list over F", str(summary["theorem_main"]["members"]))
    checks.add_row("Outside the list over F", str(summary["theorem_main"]["outside"]))
    for name, hit in summary["forbidden"].items():
        checks.add_row(f"Containing {name}", str(hit["count"]))
    if summary["timing"]:
        checks.add_row("Total seconds", f"{summary['timing']['total_seconds']:.2f}")
    console.print(checks)


def cmd_corpus(args: argparse.Namespace, console: Console) -> int:
    """
    Classify a deduplicated corpus and summarize it.

    Returns:
        0 when every record passes the list and forbidden-subgroup checks, 2 otherwise
    """
    if args.input:
        records = deduplicate(RecordParser().read_curves(args.input))
        if args.limit is not None:
            records = records[: args.limit]
    else:
        if not args.field:
            raise InvalidInputError("corpus needs --field when no --input is given")
        records = corpus_records(field_by_name(args.field), args.coeff_bound, args.limit)

    results = CorpusRunner(workers=args.workers).run(records)
    _emit_results(results, args.out)

    evaluator = CorpusEvaluator(results)
    summary = evaluator.evaluate()
    _display_corpus_summary(console, summary)
    bad = evaluator.violations()
    if bad:
        console.print(f"[bold red]Records violating the classification: {', '.join(bad)}[/bold red]")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_cusps(args: argparse.Namespace, console: Console) -> int:
    """Print Ogg's cusp table of X0(n)."""
    table = ogg_cusps(args.n)
    view = Table(title=f"Cusps of X0({table.n})")
    view.add_column("d", justify="right")
    view.add_column("gcd(d, n/d)", justify="right")
    view.add_column("cusps", justify="right", style="yellow")
    for row in table.rows:
        view.add_row(str(row.d), str(row.g), str(row.count))
    view.add_row("total", "", str(table.total))
    console.print(view)

    payload = table.to_dict()
    fields = [field_by_name(args.field)] if args.field else [GAUSS, EISENSTEIN]
    for K in fields:
        payload[f"over_{K.name}"] = table.rational_over(K)
    _emit_lines([json.dumps(payload, sort_keys=True)], args.out)
    return EXIT_OK


def cmd_count_points(args: argparse.Namespace, console: Console) -> int:
    """
    Count points of the reduction of a curve over an extension of its residue field.

    --prime accepts a rational prime (the first prime of O_K above it is used)
    or a prime element of O_K.
    """
    K = field_by_name(args.field)
    E = Curve.parse(args.curve, K)
    value = K.parse(args.prime)
    if value.is_rational() and value.a.denominator == 1 and isprime(int(value.a)):
        pi = primes_above(int(value.a), K)[0]
    else:
        pi = value
    reduced = reduce_curve(E, pi)
    if not reduced.is_good:
        raise InvalidInputError(f"{E} has {reduced.reduction_type} reduction at {pi}")
    q = reduced.residue.field.q
    count = count_points_extension(reduced.curve, args.degree)
    payload = {
        "field": K.name,
        "curve": str(E),
        "pi": str(pi),
        "q": q,
        "degree": args.degree,
        "field_size": q ** args.degree,
        "count": count,
    }
    console.print(f"|E(F_{q ** args.degree})| = [bold yellow]{count}[/bold yellow] for {escape(str(E))} reduced at {escape(str(pi))}")
    _emit_lines([json.dumps(payload, sort_keys=True)], args.out)
    return EXIT_OK


def cmd_fermat_search(args: argparse.Namespace, console: Console) -> int:
    """Search x^4 + y^4 = 1 over K(sqrt(d) : d in --radicand) up to --height."""
    K = field_by_name(args.field)
    radicands = [K.parse(text) for text in args.radicand or []]
    solutions = fermat_quartic_search(K, radicands, args.height, args.coeff_bound)
    lines = [
        json.dumps({"x": str(s.x), "y": str(s.y), "trivial": s.trivial, "height": s.height}, sort_keys=True)
        for s in solutions
    ]
    _emit_lines(lines, args.out)
    nontrivial = sum(1 for s in solutions if not s.trivial)
    console.print(f"{len(solutions)} solutions, {nontrivial} nontrivial")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level (default: LOG_LEVEL or INFO)",
    )
    common.add_argument(
        "--factor-norm-bound",
        type=int,
        default=None,
        help="Largest norm factored in O_K (default: FACTOR_NORM_BOUND or 10^12)",
    )
    common.add_argument("--out", default=None, help="Write output lines to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="Torsion growth of elliptic curves over Q(i) and Q(sqrt(-3)) in their maximal elementary abelian 2-extension",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m src.main classify --field gauss --curve "[0,0,0,4,0]"
  python -m src.main classify --input data/sample/curves.jsonl --out results.jsonl
  python -m src.main verify all
  python -m src.main corpus --field eisenstein --coeff-bound 3 --out corpus.jsonl
  python -m src.main cusps 36
  python -m src.main count-points --field gauss --curve "[0,0,0,4,0]" --prime 5 --degree 2
  python -m src.main fermat-search --field gauss --radicand -7 --height 10
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    field_names = sorted(FIELDS)

    classify = sub.add_parser("classify", parents=[common], help="Classify E(F)_tors of one curve or a corpus file")
    classify.add_argument("--field", choices=field_names)
    classify.add_argument("--curve", help='Coefficients "[a1,a2,a3,a4,a6]"')
    classify.add_argument("--input", help="Line-delimited curve records")
    classify.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")
    classify.set_defaults(handler=cmd_classify)

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suites")
    verify.add_argument(
        "suites", nargs="*", default=["all"], metavar="SUITE",
        help=f"'all' or any of: {', '.join(SUITE_ORDER)}",
    )
    verify.set_defaults(handler=cmd_verify)

    corpus = sub.add_parser("corpus", parents=[common], help="Classify a deduplicated curve corpus")
    corpus.add_argument("--field", choices=field_names)
    corpus.add_argument("--input", help="Line-delimited curve records instead of the enumeration")
    corpus.add_argument(
        "--coeff-bound", type=int, default=DEFAULT_CORPUS_BOUND,
        help=f"Norm bound on the short-model coefficients (default: {DEFAULT_CORPUS_BOUND})",
    )
    corpus.add_argument("--limit", type=int, default=None, help="Classify at most this many curves")
    corpus.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")
    corpus.set_defaults(handler=cmd_corpus)

    cusps = sub.add_parser("cusps", parents=[common], help="Ogg's cusp table of X0(n)")
    cusps.add_argument("n", type=int)
    cusps.add_argument("--field", choices=field_names, help="Only count cusps over this field")
    cusps.set_defaults(handler=cmd_cusps)

    count = sub.add_parser("count-points", parents=[common], help="Count points of a reduced curve")
    count.add_argument("--field", choices=field_names, required=True)
    count.add_argument("--curve", required=True)
    count.add_argument("--prime", required=True, help="Rational prime or prime element of O_K")
    count.add_argument("--degree", type=int, default=1, help="Extension degree over the residue field (default: 1)")
    count.set_defaults(handler=cmd_count_points)

    fermat = sub.add_parser("fermat-search", parents=[common], help="Search x^4 + y^4 = 1 over a bounded grid in a radical tower")
    fermat.add_argument("--field", choices=field_names, required=True)
    fermat.add_argument("--radicand", action="append", help="Adjoin sqrt of this element (at most twice)")
    fermat.add_argument("--height", type=int, default=None, help="Height bound (default: FERMAT_MAX_HEIGHT)")
    fermat.add_argument(
        "--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND,
        help=f"Coordinate bound of the grid numerators (default: {DEFAULT_COEFF_BOUND})",
    )
    fermat.set_defaults(handler=cmd_fermat_search)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    dotenv.load_dotenv()
    console = Console(stderr=True)

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        configure(log_level=args.log_level, factor_norm_bound=args.factor_norm_bound)
        setup_global_logging(get_settings().log_level)
        return args.handler(args, console)
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted[/yellow]")
        return EXIT_INTERRUPT
    except ClassificationViolation as e:
        _dump_violation(console, e)
        return EXIT_VIOLATION
    except VerificationMismatch as e:
        console.print(f"[bold red]Verification mismatch:[/bold red] {escape(str(e))}")
        return EXIT_VIOLATION
    except (TorsionGrowthError, ValueError, FileNotFoundError) as e:
        console.print(f"[bold red]Input error:[/bold red] {escape(str(e))}")
        logger.debug("Input error", exc_info=True)
        return EXIT_INPUT
    except Exception as e:
        console.print(f"\n[bold red]Fatal error: {escape(str(e))}[/bold red]")
        console.print("[dim]Check logs/app.log for detailed error information[/dim]")
        logger.exception("Fatal error")
        return EXIT_INPUT


if __name__ == "__main__":
    exit(main())
