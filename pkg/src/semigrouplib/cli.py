"""The ``semigrouplib`` command-line tool.

Exit codes: 0 on success, 1 on invalid input, 2 when an enumeration exceeds
its budget, and 3 when a cross-check finds a disagreement.

"""

import argparse
import io as _stdio
import json as _json
import logging
import sys
from typing import List, Optional

import pandas as pd

from . import __version__
from . import reports as _reports
from . import survey as _survey
from ._util import parse_vector
from .core import LimitExceeded, SemigroupOptions, build
from .io import documents as _documents
from .planar import ALL_PAIRS_COVERED, is_ulrich, orient

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_LIMIT_EXCEEDED = 2
EXIT_MISMATCH = 3


# private helpers ======================================================================


def _options(args) -> SemigroupOptions:
    if args.budget is None:
        return SemigroupOptions()
    return SemigroupOptions(enumeration_budget=args.budget)


def _write_table(table: pd.DataFrame, fmt: str, out):
    if fmt == "csv":
        _documents.write_csv(out, table)
    elif fmt == "structured":
        records = _json.loads(table.to_json(orient="records"))
        out.write(_documents.dumps({"rows": records}))
    else:
        out.write(table.to_string(index=False) + "\n")


def _points_table(points, dim: int) -> pd.DataFrame:
    return pd.DataFrame([list(p) for p in points], columns=[f"c{i + 1}" for i in range(dim)])


# commands =============================================================================


def _analyze(args, out) -> int:
    rays = _documents.read_rays(args.input)
    report = _reports.analyze(rays, _options(args), timing=args.timing)

    if args.format == "structured":
        out.write(_documents.dumps(_reports.to_document(report)))
    elif args.format == "csv":
        row = {
            key: value
            for key, value in _reports.to_document(report).items()
            if isinstance(value, (bool, int, float)) or value is None
        }
        _documents.write_csv(out, pd.DataFrame([row]))
    else:
        out.write(_reports.render_text(report))
    return EXIT_OK


def _hilbert(args, out) -> int:
    rays = _documents.read_rays(args.input)
    model = build(rays, _options(args))

    if args.format == "structured":
        doc = {
            "rays": [list(r) for r in model.rays.rays],
            "hilbert_basis": [list(p) for p in model.hilbert_basis],
        }
        out.write(_documents.dumps(doc))
    elif args.format == "csv":
        _documents.write_csv(out, _points_table(model.hilbert_basis, model.dim))
    else:
        for p in model.hilbert_basis:
            out.write(f"{p}\n")
    return EXIT_OK


def _check_ulrich(args, out) -> int:
    rays = _documents.read_rays(args.input)
    element = parse_vector(args.element)
    om = orient(build(rays, _options(args)))
    verdict = is_ulrich(om, element)

    if verdict.certificate == ALL_PAIRS_COVERED:
        certificate = ALL_PAIRS_COVERED
    else:
        certificate = [list(p) for p in verdict.certificate]

    if args.format == "text":
        if verdict.ulrich:
            out.write(f"{verdict.element} is an Ulrich element\n")
        else:
            p, q = verdict.certificate
            out.write(
                f"{verdict.element} is not an Ulrich element: "
                f"{p} + {q} escapes every shift\n"
            )
    else:
        doc = {
            "element": list(verdict.element),
            "ulrich": verdict.ulrich,
            "certificate": certificate,
            "basis_pairs": verdict.basis_pairs,
        }
        if args.format == "csv":
            doc["certificate"] = str(certificate)
            _documents.write_csv(out, pd.DataFrame([doc]))
        else:
            out.write(_documents.dumps(doc))
    return EXIT_OK


def _survey_command(args, out) -> int:
    table = _survey.survey(
        args.max,
        require_ones_interior=args.require_ones_interior,
        jobs=args.jobs,
        options=_options(args),
    )
    fmt = "csv" if args.csv else args.format
    _write_table(table, fmt, out)

    if fmt == "text":
        out.write("\n" + _survey.summarize(table).to_string() + "\n")
    return EXIT_MISMATCH if table["mismatch"].any() else EXIT_OK


def _oracle_diff_command(args, out) -> int:
    mismatches = _survey.oracle_diff(args.max, jobs=args.jobs, options=_options(args))

    if args.format == "text":
        for m in mismatches:
            out.write(f"{m}\n")
        out.write(f"{len(mismatches)} mismatches\n")
    else:
        table = pd.DataFrame(
            [
                {
                    "instance": str(m.instance),
                    "check": m.check,
                    "fast": m.fast,
                    "oracle": m.oracle,
                }
                for m in mismatches
            ],
            columns=["instance", "check", "fast", "oracle"],
        )
        _write_table(table, args.format, out)

    return EXIT_MISMATCH if mismatches else EXIT_OK


def _validate(args, out) -> int:
    document = _documents.read_report(args.input)
    problems = _reports.validate_document(document, _options(args))
    for problem in problems:
        out.write(f"{problem}\n")
    if problems:
        return EXIT_MISMATCH
    out.write("report is consistent\n")
    return EXIT_OK


# parser ===============================================================================


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="largest ray determinant whose parallelotope will be enumerated",
    )
    common.add_argument(
        "--format",
        choices=["text", "structured", "csv"],
        default="text",
        help="output format (structured is JSON)",
    )
    common.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="semigrouplib",
        description="Classify normal simplicial affine semigroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="classify one semigroup")
    analyze.add_argument("input", help='JSON document with a "rays" field, or - for stdin')
    analyze.add_argument("--timing", action="store_true", help="record the elapsed time")
    analyze.set_defaults(handler=_analyze)

    hilbert = commands.add_parser("hilbert", parents=[common], help="print the Hilbert basis")
    hilbert.add_argument("input", help='JSON document with a "rays" field, or - for stdin')
    hilbert.set_defaults(handler=_hilbert)

    check = commands.add_parser(
        "check-ulrich", parents=[common], help="test one interior element of a planar semigroup"
    )
    check.add_argument("input", help='JSON document with a "rays" field, or - for stdin')
    check.add_argument("--element", required=True, help="the element, as x,y")
    check.set_defaults(handler=_check_ulrich)

    for name, handler, text in [
        ("survey", _survey_command, "tabulate every planar semigroup with bounded rays"),
        ("oracle-diff", _oracle_diff_command, "cross-check fast paths against brute force"),
    ]:
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("--max", type=int, required=True, help="bound on ray entries")
        sub.add_argument("--jobs", type=int, default=1, help="number of worker processes")
        sub.set_defaults(handler=handler)
        if name == "survey":
            sub.add_argument(
                "--require-ones-interior",
                action="store_true",
                help="only cones with (1, 1) in their interior",
            )
            sub.add_argument("--csv", action="store_true", help="same as --format csv")

    validate = commands.add_parser(
        "validate", parents=[common], help="recompute a report and compare"
    )
    validate.add_argument("input", help="a report written with --format structured")
    validate.set_defaults(handler=_validate)

    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    """Run the tool and return its exit code.

    Parameters
    ----------
    argv : Optional[List[str]]
        The arguments, without the program name. Default: ``sys.argv[1:]``.
    out : Optional[TextIO]
        Where results are written. Default: standard output.

    """
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on a bad invocation, which is invalid input here
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID_INPUT
    if out is None:
        out = sys.stdout

    level = logging.DEBUG if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(name)s: %(message)s")
    logging.getLogger("semigrouplib").setLevel(level)

    # buffered so that a failing command prints nothing to out
    buffer = _stdio.StringIO()
    try:
        code = args.handler(args, buffer)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT_EXCEEDED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    out.write(buffer.getvalue())
    return code


def run():
    sys.exit(main())
