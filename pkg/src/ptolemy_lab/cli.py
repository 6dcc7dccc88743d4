"""Command line front end.

Subcommands: analyze, closure, mutate, quiver, verify, serve.  All JSON
output goes through the shared serializer, so a report written here is byte
identical to the same report fetched over HTTP.

Exit codes: 0 success (analyze: Ptolemy diagram; mutate: closed result),
1 analyze on a non-Ptolemy diagram or failed verification, 2 parse or size
errors, 3 mutate when the result is not extension closed, 4 mutate at a
diagonal without the required role.
"""
from __future__ import annotations

import argparse
import os
import sys

from .errors import DiagonalRoleError, LabError, ParseError, SizeLimitError
from .mutation import backward_replace, forward_replace
from .polygon import Pair
from .ptolemy import (
    DEFAULT_ENUMERATION_BOUND,
    CellKind,
    Diagram,
    cells_bordering,
    ptolemy_closure,
)
from .serialize import (
    analysis_report,
    document_dict,
    dumps,
    loads_document,
    mutation_report_dict,
    quiver_dict,
    quiver_dot,
)
from .verify import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_NOT_CLOSED = 3
EXIT_ROLE = 4


def _read_document(path: str) -> Diagram:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads_document(text)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_diagonal_option(diagram: Diagram, text: str) -> Pair:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected a diagonal as u,v got {text!r}")
    try:
        u, v = (int(part) for part in parts)
    except ValueError:
        raise ParseError(f"diagonal endpoints must be integers, got {text!r}") from None
    size = diagram.polygon.size
    if not (0 <= u < size and 0 <= v < size):
        raise ParseError(f"vertex out of range for a {size}-gon: {text!r}")
    try:
        return diagram.polygon.diagonal(u, v)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _not_closed_reason(diagram: Diagram, removed: Pair) -> str:
    offending = sorted(
        {
            cell.kind.value
            for cell in cells_bordering(diagram, removed)
            if cell.kind is not CellKind.EMPTY
        }
    )
    u, v = removed
    if offending:
        cells = ", ".join(f"{kind} cell with ≥ 4 vertices" for kind in offending)
        return f"result not closed under extensions: diagonal {u},{v} borders a {cells}"
    return f"result not closed under extensions after replacing diagonal {u},{v}"


def _cmd_analyze(args: argparse.Namespace) -> int:
    diagram = _read_document(args.input)
    report = analysis_report(diagram)
    _emit(dumps(report), args.output)
    return EXIT_OK if report["ptolemy"] else EXIT_INVALID


def _cmd_closure(args: argparse.Namespace) -> int:
    diagram = _read_document(args.input)
    _emit(dumps(document_dict(ptolemy_closure(diagram))), args.output)
    return EXIT_OK


def _cmd_mutate(args: argparse.Namespace) -> int:
    diagram = _read_document(args.input)
    diagonal = _parse_diagonal_option(diagram, args.diagonal)
    mutate = backward_replace if args.direction == "backward" else forward_replace
    report = mutate(diagram, diagonal)
    _emit(dumps(mutation_report_dict(report)), args.output)
    if report.extension_closed:
        return EXIT_OK
    sys.stderr.write(_not_closed_reason(diagram, diagonal) + "\n")
    return EXIT_NOT_CLOSED


def _cmd_quiver(args: argparse.Namespace) -> int:
    if args.size < 4:
        raise ParseError(f"size must be at least 4, got {args.size}")
    if args.format == "dot":
        _emit(quiver_dot(args.size), args.output)
    else:
        _emit(dumps(quiver_dict(args.size)), args.output)
    return EXIT_OK


def _verify_bound() -> int:
    raw = os.environ.get("PTOLEMY_LAB_MAX_SIZE")
    if raw is None:
        return DEFAULT_ENUMERATION_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"PTOLEMY_LAB_MAX_SIZE must be an integer, got {raw!r}") from None


def _cmd_verify(args: argparse.Namespace) -> int:
    bound = _verify_bound()
    if not 4 <= args.max_size <= bound:
        raise SizeLimitError(
            f"max size must be between 4 and {bound}, got {args.max_size}"
        )
    reports = run_suites(
        args.suite, max_size=args.max_size, samples=args.samples, seed=args.seed
    )
    for report in reports:
        print(report.summary())
        for failure in report.failures:
            print(f"  counterexample: {failure}")
    return EXIT_OK if all(report.passed for report in reports) else EXIT_INVALID


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_service  # pulls in the web stack only when serving

    return run_service(host=args.host, port=args.port, static_dir=args.static)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptolemy-lab",
        description="Analyze, mutate, and serve Ptolemy diagrams of convex polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full report on one diagram document")
    analyze.add_argument("--input", required=True, help="path to a diagram document")
    analyze.add_argument("--output", help="write the report here instead of stdout")
    analyze.set_defaults(handler=_cmd_analyze)

    closure = sub.add_parser("closure", help="smallest Ptolemy diagram containing the input")
    closure.add_argument("--input", required=True)
    closure.add_argument("--output")
    closure.set_defaults(handler=_cmd_closure)

    mutate = sub.add_parser("mutate", help="replace a diagonal through its weak triangle")
    mutate.add_argument("--input", required=True)
    mutate.add_argument("--diagonal", required=True, metavar="u,v")
    mutate.add_argument("--direction", choices=("backward", "forward"), default="backward")
    mutate.add_argument("--output")
    mutate.set_defaults(handler=_cmd_mutate)

    quiver = sub.add_parser("quiver", help="irreducible-morphism quiver of a polygon")
    quiver.add_argument("--size", type=int, required=True)
    quiver.add_argument("--format", choices=("dot", "json"), default="json")
    quiver.add_argument("--output")
    quiver.set_defaults(handler=_cmd_quiver)

    verify = sub.add_parser("verify", help="run exhaustive invariant suites")
    verify.add_argument("--max-size", type=int, default=6)
    verify.add_argument(
        "--suite",
        action="append",
        choices=SUITE_NAMES,
        help="restrict to one or more suites (default: all)",
    )
    verify.add_argument("--samples", type=int, default=100_000)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(handler=_cmd_verify)

    serve = sub.add_parser("serve", help="HTTP API plus optional static UI bundle")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--static", help="directory with the built explorer UI")
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, SizeLimitError) as exc:
        sys.stderr.write(f"{exc.code}: {exc}\n")
        return EXIT_PARSE
    except DiagonalRoleError as exc:
        sys.stderr.write(f"{exc.code}: {exc}\n")
        return EXIT_ROLE
    except LabError as exc:
        sys.stderr.write(f"{exc.code}: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
