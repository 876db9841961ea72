"""
Command-line surface.

    symtope analyze builtin:rp2 --hstar --json
    symtope compare builtin:sphere_a builtin:sphere_b
    symtope corpus list
    symtope sweep-subcomplexes complex.json

Exit codes: 0 success, 1 usage error (bad flags, unreadable or malformed
input, unknown builtin), 2 when a size guard skipped a field that was
explicitly requested.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ValidationError

from symtope.core.config import Settings, settings as default_settings
from symtope.core.errors import CorpusError, SymtopeError
from symtope.core.logging import configure_logging, configure_sentry
from symtope.corpus import BUILTIN_PREFIX, corpus_repository
from symtope.schemas import (
    AnalysisOptions,
    AnalysisReport,
    ApiError,
    CompareReport,
    ComplexFile,
    CorpusEntry,
    CorpusList,
    ErrorDetail,
    GraphFile,
    Skipped,
)
from symtope.services.analysis import analysis_service
from symtope.services.complexes import SimplicialComplex

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2

# option flag -> PolytopeSummary field it requests
REQUESTED_FIELDS = {
    "hstar": "hstar",
    "hilbert": "idp",
    "groebner": "groebner",
    "triangulate": "triangulation",
    "facets": "facets",
}


class UsageError(Exception):
    def __init__(self, code: str, message: str, detail: Optional[str] = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail = detail


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _permutation(text: str) -> List[int]:
    try:
        order = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated column indices, got {text!r}"
        )
    if sorted(order) != list(range(1, len(order) + 1)):
        raise argparse.ArgumentTypeError("permutation must list 1..n exactly once")
    return order


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtope",
        description="Symmetric homology and cohomology polytopes of complexes",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log to stderr (-v info, -vv debug)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument(
            "--json",
            dest="output",
            action="store_const",
            const="json",
            help="JSON output",
        )
        group.add_argument(
            "--table",
            dest="output",
            action="store_const",
            const="table",
            help="Aligned text (default)",
        )
        p.set_defaults(output="table")

    def guard_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-minors", type=_positive_int, help="Guard on predicted minors"
        )
        p.add_argument(
            "--max-points",
            type=_positive_int,
            help="Guard on enumerated lattice points",
        )
        p.add_argument(
            "--max-cells",
            type=_positive_int,
            help="Guard on triangulation cells and Gröbner work",
        )

    analyze = sub.add_parser("analyze", help="Report on one complex")
    analyze.add_argument("input", help="JSON file or builtin:NAME")
    analyze.add_argument(
        "--which", choices=["homology", "cohomology", "both"], default="both"
    )
    analyze.add_argument("--hstar", action="store_true", help="Ehrhart h*-vector")
    analyze.add_argument(
        "--hilbert", action="store_true", help="Hilbert numerator and IDP witnesses"
    )
    analyze.add_argument(
        "--groebner", action="store_true", help="Gröbner basis of the toric ideal"
    )
    analyze.add_argument(
        "--triangulate",
        action="store_true",
        help="Triangulation read off the Gröbner basis",
    )
    analyze.add_argument("--facets", action="store_true", help="List facet normals")
    analyze.add_argument(
        "--seed", type=int, default=0, help="Seed for the division-closure trials"
    )
    analyze.add_argument(
        "--permute", type=_permutation, help="1-based column order, e.g. 3,1,2"
    )
    output_flags(analyze)
    guard_flags(analyze)

    compare = sub.add_parser(
        "compare", help="Fingerprints and equivalence routes for two complexes"
    )
    compare.add_argument("first")
    compare.add_argument("second")
    compare.add_argument(
        "--which", choices=["homology", "cohomology"], default="cohomology"
    )
    compare.add_argument(
        "--hstar", action="store_true", help="Include h* in the fingerprints"
    )
    output_flags(compare)
    guard_flags(compare)

    corpus = sub.add_parser("corpus", help="Built-in complexes")
    corpus_sub = corpus.add_subparsers(dest="corpus_command", required=True)
    corpus_list = corpus_sub.add_parser("list")
    output_flags(corpus_list)
    corpus_show = corpus_sub.add_parser("show")
    corpus_show.add_argument("name")
    output_flags(corpus_show)

    sweep = sub.add_parser(
        "sweep-subcomplexes", help="Reflexivity after deleting top facets"
    )
    sweep.add_argument("input", help="JSON file or builtin:NAME")
    sweep.add_argument(
        "--max-deleted", type=int, help="Delete at most this many facets at a time"
    )
    output_flags(sweep)
    guard_flags(sweep)
    return parser


GUARD_FLAGS = (
    ("max_minors", "MAX_MINORS"),
    ("max_points", "MAX_POINTS"),
    ("max_cells", "MAX_CELLS"),
)


def derived_settings(
    args: argparse.Namespace, base: Settings = default_settings
) -> Settings:
    update: Dict[str, Any] = {}
    for flag, field in GUARD_FLAGS:
        value = getattr(args, flag, None)
        if value is not None:
            update[field] = value
    if args.verbose:
        update["LOG_LEVEL"] = "DEBUG" if args.verbose > 1 else "INFO"
    return base.model_copy(update=update)


def load_complex(reference: str) -> SimplicialComplex:
    """``builtin:NAME`` or a JSON file holding a facet list or a graph."""
    try:
        if reference.startswith(BUILTIN_PREFIX):
            return corpus_repository.resolve(reference)
        data = json.loads(Path(reference).read_text())
    except CorpusError as exc:
        raise UsageError(exc.code, exc.message, exc.detail)
    except OSError as exc:
        raise UsageError("UNREADABLE_INPUT", f"cannot read {reference}", str(exc))
    except json.JSONDecodeError as exc:
        raise UsageError("MALFORMED_JSON", f"{reference} is not valid JSON", str(exc))
    try:
        if isinstance(data, dict) and "edges" in data and "facets" not in data:
            return GraphFile.model_validate(data).to_complex()
        return ComplexFile.model_validate(data).to_complex()
    except ValidationError as exc:
        raise UsageError(
            "MALFORMED_INPUT", f"{reference} is not a complex or graph file", str(exc)
        )
    except SymtopeError as exc:
        raise UsageError(exc.code, exc.message, exc.detail)


def _rows(value: Any, prefix: str = "") -> List[Tuple[str, str]]:
    if isinstance(value, dict):
        if set(value) <= {"skipped", "reason"} and "skipped" in value:
            return [(prefix, f"skipped ({value['skipped']})")]
        rows: List[Tuple[str, str]] = []
        for key, item in value.items():
            rows += _rows(item, f"{prefix}.{key}" if prefix else str(key))
        return rows
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        rows = []
        for i, item in enumerate(value, start=1):
            rows += _rows(item, f"{prefix}[{i}]")
        return rows
    if isinstance(value, list):
        return [(prefix, "(" + ", ".join(str(v) for v in value) + ")")]
    return [(prefix, "-" if value is None else str(value))]


def render_table(data: Dict[str, Any]) -> str:
    rows = _rows(data)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def emit(model: BaseModel, output: str) -> None:
    data = model.model_dump(mode="json", by_alias=True)
    if output == "json":
        print(json.dumps(data, indent=2))
    else:
        print(render_table(data))


def emit_error(exc: UsageError, output: str) -> None:
    error = ApiError(
        error=ErrorDetail(code=exc.code, message=exc.message, detail=exc.detail)
    )
    if output == "json":
        print(error.model_dump_json(indent=2))
    else:
        suffix = f" ({exc.detail})" if exc.detail else ""
        print(f"error: {exc.message}{suffix}", file=sys.stderr)


def guard_failures(report: AnalysisReport, options: AnalysisOptions) -> List[str]:
    """Requested fields that came back skipped because of a size guard."""
    failed = []
    for which, summary in report.polytopes.items():
        for flag, field in REQUESTED_FIELDS.items():
            value = getattr(summary, field)
            if getattr(options, flag) and isinstance(value, Skipped) and value.is_guard:
                failed.append(f"{which}.{field}")
    return failed


def _analyze(args: argparse.Namespace, settings: Settings) -> int:
    complex_ = load_complex(args.input)
    options = AnalysisOptions(
        which=args.which,
        hstar=args.hstar,
        hilbert=args.hilbert,
        groebner=args.groebner,
        triangulate=args.triangulate,
        facets=args.facets,
        seed=args.seed,
        permute=args.permute,
    )
    report = analysis_service.analyze(complex_, options, settings)
    emit(report, args.output)
    failed = guard_failures(report, options)
    if failed:
        logger.warning("requested_fields_skipped", fields=failed)
        return EXIT_GUARD
    return EXIT_OK


def _compare(args: argparse.Namespace, settings: Settings) -> int:
    first, second = load_complex(args.first), load_complex(args.second)
    report: CompareReport = analysis_service.compare(
        first, second, args.which, args.hstar, settings
    )
    emit(report, args.output)
    skipped = [
        k
        for k, v in report.fingerprints.items()
        if isinstance(v, Skipped) and v.is_guard
    ]
    return EXIT_GUARD if skipped else EXIT_OK


def _corpus(args: argparse.Namespace, settings: Settings) -> int:
    if args.corpus_command == "show":
        try:
            complex_ = corpus_repository.get(args.name)
        except CorpusError as exc:
            raise UsageError(exc.code, exc.message, exc.detail)
        emit(ComplexFile.from_complex(complex_), args.output)
        return EXIT_OK
    entries = []
    for fixture in corpus_repository.get_multi():
        complex_ = corpus_repository.get(fixture.name)
        entries.append(
            CorpusEntry(
                name=fixture.name,
                description=fixture.description,
                dim=complex_.dim,
                f_vector=list(complex_.f_vector),
            )
        )
    listing = CorpusList(entries=entries)
    if args.output == "json":
        emit(listing, "json")
    else:
        width = max(len(e.name) for e in entries)
        for e in entries:
            f_vector = str(tuple(e.f_vector)).ljust(20)
            print(f"{e.name.ljust(width)}  {f_vector}  {e.description}")
    return EXIT_OK


def _sweep(args: argparse.Namespace, settings: Settings) -> int:
    complex_ = load_complex(args.input)
    emit(analysis_service.sweep(complex_, args.max_deleted, settings), args.output)
    return EXIT_OK


COMMANDS = {
    "analyze": _analyze,
    "compare": _compare,
    "corpus": _corpus,
    "sweep-subcomplexes": _sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; usage errors are 1 here
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    settings = derived_settings(args)
    configure_logging(settings)
    configure_sentry(settings)
    try:
        return COMMANDS[args.command](args, settings)
    except UsageError as exc:
        emit_error(exc, args.output)
        return EXIT_USAGE
    except SymtopeError as exc:
        emit_error(UsageError(exc.code, exc.message, exc.detail), args.output)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
