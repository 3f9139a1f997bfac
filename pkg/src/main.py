"""
Command-line front end.

    python -m src.main analyze 6 6 4 1 1 1 --json
    python -m src.main witness --b 14 --w 15
    python -m src.main verify --max-weight 18 --jobs 4
    python -m src.main census --max-weight 15 --out census.tsv
    python -m src.main render 4 3 3 1 --style problem10
"""

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from pydantic import BaseModel

from .castelnuovo import from_partition, parse_coeffs, reduce_classify
from .characterize import (
    bw_from_nc,
    nc_from_bw,
    thmB_decompose,
    thmB_from_reduction,
    witness_castelnuovo,
    witness_decompose,
    witness_partition,
)
from .checks import CHECKS
from .config import Config, _level_names
from .errors import (
    InvalidPartitionError,
    InvalidPolynomialError,
    NotRealizableError,
    UnknownCheckError,
    require,
)
from .models import (
    AnalyzeRecord,
    BWPair,
    CastelnuovoPoly,
    NCPair,
    Partition,
    ReductionSummary,
    RenderSpec,
    VerificationReport,
    WitnessRecord,
)
from .partition import chess_count, conjugate, is_distinct, parse_parts
from .render import render_castelnuovo, render_ferrers
from .report_templates.analyze_report import analyze_report
from .report_templates.witness_report import witness_report
from .verify import census, format_census_tsv, verify_range

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_NOT_REALIZABLE = 2
EXIT_USAGE = 64
EXIT_INVALID_INPUT = 65


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage status instead of 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def to_json(record: BaseModel) -> str:
    """Serialize a record with its fields in declaration order and no nulls."""
    return json.dumps(record.model_dump(mode="json", exclude_none=True, by_alias=True), indent=2)


def analyze_partition(la: Partition) -> AnalyzeRecord:
    """
    Gather every statistic of one partition into a single record.

    The parameterized form is read both from the chess count and from the
    reduction of s_la; the two must agree.
    """
    count = chess_count(la)
    s = from_partition(la)
    reduction = reduce_classify(s)
    form = thmB_decompose(count)
    require(form is not None, f"{la.get_summary()} has an unrealizable chess count {count.get_summary()}")
    require(
        form == thmB_from_reduction(reduction),
        f"reduction of {la.get_summary()} gives {thmB_from_reduction(reduction).get_summary()}, "
        f"chess count gives {form.get_summary()}",
    )
    return AnalyzeRecord(
        parts=la.parts,
        weight=count.weight,
        distinct=is_distinct(la),
        conjugate=conjugate(la).parts,
        b=count.b,
        w=count.w,
        c=count.b - count.w,
        castelnuovo=s.coeffs,
        reduction=ReductionSummary(steps=reduction.steps, terminal=reduction.terminal.kind, u=reduction.terminal.u),
        thm_b=form,
        nc=nc_from_bw(count),
    )


def build_witness(p: BWPair) -> WitnessRecord:
    """
    Build the witness record for a requested chess count.

    Raises:
        NotRealizableError: If (b - w)^2 > b
    """
    la = witness_partition(p)
    s = witness_castelnuovo(p)
    nc = nc_from_bw(p)
    return WitnessRecord(
        parts=la.parts,
        castelnuovo=s.coeffs,
        b=p.b,
        w=p.w,
        n=nc.n,
        c=nc.c,
        decomposition=witness_decompose(p),
    )


def format_analyze(record: AnalyzeRecord) -> str:
    reduction = record.reduction
    terminal = f"staircase u={reduction.u}" if reduction.terminal == "staircase" else reduction.terminal
    return analyze_report.format(
        parts=Partition(record.parts).get_summary(),
        weight=record.weight,
        distinct="yes" if record.distinct else "no",
        conjugate=Partition(record.conjugate).get_summary(),
        b=record.b,
        w=record.w,
        c=record.c,
        castelnuovo=CastelnuovoPoly(record.castelnuovo).get_summary(),
        coefficients=list(record.castelnuovo),
        steps=reduction.steps,
        terminal=terminal,
        form=record.thm_b.get_summary(),
        nc=record.nc.get_summary(),
    )


def format_witness(record: WitnessRecord) -> str:
    dec = record.decomposition
    return witness_report.format(
        b=record.b,
        w=record.w,
        n=record.n,
        c=record.c,
        case=dec.case,
        l=dec.l,
        b_rem=dec.b_rem,
        w_rem=dec.w_rem,
        castelnuovo=CastelnuovoPoly(record.castelnuovo).get_summary(),
        coefficients=list(record.castelnuovo),
        parts=Partition(record.parts).get_summary(),
    )


def format_report(report: VerificationReport) -> str:
    lines = [report.get_summary()]
    for found in report.counterexamples:
        lines.append(
            f"  {found.check} at weight {found.weight}: {found.subject} expected {found.expected}, got {found.actual}"
        )
    if report.dropped:
        lines.append(f"  ... and {report.dropped} more beyond the cap of {report.counterexample_cap} per check")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info("wrote %s", out)


def _read_partition(args: argparse.Namespace) -> Partition:
    text = " ".join(args.parts)
    if args.parts_csv is not None:
        text = f"{text} {args.parts_csv}"
    return parse_parts(text)


def cmd_analyze(args: argparse.Namespace, config: Config) -> int:
    record = analyze_partition(_read_partition(args))
    sys.stdout.write(to_json(record) + "\n" if args.json else format_analyze(record))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, config: Config) -> int:
    by_bw = args.b is not None or args.w is not None
    by_nc = args.n is not None or args.c is not None
    if by_bw == by_nc:
        args.parser.error("give exactly one of --b/--w or --n/--c")
    if by_bw:
        if args.b is None or args.w is None:
            args.parser.error("--b and --w must be given together")
        p = BWPair(b=args.b, w=args.w)
    else:
        if args.n is None or args.c is None:
            args.parser.error("--n and --c must be given together")
        p = bw_from_nc(NCPair(n=args.n, c=args.c))
        if p is None:
            raise NotRealizableError(
                f"(n, c) = ({args.n}, {args.c}) is not realizable: it is not (b + w, b - w) for any naturals b, w"
            )
    record = build_witness(p)
    sys.stdout.write(to_json(record) + "\n" if args.json else format_witness(record))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    names = None
    if args.checks is not None:
        names = [name.strip() for name in args.checks.split(",") if name.strip()]
    report = verify_range(
        args.max_weight,
        checks=names,
        jobs=args.jobs if args.jobs is not None else config.jobs,
        cap=args.cap if args.cap is not None else config.counterexample_cap,
    )
    sys.stdout.write(to_json(report) + "\n" if args.json else format_report(report))
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_census(args: argparse.Namespace, config: Config) -> int:
    _emit(format_census_tsv(census(args.max_weight)), args.out)
    return EXIT_OK


def cmd_render(args: argparse.Namespace, config: Config) -> int:
    cell_size = args.cell_size if args.cell_size is not None else config.cell_size
    if args.format == "svg" and cell_size < 4:
        args.parser.error(f"--cell-size must be at least 4 for svg, got {cell_size}")
    if args.coeffs is not None and args.style != "castelnuovo":
        args.parser.error("--coeffs only applies to --style castelnuovo")
    if args.coeffs is not None and (args.parts or args.parts_csv is not None):
        args.parser.error("give either parts or --coeffs, not both")
    spec = RenderSpec(style=args.style, format=args.format, cell_size=cell_size, show_labels=not args.no_labels)

    if args.style == "castelnuovo":
        s = parse_coeffs(args.coeffs) if args.coeffs is not None else from_partition(_read_partition(args))
        document = render_castelnuovo(s, spec)
    else:
        document = render_ferrers(_read_partition(args), spec)
    _emit(document, args.out)
    return EXIT_OK


def _add_parts(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("parts", nargs="*", help="Parts of the partition, largest first")
    parser.add_argument("--parts", dest="parts_csv", metavar="LIST", help="Parts as one comma-separated list")


def build_parser() -> CommandParser:
    parser = CommandParser(prog="chess-ferrers", description="Chess colourings of Ferrers diagrams")
    parser.add_argument("--log-level", help="Logging level for diagnostics on stderr (default from environment)")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=CommandParser)
    commands.required = True

    analyze = commands.add_parser("analyze", help="Report every statistic of one partition")
    _add_parts(analyze)
    analyze.add_argument("--json", action="store_true", help="Emit the record as JSON")
    analyze.set_defaults(handler=cmd_analyze, parser=analyze)

    witness = commands.add_parser("witness", help="Build a distinct-parts partition with a given chess count")
    witness.add_argument("--b", type=_natural, help="Black squares")
    witness.add_argument("--w", type=_natural, help="White squares")
    witness.add_argument("--n", type=_natural, help="Weight b + w")
    witness.add_argument("--c", type=int, help="Signed label sum b - w")
    witness.add_argument("--json", action="store_true", help="Emit the record as JSON")
    witness.set_defaults(handler=cmd_witness, parser=witness)

    verify = commands.add_parser("verify", help="Check every theorem exhaustively up to a weight")
    verify.add_argument("--max-weight", type=_natural, required=True)
    verify.add_argument("--jobs", type=_positive, help="Worker processes (default from environment, else 1)")
    verify.add_argument("--checks", metavar="LIST", help=f"Comma-separated subset of: {', '.join(CHECKS)}")
    verify.add_argument("--cap", type=_positive, help="Counterexamples kept per check (default from environment, else 20)")
    verify.add_argument("--json", action="store_true", help="Emit the report as JSON")
    verify.set_defaults(handler=cmd_verify, parser=verify)

    census_cmd = commands.add_parser("census", help="Count partitions by chess count as TSV")
    census_cmd.add_argument("--max-weight", type=_natural, required=True)
    census_cmd.add_argument("--out", metavar="PATH", help="Write to a file instead of standard output")
    census_cmd.set_defaults(handler=cmd_census, parser=census_cmd)

    render = commands.add_parser("render", help="Draw a partition or Castelnuovo function")
    _add_parts(render)
    render.add_argument("--coeffs", metavar="LIST", help="Castelnuovo coefficients to draw instead of s_la")
    render.add_argument("--style", choices=["ferrers", "castelnuovo", "problem10"], default="ferrers")
    render.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    render.add_argument("--cell-size", type=_positive, help="SVG pixels per square (default from environment)")
    render.add_argument("--no-labels", action="store_true", help="Colour the problem10 array instead of labelling it")
    render.add_argument("--out", metavar="PATH", help="Write to a file instead of standard output")
    render.set_defaults(handler=cmd_render, parser=render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv (Sequence[str], optional): Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        int: 0 success, 1 verification failure, 2 unrealizable request,
        64 usage error, 65 invalid input
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    level = (args.log_level or config.log_level).upper()
    if level not in _level_names():
        parser.error(f"--log-level is not a logging level: {args.log_level!r}")
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)

    try:
        return args.handler(args, config)
    except (InvalidPartitionError, InvalidPolynomialError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NotRealizableError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except UnknownCheckError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
