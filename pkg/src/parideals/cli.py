#!/usr/bin/env python3
"""
Command-line interface for parideals.

    parideals count --type F --rank 4 --parabolic ""
    parideals verify --type C --rank 4
    parideals table --type G --rank 2 --format csv

Exit status: 0 on success, 1 when a closed form disagrees with enumeration,
2 on usage errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .census import antichain_histogram, census_row, full_census, verify
from .errors import (
    IndexOutOfRange,
    InvalidRank,
    ParidealsError,
    UsageError,
    VerificationError,
)
from .export import (
    ideal_rows,
    render_count,
    render_histogram,
    render_ideals,
    render_reports,
    write_output,
)
from .ideals import ParabolicSelector, enumerate_ideals, is_abelian
from .logging_utils import get_logger, set_root_level
from .rootsys import RootSystem, build_named
from .settings import settings
from .types import CliConfig, HistogramRow

logger = get_logger(__name__)

LOG_LEVELS: dict[str, int] = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
}

COMMANDS = ("enumerate", "count", "verify", "table", "antichains")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _selector(rs: RootSystem, config: CliConfig) -> ParabolicSelector:
    return ParabolicSelector.of(rs, config.parabolic)


def _cmd_enumerate(rs: RootSystem, config: CliConfig) -> str:
    sel = _selector(rs, config)
    ideals = enumerate_ideals(rs, sel)
    if config.abelian_only:
        ideals = [phi for phi in ideals if is_abelian(rs, phi)]
    return render_ideals(ideal_rows(rs, sel, ideals), config.format)


def _cmd_count(rs: RootSystem, config: CliConfig) -> str:
    report = census_row(rs, _selector(rs, config))
    if not report.agreement:
        raise VerificationError(f"closed form and enumeration disagree for {rs.rtype}")
    return render_count(report, config.format, config.abelian_only)


def _cmd_table(rs: RootSystem, config: CliConfig) -> str:
    reports = full_census(rs, max_workers=settings.max_workers)
    text = render_reports(reports, config.format)
    bad = [r.I for r in reports if not r.agreement]
    if bad:
        write_output(text, config.output)
        raise VerificationError(f"{len(bad)} rows disagree, first I={bad[0]}")
    return text


def _cmd_verify(rs: RootSystem, config: CliConfig) -> str:
    report = verify(rs, geometry=config.geometry, max_workers=settings.max_workers)
    if not report.ok:
        for failure in report.failures:
            logger.error(failure)
        raise VerificationError(
            f"{len(report.failures)} checks failed over {report.subsets} subsets"
        )
    return f"formula==oracle for all {report.subsets} subsets\n"


def _cmd_antichains(rs: RootSystem, config: CliConfig) -> str:
    sel = _selector(rs, config)
    hist = antichain_histogram(rs, sel)
    row: HistogramRow = {
        "type": rs.family.value,
        "rank": rs.rank,
        "I": list(sel.sorted()),
        "histogram": {str(k): v for k, v in hist.items()},
    }
    return render_histogram(row, config.format)


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "antichains": _cmd_antichains,
}


def run(config: CliConfig) -> int:
    """Execute *config* and return the process exit status."""
    try:
        if config.command not in _HANDLERS:
            raise UsageError(f"unknown command: {config.command}")
        rs = build_named(config.type, config.rank)
        text = _HANDLERS[config.command](rs, config)
        write_output(text, config.output)
    except (UsageError, InvalidRank, IndexOutOfRange) as exc:
        print(f"parideals: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        logger.error(str(exc))
        return EXIT_MISMATCH
    except ParidealsError as exc:
        logger.error(str(exc))
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _parse_parabolic(text: str) -> List[int]:
    parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
    try:
        return sorted({int(p) for p in parts})
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated indices, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--type", required=True, help="root system family letter (A-G)"
    )
    common.add_argument("--rank", type=int, required=True, help="rank l")
    common.add_argument(
        "--parabolic",
        type=_parse_parabolic,
        default=[],
        help="comma-separated simple-root indices of I; empty selects the Borel",
    )
    common.add_argument(
        "--format",
        choices=["pretty", "json", "csv"],
        default=settings.format,
        help="output format",
    )
    common.add_argument(
        "-o",
        "--output",
        type=Path,
        default=None,
        help="write to file instead of stdout",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=settings.verbose,
        help="enable verbose output",
    )
    common.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        default=False,
        help="suppress informational output; only warnings and errors are shown",
    )
    common.add_argument(
        "--log-level",
        choices=list(LOG_LEVELS.keys()),
        help="set root log level",
    )

    parser = argparse.ArgumentParser(
        prog="parideals",
        description="Ad-nilpotent and abelian ideals of parabolic subalgebras",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "enumerate": "list the ideals of F_I by their minimal roots",
        "count": "print ♯F_I and ♯Ab_I",
        "verify": "check every closed form against enumeration for all I",
        "table": "census of ♯F_I and ♯Ab_I over all I",
        "antichains": "histogram of ♯Φ_min over F_I",
    }
    for name in COMMANDS:
        cmd = sub.add_parser(
            name,
            parents=[common],
            help=helps[name],
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        if name in ("enumerate", "count"):
            cmd.add_argument(
                "--abelian-only",
                action="store_true",
                help="restrict to abelian ideals",
            )
        if name == "verify":
            cmd.add_argument(
                "--geometry",
                action="store_true",
                help="also check the weighted alcove identity",
            )
    return parser


def _apply_log_flags(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    log_level = args.log_level if args.log_level in LOG_LEVELS else None
    verbose = args.verbose if isinstance(args.verbose, bool) else False
    quiet = args.quiet if isinstance(args.quiet, bool) else False

    # --log-level supersedes --verbose / --quiet
    if verbose and quiet:
        parser.error("--verbose and --quiet are mutually exclusive")
    if log_level and (verbose or quiet):
        parser.error("--log-level cannot be used with --verbose/--quiet")
    if log_level:
        set_root_level(LOG_LEVELS[log_level])
    elif quiet:
        set_root_level(logging.WARNING)
    elif verbose:
        set_root_level(logging.DEBUG)
        logger.debug("Verbose flag enabled – root log-level set to DEBUG")


def parse_config(argv: Optional[List[str]] = None) -> CliConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_log_flags(parser, args)
    return CliConfig(
        command=args.command,
        type=args.type,
        rank=args.rank,
        parabolic=tuple(args.parabolic),
        abelian_only=getattr(args, "abelian_only", False),
        format=args.format,
        output=args.output,
        geometry=getattr(args, "geometry", False),
    )


def main(argv: Optional[List[str]] = None) -> None:
    """Parse arguments, run the requested command and exit with its status."""
    config = parse_config(argv)
    sys.exit(run(config))


if __name__ == "__main__":
    main()
