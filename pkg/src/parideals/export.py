"""Render census rows, ideal listings and histograms as pretty text, JSON or CSV.

Output is a pure function of its input so that repeated runs are
byte-identical.
"""

from __future__ import annotations

import contextlib
import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from .census import CountReport
from .errors import UsageError
from .ideals import Ideal, Parabolic, as_selector, is_abelian, minimal_roots
from .rootsys import Root, RootSystem
from .types import HistogramRow, IdealRow

FIELDS = list(CountReport.model_fields)

IN_I = "•"
NOT_IN_I = "∘"


def dynkin_row(rank: int, I: Iterable[int]) -> str:
    """``•`` for nodes in ``I`` and ``∘`` for the others, in index order."""
    chosen = set(I)
    return " ".join(IN_I if i in chosen else NOT_IN_I for i in range(1, rank + 1))


def root_label(root: Root) -> str:
    """Coefficient string such as ``1221``.

    Falls back to ``[1,10,…]`` when a coefficient has two digits.
    """
    if all(0 <= c < 10 for c in root):
        return "".join(str(c) for c in root)
    return "[" + ",".join(str(c) for c in root) + "]"


# ---------------------------------------------------------------------------
# Census rows
# ---------------------------------------------------------------------------


def reports_to_json(reports: Sequence[CountReport]) -> str:
    return json.dumps([r.model_dump() for r in reports], ensure_ascii=False, indent=2)


def reports_from_json(text: str) -> List[CountReport]:
    return [CountReport.model_validate(item) for item in json.loads(text)]


def reports_to_csv(reports: Sequence[CountReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in reports:
        row = r.model_dump()
        row["I"] = " ".join(str(i) for i in r.I)
        row["agreement"] = str(r.agreement).lower()
        writer.writerow([row[f] for f in FIELDS])
    return buf.getvalue()


def reports_to_table(reports: Sequence[CountReport]) -> str:
    """Census table: Dynkin row of ``I`` then ``♯F_I`` and ``♯Ab_I``."""
    if not reports:
        return ""
    rank = reports[0].rank
    width = max(len(dynkin_row(rank, ())), len("I"))
    lines = [f"{'I':<{width}}  {'♯F_I':>8}  {'♯Ab_I':>8}"]
    for r in reports:
        mark = "" if r.agreement else "  MISMATCH"
        row = dynkin_row(rank, r.I)
        lines.append(
            f"{row:<{width}}  {r.count_all:>8}  {r.count_abelian:>8}{mark}"
        )
    return "\n".join(lines) + "\n"


def render_reports(reports: Sequence[CountReport], fmt: str) -> str:
    if fmt == "json":
        return reports_to_json(reports) + "\n"
    if fmt == "csv":
        return reports_to_csv(reports)
    if fmt == "pretty":
        return reports_to_table(reports)
    raise UsageError(f"unknown output format: {fmt}")


def render_count(report: CountReport, fmt: str, abelian_only: bool = False) -> str:
    """A single :class:`CountReport`.

    In pretty mode ``abelian_only`` prints just ``♯Ab_I``.
    """
    if fmt != "pretty":
        return render_reports([report], fmt)
    if abelian_only:
        return f"{report.count_abelian}\n"
    I = ",".join(str(i) for i in report.I)
    return (
        f"type={report.type}{report.rank} I={{{I}}} count_all={report.count_all} "
        f"count_abelian={report.count_abelian} method={report.method} "
        f"agreement={str(report.agreement).lower()}\n"
    )


# ---------------------------------------------------------------------------
# Ideal listings and histograms
# ---------------------------------------------------------------------------


def ideal_rows(
    rs: RootSystem, I: Parabolic, ideals: Sequence[Ideal]
) -> List[IdealRow]:
    sel = as_selector(rs, I)
    rows: List[IdealRow] = []
    for phi in ideals:
        mins = sorted(minimal_roots(rs, sel, phi), key=lambda r: (sum(r), r))
        rows.append(
            {
                "size": len(phi),
                "abelian": is_abelian(rs, phi),
                "minimal_roots": [list(r) for r in mins],
            }
        )
    return rows


def render_ideals(rows: Sequence[IdealRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(rows), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["size", "abelian", "minimal_roots"])
        for row in rows:
            mins = " ".join(root_label(tuple(r)) for r in row["minimal_roots"])
            writer.writerow([row["size"], str(row["abelian"]).lower(), mins])
        return buf.getvalue()
    if fmt != "pretty":
        raise UsageError(f"unknown output format: {fmt}")
    lines = []
    for row in rows:
        mins = ", ".join(root_label(tuple(r)) for r in row["minimal_roots"])
        tag = " ab" if row["abelian"] else ""
        lines.append(f"{row['size']:>4}{tag:<3}  {{{mins}}}")
    lines.append(f"total: {len(rows)}")
    return "\n".join(lines) + "\n"


def render_histogram(row: HistogramRow, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(row, ensure_ascii=False, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["antichain_size", "ideals"])
        for size, count in row["histogram"].items():
            writer.writerow([size, count])
        return buf.getvalue()
    if fmt != "pretty":
        raise UsageError(f"unknown output format: {fmt}")
    lines = [f"{'♯Φ_min':>7}  {'ideals':>8}"]
    for size, count in row["histogram"].items():
        lines.append(f"{size:>7}  {count:>8}")
    return "\n".join(lines) + "\n"


def write_output(text: str, path: Optional[Path]) -> None:
    """Write to *path*, or to stdout when it is ``None``."""
    if path is None:
        # a closed downstream pipe (e.g. ``| head``) ends the run quietly
        with contextlib.suppress(BrokenPipeError):
            sys.stdout.write(text)
            sys.stdout.flush()
        return
    path.write_text(text, encoding="utf-8")
