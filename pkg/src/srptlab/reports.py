"""Verdict-table serialization: pinned CSV schema and an aligned text view."""

from __future__ import annotations

import csv
import io

from .analysis import ReportRow, SweepReport, TheoremReport

CSV_COLUMNS = (
    "theorem",
    "n",
    "policy",
    "w_srpt_measured",
    "w_srpt_claimed",
    "w_opt_measured",
    "w_opt_claimed",
    "cr_measured_num",
    "cr_measured_den",
    "cr_claimed_num",
    "cr_claimed_den",
    "verdict",
)


def _cells(row: ReportRow) -> tuple[str, ...]:
    def opt(v) -> str:
        return "" if v is None else str(v)

    return (
        row.theorem,
        str(row.n),
        row.policy,
        str(row.w_srpt_measured),
        opt(row.w_srpt_claimed),
        str(row.w_opt_measured),
        opt(row.w_opt_claimed),
        str(row.cr_measured.numerator),
        str(row.cr_measured.denominator),
        opt(row.cr_claimed.numerator if row.cr_claimed is not None else None),
        opt(row.cr_claimed.denominator if row.cr_claimed is not None else None),
        row.verdict,
    )


def _rows_of(report) -> tuple[ReportRow, ...]:
    if isinstance(report, (TheoremReport, SweepReport)):
        return report.rows
    return tuple(report)


def emit_report(report, fmt: str = "text") -> bytes:
    """Render a verdict table as bytes; fmt is "text" or "csv".

    Output is byte-deterministic: fixed column order, "\\n" line endings,
    empty cells for missing claimed values.
    """
    rows = _rows_of(report)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(_cells(row))
        return buf.getvalue().encode("utf-8")
    if fmt == "text":
        table = [list(CSV_COLUMNS)] + [list(_cells(r)) for r in rows]
        widths = [max(len(line[i]) for line in table) for i in range(len(CSV_COLUMNS))]
        lines = []
        for line in table:
            lines.append(
                "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip()
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}; use 'text' or 'csv'")


SWEEP_COLUMNS = (
    "class",
    "n",
    "m",
    "policy",
    "w_srpt",
    "w_opt_zero_release",
    "cr_num",
    "cr_den",
)


def emit_sweep(rows, fmt: str = "text") -> bytes:
    """Render measurement-only sweep rows (class, n, m, policy, makespans, CR)."""
    table_rows = [
        (
            label,
            str(n),
            str(m),
            policy,
            str(w_srpt),
            str(w_opt),
            str(cr.numerator),
            str(cr.denominator),
        )
        for (label, n, m, policy, w_srpt, w_opt, cr) in rows
    ]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        writer.writerows(table_rows)
        return buf.getvalue().encode("utf-8")
    if fmt == "text":
        table = [list(SWEEP_COLUMNS)] + [list(r) for r in table_rows]
        widths = [max(len(line[i]) for line in table) for i in range(len(SWEEP_COLUMNS))]
        lines = [
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip()
            for line in table
        ]
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown sweep format {fmt!r}; use 'text' or 'csv'")
