"""Gantt rendering of schedules: machine-per-row timing diagrams.

ASCII: one cell per time unit per machine row, "J<id>" for a running job
and "." for idle, wrapped in bars, with an integer time axis underneath.
SVG: one rect per execution segment at a fixed pixels-per-unit scale.
Both renderers are byte-deterministic for a given schedule.
"""

from __future__ import annotations

from .model import Schedule, validate_schedule

SVG_UNIT = 24  # horizontal pixels per time unit
SVG_ROW = 26  # machine row height
SVG_GAP = 6
SVG_LEFT = 48  # label gutter
SVG_TOP = 12
SVG_PALETTE = (
    "#8dd3c7",
    "#ffffb3",
    "#bebada",
    "#fb8072",
    "#80b1d3",
    "#fdb462",
    "#b3de69",
    "#fccde5",
)


def render_gantt(s: Schedule, style: str = "ascii") -> bytes:
    """Render a validated schedule; invalid schedules are rejected with
    their violation list."""
    violations = validate_schedule(s)
    if violations:
        raise ValueError("cannot render an invalid schedule: " + "; ".join(violations))
    if style == "ascii":
        return render_ascii(s).encode("utf-8")
    if style == "svg":
        return render_svg(s).encode("utf-8")
    raise ValueError(f"unknown gantt style {style!r}; use 'ascii' or 'svg'")


def _cell_grid(s: Schedule) -> dict[tuple[int, int], str]:
    grid: dict[tuple[int, int], str] = {}
    for seg in s.segments:
        for t in range(seg.start, seg.end):
            grid[(seg.machine, t)] = f"J{seg.job_id}"
    return grid


def render_ascii(s: Schedule) -> str:
    grid = _cell_grid(s)
    machines = range(1, s.instance.machines + 1)
    label_width = max(len(f"P{m}:") for m in machines) + 1
    lines = []
    for m in machines:
        cells = [grid.get((m, t), ".") for t in range(s.makespan)]
        lines.append(f"P{m}:".ljust(label_width) + "|" + " ".join(cells) + "|")

    # Tick row under the cells when every label has one width and the tick
    # numbers fit the cell stride; otherwise a flat integer listing.
    label_widths = {len(f"J{job.id}") for job in s.instance.jobs}
    if len(label_widths) == 1:
        stride = next(iter(label_widths)) + 1
        if len(str(s.makespan)) <= stride:
            ticks = "".join(str(t).ljust(stride) for t in range(s.makespan + 1))
            lines.append(" " * (label_width + 1) + ticks.rstrip())
            return "\n".join(lines) + "\n"
    lines.append("t: " + " ".join(str(t) for t in range(s.makespan + 1)))
    return "\n".join(lines) + "\n"


def render_svg(s: Schedule) -> str:
    m_count = s.instance.machines
    width = SVG_LEFT + s.makespan * SVG_UNIT + SVG_UNIT
    height = SVG_TOP + m_count * (SVG_ROW + SVG_GAP) + 40
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1"'
        f' width="{width}" height="{height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for m in range(1, m_count + 1):
        y = SVG_TOP + (m - 1) * (SVG_ROW + SVG_GAP)
        out.append(
            f'<text x="8" y="{y + SVG_ROW - 8}" font-family="monospace"'
            f' font-size="14">P{m}</text>'
        )
    for seg in s.segments:
        x = SVG_LEFT + seg.start * SVG_UNIT
        y = SVG_TOP + (seg.machine - 1) * (SVG_ROW + SVG_GAP)
        w = seg.length * SVG_UNIT
        fill = SVG_PALETTE[(seg.job_id - 1) % len(SVG_PALETTE)]
        out.append(
            f'<rect x="{x}" y="{y}" width="{w}" height="{SVG_ROW}"'
            f' fill="{fill}" stroke="black"/>'
        )
        out.append(
            f'<text x="{x + w // 2}" y="{y + SVG_ROW - 8}" font-family="monospace"'
            f' font-size="12" text-anchor="middle">J{seg.job_id}</text>'
        )
    axis_y = SVG_TOP + m_count * (SVG_ROW + SVG_GAP) + 8
    out.append(
        f'<line x1="{SVG_LEFT}" y1="{axis_y}" x2="{SVG_LEFT + s.makespan * SVG_UNIT}"'
        f' y2="{axis_y}" stroke="black"/>'
    )
    for t in range(s.makespan + 1):
        x = SVG_LEFT + t * SVG_UNIT
        out.append(f'<line x1="{x}" y1="{axis_y}" x2="{x}" y2="{axis_y + 5}" stroke="black"/>')
        out.append(
            f'<text x="{x}" y="{axis_y + 18}" font-family="monospace" font-size="10"'
            f' text-anchor="middle">{t}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
