#!/usr/bin/env python3
"""Render a small Gantt gallery: every workload family under both placement
policies, ASCII to stdout and SVG files into out/gantt/."""

import sys
from pathlib import Path

from srptlab import ClassId, ClassSpec, Migration, PolicyConfig, simulate_srpt
from srptlab.gantt import render_gantt
from srptlab.workloads import S3Interpretation, generate

GALLERY = [
    ("s1_n4_m2", ClassSpec(ClassId.S1, n=4, m=2)),
    ("s1_n3_m3", ClassSpec(ClassId.S1, n=3, m=3)),
    ("s2_n3", ClassSpec(ClassId.S2, n=3)),
    ("s3_n3_literal", ClassSpec(ClassId.S3, n=3)),
    (
        "s3_n3_alt",
        ClassSpec(ClassId.S3, n=3, s3_interpretation=S3Interpretation.THEOREM_N_PLUS_2),
    ),
    ("s4_n2", ClassSpec(ClassId.S4, n=2)),
    ("s5_n2", ClassSpec(ClassId.S5, n=2)),
]


def main() -> int:
    out_dir = Path(__file__).resolve().parent.parent / "out" / "gantt"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, spec in GALLERY:
        inst = generate(spec)
        for policy in Migration:
            schedule, _ = simulate_srpt(inst, PolicyConfig(migration=policy))
            title = f"{name} ({policy.value}, makespan {schedule.makespan})"
            print(title)
            print(render_gantt(schedule, "ascii").decode(), end="")
            print()
            svg_path = out_dir / f"{name}_{policy.value}.svg"
            svg_path.write_bytes(render_gantt(schedule, "svg"))
    print(f"SVG files in {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
