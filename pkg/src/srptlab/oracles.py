"""Offline-optimum makespans.

Three routes, deliberately independent of the online simulator:

* zero_release_opt -- the baseline the verified claims measure against:
  releases are ignored and equal-length jobs are packed non-preemptively in
  index order, m per round.
* mcnaughton -- the preemptive zero-release optimum max(max T_i, ceil(sum/m)),
  achieved by the classic wrap-around rule; no witness schedule is built.
* brute_force_opt -- exhaustive integer-grid search for small instances,
  with or without release dates; returns a witness schedule.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import Instance, Schedule, Segment


class OptMethod(str, Enum):
    PAPER_OPT = "paper-opt"
    MCNAUGHTON = "mcnaughton"
    BRUTE_FORCE_ZERO_RELEASE = "brute-force-zero-release"
    BRUTE_FORCE_WITH_RELEASES = "brute-force-with-releases"


@dataclass(frozen=True)
class OptResult:
    makespan: int
    method: OptMethod
    schedule: Schedule | None = None


class UnsupportedInstanceError(ValueError):
    """The requested optimum is undefined for this instance shape."""


class SearchCeilingError(ValueError):
    """The instance is too large for the exhaustive search."""


@dataclass(frozen=True)
class SearchCeiling:
    """Refusal bounds for brute_force_opt, sized so the oracle test suite
    runs in seconds."""

    max_jobs: int = 6
    max_machines: int = 4
    max_total_work: int = 30


DEFAULT_CEILING = SearchCeiling()


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def zero_release_opt(inst: Instance) -> OptResult:
    """Offline baseline for equal-length jobs: releases are treated as zero
    and job i runs non-preemptively on machine ((i-1) mod m)+1 in round
    ceil(i/m), giving makespan ceil(n/m) * t.

    Only defined when all processing times are equal; otherwise rejected
    with a pointer to mcnaughton / brute_force_opt.
    """
    lengths = {job.processing for job in inst.jobs}
    if len(lengths) > 1:
        raise UnsupportedInstanceError(
            "the indexed-round baseline is defined only for equal processing"
            f" times (saw {sorted(lengths)}); use mcnaughton() or"
            " brute_force_opt() instead"
        )
    t = lengths.pop()
    m = inst.machines
    offline = inst.with_zero_releases()
    segments = []
    for job in sorted(offline.jobs, key=lambda j: j.id):
        round_no = _ceil_div(job.id, m)
        machine = (job.id - 1) % m + 1
        segments.append(Segment(job.id, machine, (round_no - 1) * t, round_no * t))
    schedule = Schedule.from_segments(offline, segments)
    return OptResult(
        makespan=_ceil_div(inst.job_count, m) * t,
        method=OptMethod.PAPER_OPT,
        schedule=schedule,
    )


def mcnaughton(inst: Instance) -> OptResult:
    """Preemptive zero-release optimum: max(longest job, ceil(total/m))."""
    total = sum(job.processing for job in inst.jobs)
    longest = max(job.processing for job in inst.jobs)
    return OptResult(
        makespan=max(longest, _ceil_div(total, inst.machines)),
        method=OptMethod.MCNAUGHTON,
        schedule=None,
    )


def _grouped(jobs: dict[int, tuple[int, int]]) -> tuple:
    """Canonical state: sorted ((release, remaining), count) over unfinished
    jobs. Jobs with equal release and remaining are interchangeable, which
    is what collapses the search space."""
    counts: dict[tuple[int, int], int] = {}
    for rel, rem in jobs.values():
        if rem > 0:
            counts[(rel, rem)] = counts.get((rel, rem), 0) + 1
    return tuple(sorted(counts.items()))


def _pick_multisets(groups: list[tuple[tuple[int, int], int]], k: int):
    """Yield every way to take k units from the groups (count per group).

    Groups arrive sorted by descending remaining so the first emitted choice
    is the longest-remaining-first heuristic, which usually witnesses the
    optimum immediately.
    """
    if k == 0:
        yield ()
        return
    if not groups:
        return
    (key, avail), rest = groups[0], groups[1:]
    hi = min(avail, k)
    lo = max(0, k - sum(c for _, c in rest))
    for take in range(hi, lo - 1, -1):
        for tail in _pick_multisets(rest, k - take):
            yield ((key, take),) + tail if take else tail


def brute_force_opt(
    inst: Instance,
    respect_releases: bool,
    ceiling: SearchCeiling = DEFAULT_CEILING,
) -> OptResult:
    """Exact minimum makespan over all integer-grid preemptive schedules.

    State-space search over (time, multiset of (release, remaining)): at
    each unit step the k = min(m, released unfinished) jobs to run are
    chosen exhaustively (running fewer than k can never help, by exchange).
    Feasibility is tested against increasing makespan targets starting at
    the trivial lower bound, so the first feasible target is the optimum.
    The memo table of failed states is per call.

    Refuses instances beyond the ceiling; the limits are stated in the error.
    """
    n = inst.job_count
    total = sum(job.processing for job in inst.jobs)
    if (
        n > ceiling.max_jobs
        or inst.machines > ceiling.max_machines
        or total > ceiling.max_total_work
    ):
        raise SearchCeilingError(
            f"instance (jobs {n}, machines {inst.machines}, total work {total})"
            f" exceeds the search ceiling (jobs <= {ceiling.max_jobs},"
            f" machines <= {ceiling.max_machines},"
            f" total work <= {ceiling.max_total_work})"
        )

    base = inst if respect_releases else inst.with_zero_releases()
    m = base.machines
    jobs = {job.id: (job.arrival, job.processing) for job in base.jobs}
    lower = max(
        _ceil_div(total, m),
        max(rel + rem for rel, rem in jobs.values()),
    )
    horizon = max(rel for rel, _ in jobs.values()) + total

    for target in range(lower, horizon + 1):
        steps = _search_deadline(jobs, m, target)
        if steps is not None:
            schedule = _witness(base, steps)
            method = (
                OptMethod.BRUTE_FORCE_WITH_RELEASES
                if respect_releases
                else OptMethod.BRUTE_FORCE_ZERO_RELEASE
            )
            return OptResult(makespan=target, method=method, schedule=schedule)
    raise AssertionError("unreachable: the serial schedule always fits the horizon")


def _search_deadline(jobs, m, deadline):
    """Depth-first search for a schedule finishing every job by deadline.

    Returns the list of (time, chosen group counts) on success, else None.
    Only failed (time, state) pairs are memoised; a success path ends the
    search.
    """
    failed: set[tuple] = set()

    def walk(t: int, state: tuple) -> list | None:
        if not state:
            return []
        if (t, state) in failed:
            return None
        # A job cannot finish before max(t, release) + remaining.
        for (rel, rem), _ in state:
            if max(t, rel) + rem > deadline:
                failed.add((t, state))
                return None
        avail = [((rel, rem), c) for (rel, rem), c in state if rel <= t]
        if not avail:
            t_next = min(rel for (rel, _), _ in state)
            result = walk(t_next, state)
            if result is None:
                failed.add((t, state))
            return result
        avail.sort(key=lambda g: (-g[0][1], g[0][0]))
        k = min(m, sum(c for _, c in avail))
        for picks in _pick_multisets(avail, k):
            counts = dict(state)
            for (rel, rem), take in picks:
                counts[(rel, rem)] -= take
                if counts[(rel, rem)] == 0:
                    del counts[(rel, rem)]
                if rem - 1 > 0:
                    counts[(rel, rem - 1)] = counts.get((rel, rem - 1), 0) + take
            tail = walk(t + 1, tuple(sorted(counts.items())))
            if tail is not None:
                return [(t, picks)] + tail
        failed.add((t, state))
        return None

    start = _grouped({jid: pair for jid, pair in jobs.items()})
    return walk(0, start)


def _witness(base: Instance, steps) -> Schedule:
    """Replay a feasible step list into a concrete, validated-shape schedule.

    Within each interchangeable group the lowest job ids run first; within a
    step the running jobs occupy machines 1..k in job-id order.
    """
    remaining = {job.id: job.processing for job in base.jobs}
    release = {job.id: job.arrival for job in base.jobs}
    unit_runs: list[tuple[int, int, int]] = []  # (time, machine, job)
    for t, picks in steps:
        # Resolve every group against the pre-step snapshot before any
        # decrement, so a job decremented into another group's (rel, rem)
        # cannot be selected twice within the same step.
        running: list[int] = []
        for (rel, rem), take in picks:
            matches = sorted(
                jid
                for jid, left in remaining.items()
                if left == rem and release[jid] == rel
            )
            running.extend(matches[:take])
        for jid in running:
            remaining[jid] -= 1
        for slot, jid in enumerate(sorted(running)):
            unit_runs.append((t, slot + 1, jid))

    merged: dict[tuple[int, int], list[list[int]]] = {}
    for t, machine, jid in sorted(unit_runs):
        spans = merged.setdefault((machine, jid), [])
        if spans and spans[-1][1] == t:
            spans[-1][1] = t + 1
        else:
            spans.append([t, t + 1])
    segments = [
        Segment(jid, machine, start, end)
        for (machine, jid), spans in merged.items()
        for start, end in spans
    ]
    return Schedule.from_segments(base, segments)
