"""Lifts of disk train tracks and maps to the double cover branched over the
punctures.

Each non-loop polygon lifts to two copies, one per sheet, and each real edge
e lifts to e^1 and e^2, attached to the sheet-1 and sheet-2 copies of the
polygons it meets.  A punctured monogon lifts to a smooth point where e^1
and e^2 join, so a path that turns around a loop changes sheet there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .maps import MapError, TrainTrackMap, spectral, to_decorated, toward_loop, transition_matrix
from .tracks import Stratum, TrainTrack, _stratum, structure_query


class LiftError(MapError):
    """The track or map is outside the supported class for lifting."""


@dataclass(frozen=True)
class LiftResult:
    sheet: int
    labels: tuple[str, ...]  # e^1 for every edge, then e^2 for every edge
    words: dict  # lifted label -> tuple of lifted labels, with '~' for reversed
    matrix: tuple[tuple[int, ...], ...]
    trace: int

    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def collapse(self) -> np.ndarray:
        """Sum over sheets: entry (i, j) counts both lifts of e_i in f(e_j^1)."""
        A = self.array()
        m = A.shape[0] // 2
        return A[:m, :m] + A[m:, :m]


def check_liftable(track: TrainTrack) -> None:
    if structure_query(track).J:
        raise LiftError(f"{track.name} has a joint")
    for p in track.polygons:
        if p.punctured and not p.is_loop:
            raise LiftError(f"punctured polygon {p.id} with {p.cusps} cusps is not supported")
    for e in track.edges:
        if track.is_loop_switch(e.tail) and track.is_loop_switch(e.head):
            raise LiftError(f"edge {e.id} joins two loops")
    polys = [p.id for p in track.polygons if not p.is_loop]
    stems = [e for e in track.edges if not track.is_loop_switch(e.tail) and not track.is_loop_switch(e.head)]
    if len(stems) != len(polys) - 1:
        raise LiftError("polygons and the edges between them do not form a tree")


def lift_track_census(track: TrainTrack) -> Stratum:
    """Complementary regions of the lifted track."""
    check_liftable(track)
    base = _stratum(track)
    interior = tuple(sorted(base.interior * 2, reverse=True))
    n = len(base.punctures)
    if n % 2:
        boundary = tuple(2 * b for b in base.boundary)
    else:
        boundary = tuple(sorted(base.boundary * 2, reverse=True))
    return Stratum(boundary, (), interior)


def _lift_path(track: TrainTrack, path, sheet: int) -> tuple[list, int]:
    """Lifted letters of a path starting on ``sheet``; returns the end sheet."""
    out = []
    s = sheet
    for k, (e, fwd) in enumerate(path.letters):
        if k:
            prev_e, prev_fwd = path.letters[k - 1]
            edge = track.edge_by_id[prev_e]
            at = edge.head if prev_fwd else edge.tail
            if track.is_loop_switch(at):
                s = 3 - s
        out.append((e, fwd, s))
    return out, s


def _label(e: str, s: int) -> str:
    return f"{e}^{s}"


def lift(f: TrainTrackMap, sheet: int = 1) -> LiftResult:
    """The lift of f sending the sheet-1 copy of the first polygon to the
    copy on ``sheet``; sheet 2 is the sheet-swap of sheet 1."""
    if sheet not in (1, 2):
        raise LiftError("sheet must be 1 or 2")
    t = f.track
    check_liftable(t)
    polys = [p for p in t.polygons if not p.is_loop]
    if not polys:
        raise LiftError(f"{t.name} has no polygon")
    # sheet of f(Q^1) for each polygon Q, propagated along the edges between polygons
    where = {polys[0].id: sheet}
    stems = [e for e in t.edges if not t.is_loop_switch(e.tail) and not t.is_loop_switch(e.head)]
    changed = True
    while changed:
        changed = False
        for e in stems:
            a, b = t.polygon_of(e.tail).id, t.polygon_of(e.head).id
            for src, dst, fwd in ((a, b, True), (b, a, False)):
                if src in where and dst not in where:
                    _, end = _lift_path(t, f.image(e.id, fwd), where[src])
                    where[dst] = end
                    changed = True
    labels = [_label(e, 1) for e in t.edge_ids] + [_label(e, 2) for e in t.edge_ids]
    index = {lab: i for i, lab in enumerate(labels)}
    words = {}
    n = len(labels)
    M = [[0] * n for _ in range(n)]
    for e in t.edge_ids:
        edge = t.edge_by_id[e]
        if t.is_loop_switch(edge.tail):
            p, fwd = f.image(e, False), False
            home = t.polygon_of(edge.head).id
        else:
            p, fwd = f.image(e), True
            home = t.polygon_of(edge.tail).id
        for s0 in (1, 2):
            start = where[home] if s0 == 1 else 3 - where[home]
            letters, _ = _lift_path(t, p, start)
            if not fwd:
                letters = [(x, not d, s) for x, d, s in reversed(letters)]
            word = tuple(("" if d else "~") + _label(x, s) for x, d, s in letters)
            words[_label(e, s0)] = word
            j = index[_label(e, s0)]
            for x, _, s in letters:
                M[index[_label(x, s)]][j] += 1
    trace = sum(M[i][i] for i in range(n))
    return LiftResult(sheet, tuple(labels), words, tuple(tuple(r) for r in M), trace)


def disk_trace_predicate(f: TrainTrackMap) -> list[str]:
    """Edges a whose image contains a decorated letter on a itself; empty when
    the disk-level condition for a trace-zero lift holds."""
    t = f.track
    bad = []
    for e in t.edge_ids:
        x = toward_loop(t, e)
        p = f.image(*x)
        dec = to_decorated(t, p)
        if dec is not None:
            hit = any(d.edge == e for d in dec)
        else:
            hit = x in p.letters
        if hit:
            bad.append(e)
    return bad


@dataclass(frozen=True)
class FixedPointReport:
    verdict: str  # TraceZero or TraceNonzero
    traces: tuple[int, int]
    disk_failures: tuple[str, ...]

    @property
    def value(self) -> int:
        return min(self.traces)

    def __str__(self) -> str:
        if self.verdict == "TraceZero":
            head = "TraceZero"
        else:
            head = f"TraceNonzero({self.value})"
        disk = "passes" if not self.disk_failures else "fails at " + ",".join(self.disk_failures)
        return f"{head}; lifted traces {self.traces[0]},{self.traces[1]}; disk predicate {disk}"


def fixed_point_test(f: TrainTrackMap) -> FixedPointReport:
    """Lifted traces for both choices of lift.  The verdict is TraceNonzero
    only when both are nonzero, since either lift may be the one induced by
    the underlying homeomorphism."""
    traces = (lift(f, 1).trace, lift(f, 2).trace)
    verdict = "TraceNonzero" if all(traces) else "TraceZero"
    return FixedPointReport(verdict, traces, tuple(disk_trace_predicate(f)))


def lifted_dilatation(f: TrainTrackMap, sheet: int = 1) -> float:
    return spectral(lift(f, sheet).matrix).lam


def base_dilatation(f: TrainTrackMap) -> float:
    return spectral(transition_matrix(f)).lam
