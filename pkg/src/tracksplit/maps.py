"""Train paths, train-track maps and their transition matrices.

A train path is a list of real letters with a turn between consecutive
letters: after arriving at a switch along a real edge, the path slides along
i_l ("L", towards the next corner counterclockwise) or i_r ("R") and leaves
the neighbouring corner along the next real letter.  At a loop switch both
turns return to the same switch, going round the puncture one way or the
other.

Decorated words describe maps on jointless tracks with one-pronged
punctures: ``x+`` runs along x to its loop, round it counterclockwise (turn
L) and back; ``x-`` goes round clockwise; ``x0`` stops at the loop.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .arith import IntPolynomial, char_poly, count_real_roots, largest_real_root
from .tracks import (SYNTHETIC_NAMES, TrainTrack, TrackError, ValidationReport, builtin_track,
                     parse_track, synthetic_track, validate_track)

Letter = tuple  # (edge id, forward)


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeLetter:
    """A letter as written in a word: e, ~e, e+, e-, e0."""

    edge: str
    reversed: bool = False
    decoration: str = "plain"  # plain, plus, minus, terminal

    def __str__(self) -> str:
        suffix = {"plain": "", "plus": "+", "minus": "-", "terminal": "0"}[self.decoration]
        return ("~" if self.reversed else "") + self.edge + suffix


@dataclass(frozen=True)
class TrainPath:
    letters: tuple[Letter, ...]
    turns: tuple = ()  # 'L', 'R' or None between consecutive letters

    def __post_init__(self):
        if len(self.turns) != max(len(self.letters) - 1, 0):
            raise MapError("turn count must be one less than letter count")

    def __len__(self) -> int:
        return len(self.letters)

    def reversed(self) -> "TrainPath":
        letters = tuple((e, not f) for e, f in reversed(self.letters))
        flip = {"L": "R", "R": "L", None: None}
        return TrainPath(letters, tuple(flip[t] for t in reversed(self.turns)))

    def then(self, turn: str, other: "TrainPath") -> "TrainPath":
        return TrainPath(self.letters + other.letters, self.turns + (turn,) + other.turns)


def single(edge: str, forward: bool = True) -> TrainPath:
    return TrainPath(((edge, forward),))


def arrival_end(letter: Letter) -> tuple:
    return (letter[0], 1 if letter[1] else 0)


def departure_end(letter: Letter) -> tuple:
    return (letter[0], 0 if letter[1] else 1)


def turn_target(track: TrainTrack, s: str, turn: str) -> str:
    return track.v_left(s) if turn == "L" else track.v_right(s)


def turn_step(track: TrainTrack, s: str, turn: str) -> tuple:
    """Infinitesimal step taken at switch s for a turn."""
    if turn == "L":
        return (track.il_slot(s)[0], True)
    return (track.ir_slot(s)[0], False)


def infer_turn(track: TrainTrack, prev: Letter, nxt: Letter) -> str | None:
    s = track.end_switch(arrival_end(prev))
    t = track.end_switch(departure_end(nxt))
    cands = [d for d in "LR" if turn_target(track, s, d) == t]
    return cands[0] if len(cands) == 1 else None


def expand(track: TrainTrack, path: TrainPath) -> list[tuple]:
    """All steps of a path, real and infinitesimal, as (edge id, forward)."""
    out = []
    for i, letter in enumerate(path.letters):
        out.append(letter)
        if i < len(path.turns):
            s = track.end_switch(arrival_end(letter))
            out.append(turn_step(track, s, path.turns[i]))
    return out


def path_violations(track: TrainTrack, path: TrainPath) -> list[str]:
    out = []
    if not path.letters:
        return ["empty image"]
    for e, _ in path.letters:
        if e not in track.edge_by_id:
            return [f"unknown edge {e}"]
    for i, t in enumerate(path.turns):
        a, b = path.letters[i], path.letters[i + 1]
        s = track.end_switch(arrival_end(a))
        nxt = track.end_switch(departure_end(b))
        if t is None:
            if b == (a[0], not a[1]) or not any(turn_target(track, s, d) == nxt for d in "LR"):
                out.append(f"sharp turn at {s} between letters {i + 1} and {i + 2}")
            else:
                out.append(f"ambiguous turn at {s} between letters {i + 1} and {i + 2}")
        elif turn_target(track, s, t) != nxt:
            out.append(f"sharp turn at {s} between letters {i + 1} and {i + 2}")
    return out


# -- decorated words --------------------------------------------------------


def decorated_compatible(track: TrainTrack) -> bool:
    """Jointless, one-pronged punctures, every real edge has exactly one loop end
    and every other corner lies on a polygon with at least three cusps."""
    for p in track.polygons:
        if p.punctured and p.cusps != 1:
            return False
        if not p.punctured and p.cusps < 3:
            return False
    for e in track.edges:
        if track.is_loop_switch(e.tail) == track.is_loop_switch(e.head):
            return False
    return all(track.valence(v) == 1 for v in track.switches if track.is_loop_switch(v))


def toward_loop(track: TrainTrack, edge: str) -> Letter:
    e = track.edge_by_id[edge]
    return (edge, track.is_loop_switch(e.head))


def parse_decorated(track: TrainTrack, tokens: Sequence[str]) -> TrainPath:
    letters: list = []
    turns: list = []
    for k, tok in enumerate(tokens):
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_']*)([+\-0∘])", tok)
        if not m:
            raise MapError(f"bad decorated letter {tok!r}")
        edge, deco = m.group(1), m.group(2)
        if edge not in track.edge_by_id:
            raise MapError(f"unknown edge {edge!r}")
        x = toward_loop(track, edge)
        if letters:
            turns.append(infer_turn(track, letters[-1], x))
        letters.append(x)
        if deco in "0∘":
            if k != len(tokens) - 1:
                raise MapError("terminal letter before the end of a word")
        else:
            if k == len(tokens) - 1:
                raise MapError("decorated word must end with a terminal letter")
            turns.append("L" if deco == "+" else "R")
            letters.append((edge, not x[1]))
    return TrainPath(tuple(letters), tuple(turns))


def to_decorated(track: TrainTrack, path: TrainPath) -> list[EdgeLetter] | None:
    """Decorated form of a path that starts away from the loops, or None."""
    out = []
    i = 0
    L = path.letters
    while i < len(L):
        e, f = L[i]
        if (e, f) != toward_loop(track, e):
            return None
        if i == len(L) - 1:
            out.append(EdgeLetter(e, False, "terminal"))
            break
        if L[i + 1] != (e, not f) or i + 2 >= len(L):
            return None
        out.append(EdgeLetter(e, False, "plus" if path.turns[i] == "L" else "minus"))
        if path.turns[i + 1] is None or path.turns[i + 1] != infer_turn(track, L[i + 1], L[i + 2]):
            return None
        i += 2
    return out


def decorated_length(path: TrainPath) -> int:
    """Word length counting x+ and x- as two letters, x0 as one."""
    return len(path.letters)


def parse_plain(track: TrainTrack, tokens: Sequence[str]) -> TrainPath:
    letters = []
    explicit = []
    for tok in tokens:
        m = re.fullmatch(r"(~?)([A-Za-z_][A-Za-z0-9_']*)([+\-]?)", tok)
        if not m:
            raise MapError(f"bad letter {tok!r}")
        if m.group(2) not in track.edge_by_id:
            raise MapError(f"unknown edge {m.group(2)!r}")
        letters.append((m.group(2), m.group(1) == ""))
        explicit.append({"+": "L", "-": "R", "": None}[m.group(3)])
    if explicit and explicit[-1] is not None:
        raise MapError("a turn suffix on the last letter has nothing to turn towards")
    turns = []
    for i in range(len(letters) - 1):
        t = explicit[i]
        if t is None and letters[i + 1] != (letters[i][0], not letters[i][1]):
            t = infer_turn(track, letters[i], letters[i + 1])
        turns.append(t)
    return TrainPath(tuple(letters), tuple(turns))


def format_plain(path: TrainPath) -> str:
    toks = []
    for i, (e, f) in enumerate(path.letters):
        t = path.turns[i] if i < len(path.turns) else None
        toks.append(("" if f else "~") + e + {"L": "+", "R": "-", None: ""}[t])
    return " ".join(toks)


# -- maps -------------------------------------------------------------------


@dataclass(frozen=True)
class TrainTrackMap:
    name: str
    track: TrainTrack
    vertex_map: dict
    images: dict  # real edge -> image of the edge traversed tail to head
    mode: str = "plain"
    track_ref: str | None = None

    def image(self, edge: str, forward: bool = True) -> TrainPath:
        p = self.images[edge]
        return p if forward else p.reversed()

    def apply(self, path: TrainPath) -> TrainPath:
        """f applied to a path: images concatenated, turns carried over."""
        out = self.image(*path.letters[0])
        for t, letter in zip(path.turns, path.letters[1:]):
            out = out.then(t, self.image(*letter))
        return out

    def word(self, edge: str) -> str:
        if self.mode == "decorated":
            x = toward_loop(self.track, edge)
            dec = to_decorated(self.track, self.image(*x))
            if dec is not None:
                return " ".join(str(d) for d in dec)
        return format_plain(self.images[edge])

    @property
    def switch_preimage(self) -> dict:
        return {w: v for v, w in self.vertex_map.items()}


def _resolve_track(ref: str, base_dir: str | None) -> TrainTrack:
    if ref in ("peacock", "snail"):
        return builtin_track(ref)
    if ref in SYNTHETIC_NAMES:
        return synthetic_track(ref)
    path = ref if base_dir is None else os.path.join(base_dir, ref)
    if not os.path.exists(path):
        raise MapError(f"cannot resolve track {ref!r}")
    with open(path, encoding="utf-8") as fh:
        return parse_track(fh.read())


def parse_map(text: str, track: TrainTrack | None = None, base_dir: str | None = None) -> TrainTrackMap:
    name = None
    mode = None
    ref = None
    vlines: dict = {}
    words: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw = toks[0]
        if kw == "map":
            if len(toks) < 2:
                raise MapError(f"line {lineno}: usage: map NAME track=TRACK [mode=plain|decorated]")
            name = toks[1]
            for t in toks[2:]:
                k, _, v = t.partition("=")
                if k == "track":
                    ref = v
                elif k == "mode" and v in ("plain", "decorated"):
                    mode = v
                else:
                    raise MapError(f"line {lineno}: bad map option {t!r}")
        elif kw == "vertex":
            if len(toks) != 4 or toks[2] != "->":
                raise MapError(f"line {lineno}: usage: vertex SWITCH -> SWITCH")
            vlines[toks[1]] = toks[3]
        elif kw == "edge":
            if len(toks) < 4 or toks[2] != "->":
                raise MapError(f"line {lineno}: usage: edge ID -> WORD")
            if toks[1] in words:
                raise MapError(f"line {lineno}: duplicate image for edge {toks[1]}")
            words[toks[1]] = toks[3:]
        else:
            raise MapError(f"line {lineno}: unknown keyword {kw!r}")
    if name is None:
        raise MapError("missing 'map NAME track=...' header")
    if track is None:
        if ref is None:
            raise MapError("map header names no track")
        track = _resolve_track(ref, base_dir)
    mode = mode or "decorated"
    if mode == "decorated" and not decorated_compatible(track):
        raise MapError("decorated words need a jointless track with one-pronged punctures")
    images = {}
    for e in track.edge_ids:
        if e not in words:
            raise MapError(f"no image given for edge {e}")
        try:
            if mode == "decorated":
                p = parse_decorated(track, words[e])
                x = toward_loop(track, e)
                images[e] = p if x[1] else p.reversed()
            else:
                images[e] = parse_plain(track, words[e])
        except MapError as exc:
            raise MapError(f"edge {e}: {exc}") from None
    for e in words:
        if e not in track.edge_by_id:
            raise MapError(f"image given for unknown edge {e}")
    for v, w in vlines.items():
        if not track.is_switch(v) or not track.is_switch(w):
            raise MapError(f"vertex line names unknown switch {v} or {w}")
    vmap = dict(vlines)
    for e in track.edges:
        img = images[e.id]
        vmap.setdefault(e.tail, track.end_switch(departure_end(img.letters[0])))
        vmap.setdefault(e.head, track.end_switch(arrival_end(img.letters[-1])))
    return TrainTrackMap(name, track, vmap, images, mode, ref)


def serialize_map(f: TrainTrackMap) -> str:
    ref = f.track_ref or f.track.name
    lines = [f"map {f.name} track={ref} mode={f.mode}"]
    for v in f.track.switches:
        if v in f.vertex_map:
            lines.append(f"vertex {v} -> {f.vertex_map[v]}")
    for e in f.track.edge_ids:
        lines.append(f"edge {e} -> {f.word(e)}")
    return "\n".join(lines) + "\n"


def validate_map(f: TrainTrackMap) -> ValidationReport:
    t = f.track
    out = [f"track: {v}" for v in validate_track(t).violations]
    if out:
        return ValidationReport(tuple(out))
    vm = f.vertex_map
    missing = [v for v in t.switches if v not in vm]
    if missing:
        out.append(f"vertex map undefined at {', '.join(missing)}")
    elif sorted(vm.values()) != sorted(t.switches) or set(vm) != set(t.switches):
        out.append("vertex map is not a bijection of switches")
    else:
        for v in t.switches:
            p, q = t.polygon_of(v), t.polygon_of(vm[v])
            if p.cusps != q.cusps or p.punctured != q.punctured or vm[t.v_left(v)] != t.v_left(vm[v]):
                out.append(f"vertex map is not a polygon rotation at {v}")
                break
    for e in t.edges:
        img = f.images.get(e.id)
        if img is None:
            out.append(f"edge {e.id}: no image")
            continue
        bad = path_violations(t, img)
        out.extend(f"edge {e.id}: {b}" for b in bad)
        if bad or missing:
            continue
        start = t.end_switch(departure_end(img.letters[0]))
        stop = t.end_switch(arrival_end(img.letters[-1]))
        if start != vm[e.tail] or stop != vm[e.head]:
            out.append(f"edge {e.id}: endpoint mismatch (image runs {start} -> {stop}, "
                       f"vertex map wants {vm[e.tail]} -> {vm[e.head]})")
    if f.mode == "decorated" and not decorated_compatible(t):
        out.append("decorated mode on a track without one-pronged jointless structure")
    return ValidationReport(tuple(out))


def identity_map(track: TrainTrack) -> TrainTrackMap:
    return TrainTrackMap("id", track, {v: v for v in track.switches},
                         {e: single(e) for e in track.edge_ids}, "plain")


def map_from_isomorphism(track: TrainTrack, iso, name: str = "h") -> TrainTrackMap:
    if iso.mirrored:
        raise MapError("an orientation-reversing isomorphism does not induce a train-track map")
    images = {e: single(t, not rev) for e, (t, rev) in iso.edge_map.items()}
    return TrainTrackMap(name, track, dict(iso.switch_map), images, "plain")


def compose(f: TrainTrackMap, g: TrainTrackMap, name: str | None = None) -> TrainTrackMap:
    """f after g, both on the same track."""
    images = {e: f.apply(g.images[e]) for e in g.track.edge_ids}
    vmap = {v: f.vertex_map[g.vertex_map[v]] for v in g.track.switches}
    mode = f.mode if f.mode == g.mode else "plain"
    return TrainTrackMap(name or f"{f.name}*{g.name}", g.track, vmap, images, mode, g.track_ref)


# -- matrices ---------------------------------------------------------------


@dataclass(frozen=True)
class TransitionMatrix:
    rows: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    extended: bool = False

    @property
    def size(self) -> int:
        return len(self.rows)

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.size))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def matrix(rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> TransitionMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise MapError("matrix is not square")
    if any(x < 0 for r in rows for x in r):
        raise MapError("matrix has a negative entry")
    labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(1, n + 1))
    return TransitionMatrix(rows, labels)


def transition_matrix(f: TrainTrackMap, extended: bool = False, order: Sequence[str] | None = None) -> TransitionMatrix:
    t = f.track
    labels = list(order) if order else list(t.edge_ids)
    if sorted(labels) != sorted(t.edge_ids):
        raise MapError("order must list every real edge once")
    if extended:
        labels += [s.id for s in t.sides]
    idx = {e: i for i, e in enumerate(labels)}
    n = len(labels)
    M = [[0] * n for _ in range(n)]
    for e in t.edge_ids:
        j = idx[e]
        steps = expand(t, f.images[e]) if extended else f.images[e].letters
        for s, _ in steps:
            M[idx[s]][j] += 1
    if extended:
        for s in t.sides:
            img = t.il_slot(f.vertex_map[s.tail])[0]
            M[idx[img]][idx[s.id]] += 1
    return TransitionMatrix(tuple(tuple(r) for r in M), tuple(labels), extended)


# -- spectral data ----------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    charpoly: IntPolynomial
    pf: bool
    witness: int | None
    lam: float
    lam_interval: tuple
    mu: tuple[float, ...] | None
    labels: tuple[str, ...] = ()


def pf_witness(rows: Sequence[Sequence[int]]) -> int | None:
    """Least N <= n^2 - 2n + 2 with M^N strictly positive, or None."""
    n = len(rows)
    if n == 0:
        return None
    B = np.array(rows) > 0
    P = B.copy()
    for N in range(1, n * n - 2 * n + 3):
        if P.all():
            return N
        P = (P.astype(np.int64) @ B.astype(np.int64)) > 0
    return None


def eigenvector(M: np.ndarray, lam: float, iterations: int = 6) -> np.ndarray:
    """Right eigenvector for lam by shifted inverse iteration."""
    n = M.shape[0]
    shift = lam + 1e-10 * max(1.0, abs(lam))
    A = M.astype(float) - shift * np.eye(n)
    x = np.ones(n)
    for _ in range(iterations):
        try:
            y = np.linalg.solve(A, x)
        except np.linalg.LinAlgError:
            y = np.linalg.lstsq(A, x, rcond=None)[0]
        x = y / np.max(np.abs(y))
    if x.sum() < 0:
        x = -x
    return x


def spectral(m, pin: tuple[str, float] | None = None) -> Spectrum:
    if not isinstance(m, TransitionMatrix):
        m = matrix(m)
    rows = m.rows
    if any(x < 0 for r in rows for x in r):
        raise MapError("matrix has a negative entry")
    chi = char_poly(rows)
    enc = largest_real_root(chi)
    if enc is None:
        lo = hi = Fraction(0)
    else:
        lo, hi = enc
    lam = float((lo + hi) / 2)
    w = pf_witness(rows)
    mu = None
    if m.size and lam > 0:
        v = eigenvector(m.array(), lam)
        if pin is not None:
            label, value = pin
            v = v * (value / v[m.labels.index(label)])
        else:
            v = v / np.max(v)
        mu = tuple(float(x) for x in v)
    return Spectrum(chi, w is not None, w, lam, (lo, hi), mu, m.labels)


# -- link maps --------------------------------------------------------------


def df(f: TrainTrackMap, end: tuple) -> tuple:
    """Derivative on real edge-ends: the first edge-end the image leaves by."""
    edge, k = end
    first = f.image(edge, k == 0).letters[0]
    return departure_end(first)


@dataclass(frozen=True)
class LinkMap:
    switch: str
    df: dict
    gate_depth: int


class GateBoundExceeded(MapError):
    pass


def link_map(f: TrainTrackMap, v: str) -> LinkMap:
    t = f.track
    R = t.real_ends(v)
    d = {end: df(f, end) for end in R}
    bound = len(t.edges) * len(t.switches)
    cur = list(R)
    for k in range(1, bound + 1):
        cur = [df(f, end) for end in cur]
        if len(set(cur)) == 1:
            return LinkMap(v, d, k)
    raise GateBoundExceeded(f"gate depth at {v} exceeds {bound}")


# -- PF census --------------------------------------------------------------


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def pf_census(n: int, B: float) -> list[TransitionMatrix]:
    """Every n x n PF matrix with spectral radius at most B."""
    if n not in (2, 3):
        raise MapError("pf_census supports n in {2, 3} only")
    if B < 1:
        return []
    exponent = n * n - 2 * n + 3
    cap = int(Fraction(B) ** exponent) if isinstance(B, int) else int(B ** exponent + 1e-9)
    from math import comb
    if comb(cap + n * n, n * n) > 3_000_000:
        raise MapError("pf_census search space too large")
    bound = Fraction(B)
    out = []
    for total in range(1, cap + 1):
        for entries in _compositions(total, n * n):
            rows = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
            colsum = [sum(rows[i][j] for i in range(n)) for j in range(n)]
            if min(colsum) == 0 or min(colsum) > B:
                continue
            if pf_witness(rows) is None:
                continue
            chi = char_poly(rows)
            if count_real_roots(chi, bound, None) == 0:
                out.append(TransitionMatrix(rows, tuple(f"e{i}" for i in range(1, n + 1))))
    out.sort(key=lambda m: m.rows)
    return out
