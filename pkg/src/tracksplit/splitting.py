"""Tight splits of train-track maps, joint reduction, and a fold-based
generator of train-track maps for testing.

A left split at v peels l(v) off: the new edge alpha runs from the far end
of l(v) to the far end of r(v_l), carried by the path l(v), i_l, ~r(v_l).
At the far end of r(v_l) alpha sits immediately to the left of r(v_l); at
the far end of l(v) it takes l(v)'s place.  Right splits are the mirror
image.  The fold matrix is P = I + D_{i,j} with i the index of r(v_l) and j
the index of l(v), which alpha inherits.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

import numpy as np

from .maps import (TrainPath, TrainTrackMap, compose, df, map_from_isomorphism, single, spectral,
                   transition_matrix, validate_map)
from .tracks import (Edge, TrainTrack, canonical_form, canonical_switch_order, current_orders,
                     is_isomorphic, isomorphisms, structure_query, validate_track, with_orders)


class SplitError(ValueError):
    pass


@dataclass(frozen=True)
class SplitMove:
    switch: str
    side: str
    folded: tuple[str, str]
    alpha: str
    P: tuple[int, int]  # 1-based (i, j): P = I + D_{i,j}

    def matrix(self, n: int) -> np.ndarray:
        P = np.eye(n, dtype=np.int64)
        P[self.P[0] - 1, self.P[1] - 1] += 1
        return P

    def inverse_matrix(self, n: int) -> np.ndarray:
        Q = np.eye(n, dtype=np.int64)
        Q[self.P[0] - 1, self.P[1] - 1] -= 1
        return Q


@dataclass(frozen=True)
class _Fold:
    """Combinatorial data of one split: alpha in the new track maps to ``path``."""

    move: SplitMove
    a_in: tuple  # letter: l(v) (or r(v)) traversed into v
    b_out: tuple  # letter: r(v_l) (or l(v_r)) traversed out of the neighbour corner
    turn: str
    path: TrainPath


def _fresh_name(track: TrainTrack, base: str) -> str:
    root = base.rstrip("'")
    k = 1
    while root + "'" * k in track.edge_by_id:
        k += 1
    return root + "'" * k


def split_track(track: TrainTrack, v: str, side: str) -> tuple[TrainTrack, _Fold]:
    """The split track at v (combinatorial; no map involved)."""
    if side not in ("left", "right"):
        raise SplitError(f"side must be left or right, not {side!r}")
    if track.valence(v) < 2:
        raise SplitError(f"switch {v} has a single real edge")
    if side == "left":
        a_end, w = track.left(v), track.v_left(v)
        b_end = track.right(w)
        turn = "L"
    else:
        a_end, w = track.right(v), track.v_right(v)
        b_end = track.left(w)
        turn = "R"
    A, B = a_end[0], b_end[0]
    if A == B:
        raise SplitError(f"split at {v} would fold {A} onto itself")
    u1_end, u2_end = track.far_end(a_end), track.far_end(b_end)
    u1, u2 = track.end_switch(u1_end), track.end_switch(u2_end)
    alpha = _fresh_name(track, A)
    orders = current_orders(track)
    orders[v].remove(a_end)
    orders[u1][orders[u1].index(u1_end)] = (alpha, 0)
    k = orders[u2].index(u2_end)
    orders[u2].insert(k if side == "left" else k + 1, (alpha, 1))
    edges = [Edge(alpha, u1, u2) if e.id == A else e for e in track.edges]
    new = with_orders(track, orders, edges, name=f"{track.name}_{side[0]}{v}")
    rep = validate_track(new)
    if not rep.valid:
        raise SplitError(f"split at {v} ({side}) gives an invalid track: {rep.violations[0]}")
    a_in = (A, a_end[1] == 1)
    b_out = (B, b_end[1] == 0)
    path = TrainPath((a_in, b_out), (turn,))
    i = track.edge_index(B) + 1
    j = track.edge_index(A) + 1
    return new, _Fold(SplitMove(v, side, (A, B), alpha, (i, j)), a_in, b_out, turn, path)


def _rewrite(path: TrainPath, fold: _Fold) -> TrainPath:
    a_in, b_out, T = fold.a_in, fold.b_out, fold.turn
    rev_b = (b_out[0], not b_out[1])
    rev_a = (a_in[0], not a_in[1])
    T_rev = "R" if T == "L" else "L"
    letters, turns = [], []
    L, Tn = path.letters, path.turns
    i = 0
    while i < len(L):
        if i + 1 < len(L) and L[i] == a_in and Tn[i] == T and L[i + 1] == b_out:
            new = (fold.move.alpha, True)
        elif i + 1 < len(L) and L[i] == rev_b and Tn[i] == T_rev and L[i + 1] == rev_a:
            new = (fold.move.alpha, False)
        else:
            new = None
        if letters:
            turns.append(Tn[i - 1])
        if new is None:
            letters.append(L[i])
            i += 1
        else:
            letters.append(new)
            i += 2
    return TrainPath(tuple(letters), tuple(turns))


# -- splittability ----------------------------------------------------------


def _conditions_hold(f: TrainTrackMap, v: str, side: str) -> bool:
    t = f.track
    if side == "left":
        a_end, w, T, T_rev = t.left(v), t.v_left(v), "L", "R"
        b_end = t.right(w)
    else:
        a_end, w, T, T_rev = t.right(v), t.v_right(v), "R", "L"
        b_end = t.left(w)
    if a_end[0] == b_end[0]:
        return False
    a_in = (a_end[0], a_end[1] == 1)
    b_out = (b_end[0], b_end[1] == 0)
    a_out = (a_in[0], not a_in[1])
    b_in = (b_out[0], not b_out[1])
    for p in f.images.values():
        L, Tn = p.letters, p.turns
        for k, x in enumerate(L):
            if x == a_in and not (k + 1 < len(L) and Tn[k] == T and L[k + 1] == b_out):
                return False
            if x == a_out and not (k > 0 and Tn[k - 1] == T_rev and L[k - 1] == b_in):
                return False
    return True


def admissible_sides(f: TrainTrackMap, v: str) -> tuple[str, ...]:
    if f.track.valence(v) < 2:
        return ()
    return tuple(s for s in ("left", "right") if _conditions_hold(f, v, s))


def is_rigid(f: TrainTrackMap, v: str) -> bool:
    t = f.track
    if t.valence(v) < 2:
        return False
    pre = f.switch_preimage.get(v)
    if pre is None:
        raise SplitError(f"no preimage switch for {v}")
    hit = {df(f, end) for end in t.real_ends(pre)}
    return set(t.real_ends(v)) <= hit


def splittability(f: TrainTrackMap, v: str) -> str:
    """Singleton, Left, Right, Rigid or Unsupported."""
    if f.switch_preimage.get(v) is None:
        raise SplitError(f"no preimage switch for {v}")
    if f.track.valence(v) < 2:
        return "Singleton"
    sides = admissible_sides(f, v)
    if sides:
        return sides[0].capitalize()
    if is_rigid(f, v):
        return "Rigid"
    return "Unsupported"


def tight_split(f: TrainTrackMap, v: str, side: str) -> tuple[TrainTrackMap, SplitMove]:
    side = side.lower()
    if not _conditions_hold(f, v, side):
        raise SplitError(f"{side} split is not admissible at {v}")
    t = f.track
    new_track, fold = split_track(t, v, side)
    A = fold.move.folded[0]
    images = {}
    for e in t.edge_ids:
        if e == A:
            continue
        p = _rewrite(f.images[e], fold)
        if any(x[0] == A for x in p.letters):
            raise SplitError(f"rewriting left an occurrence of {A} in the image of {e}")
        images[e] = p
    head = _rewrite(f.image(*fold.a_in), fold)
    tail = _rewrite(f.image(*fold.b_out), fold)
    alpha_img = head.then(fold.turn, tail)
    if any(x[0] == A for x in alpha_img.letters):
        raise SplitError(f"rewriting left an occurrence of {A} in the image of the new edge")
    images = {e: (alpha_img if e == fold.move.alpha else images[e]) for e in new_track.edge_ids}
    g = TrainTrackMap(f.name, new_track, dict(f.vertex_map), images, "plain", new_track.name)
    M = transition_matrix(f).array()
    n = M.shape[0]
    expect = fold.move.inverse_matrix(n) @ M @ fold.move.matrix(n)
    got = transition_matrix(g).array()
    if not np.array_equal(expect, got):
        raise SplitError("transition matrix after the split is not P^-1 M P")
    return g, fold.move


# -- rigid cycles -----------------------------------------------------------


def rigid_cycle_check(f: TrainTrackMap) -> list[tuple[str, ...]]:
    t = f.track
    rigid = {v for v in t.switches if is_rigid(f, v)}
    pre = f.switch_preimage
    cycles = set()
    for v in rigid:
        chain = [v]
        w = pre[v]
        for _ in range(len(t.switches)):
            if w not in rigid:
                break
            if w == v:
                k = chain.index(min(chain))
                cycles.add(tuple(chain[k:] + chain[:k]))
                break
            chain.append(w)
            w = pre[w]
    return sorted(cycles)


# -- joint reduction --------------------------------------------------------


@dataclass
class SplitLog:
    moves: list = field(default_factory=list)
    records: list = field(default_factory=list)
    seen: set = field(default_factory=set)
    J: list = field(default_factory=list)

    def to_lines(self) -> list[str]:
        return [json.dumps(r, sort_keys=True) for r in self.records]


class ReductionError(SplitError):
    def __init__(self, message: str, log: SplitLog):
        super().__init__(message)
        self.log = log


def _choose(f: TrainTrackMap, candidates: list[str]) -> tuple[str, str] | None:
    t = f.track
    rank = {v: i for i, v in enumerate(canonical_switch_order(t))}
    usable = []
    for v in candidates:
        sides = admissible_sides(f, v)
        if sides:
            usable.append((-t.valence(v), rank[v], v, sides[0]))
    if not usable:
        return None
    usable.sort()
    top = [u for u in usable if u[0] == usable[0][0]]
    _, _, v, side = top[0]
    return v, side


def reduce_joints(f: TrainTrackMap, max_steps: int = 100_000, target: TrainTrack | None = None,
                  memory_guard: int = 1_000_000) -> tuple[TrainTrackMap, SplitLog]:
    """Split loop switches of maximal valence until no joints remain.  With a
    target track, keep going from jointless tracks by splitting a maximal
    valence polygon corner until the track is isomorphic to the target."""
    sp = spectral(transition_matrix(f))
    if not sp.pf:
        raise SplitError("reduce_joints needs a Perron-Frobenius map")
    log = SplitLog()
    M = transition_matrix(f)
    log.seen.add(M.rows)
    cur = f
    for step in range(max_steps + 1):
        t = cur.track
        J = structure_query(t).J
        log.J.append(J)
        if J == 0 and (target is None or is_isomorphic(t, target)):
            return cur, log
        if step == max_steps:
            break
        if J > 0:
            loops = [v for v in t.switches if t.is_loop_switch(v) and t.valence(v) >= 2]
            vmax = max(t.valence(v) for v in loops)
            cands = [v for v in loops if t.valence(v) == vmax and not is_rigid(cur, v)]
        else:
            corners = [v for v in t.switches if not t.is_loop_switch(v) and t.valence(v) >= 2]
            if not corners:
                raise ReductionError("no polygon corner to split towards the target", log)
            vmax = max(t.valence(v) for v in corners)
            cands = [v for v in corners if t.valence(v) == vmax]
        pick = _choose(cur, cands)
        if pick is None:
            raise ReductionError(f"no splittable switch among {cands}", log)
        v, side = pick
        before = transition_matrix(cur)
        mu_before = spectral(before).mu
        cur, move = tight_split(cur, v, side)
        after = transition_matrix(cur)
        log.moves.append(move)
        log.records.append({"step": step + 1, "switch": v, "side": side, "P": list(move.P),
                            "folded": list(move.folded), "alpha": move.alpha,
                            "matrix": [list(r) for r in after.rows],
                            "mu_before": [round(x, 12) for x in mu_before]})
        if len(log.seen) < memory_guard:
            log.seen.add(after.rows)
    raise ReductionError(f"max steps ({max_steps}) exceeded", log)


# -- fold-based generator ---------------------------------------------------


@dataclass
class _Move:
    v: str
    side: str
    fold: _Fold
    split: TrainTrack  # the split track, in the labels of the parent representative
    target: int  # class index of the split track
    isos: list  # isomorphisms rep[target] -> split


@dataclass
class SplitGraph:
    """Isomorphism classes of tracks reachable from a base track by splits.
    Class 0 is the base track itself; every other class keeps one
    representative track."""

    reps: list
    moves: list  # per class, list of _Move
    dist: list  # splits needed to return to class 0 (None if impossible)


_GRAPHS: dict = {}


def split_graph(track: TrainTrack, limit: int = 500) -> SplitGraph:
    key = (track.name, canonical_form(track), tuple(track.edge_ids), tuple(track.switches))
    if key in _GRAPHS:
        return _GRAPHS[key]
    reps, codes, moves = [track], {canonical_form(track): 0}, []
    k = 0
    while k < len(reps):
        t = reps[k]
        out = []
        for v in t.switches:
            if t.valence(v) < 2:
                continue
            for side in ("left", "right"):
                try:
                    u, fold = split_track(t, v, side)
                except SplitError:
                    continue
                c = canonical_form(u)
                if c not in codes:
                    if len(reps) >= limit:
                        raise SplitError(f"more than {limit} track classes reachable by splits")
                    codes[c] = len(reps)
                    reps.append(u)
                j = codes[c]
                out.append(_Move(v, side, fold, u, j, isomorphisms(reps[j], u)))
        moves.append(out)
        k += 1
    dist = [None] * len(reps)
    dist[0] = 0
    changed = True
    while changed:
        changed = False
        for i, out in enumerate(moves):
            best = min((dist[m.target] + 1 for m in out if dist[m.target] is not None), default=None)
            if best is not None and (dist[i] is None or best < dist[i]):
                dist[i] = best
                changed = True
    g = SplitGraph(reps, moves, dist)
    _GRAPHS[key] = g
    return g


@dataclass
class FoldCycle:
    """Splits tau_0 -> tau_1 -> ... -> tau_k, each tau_{i+1} identified with a
    class representative by an isomorphism, and tau_k = tau_0."""

    graph: SplitGraph
    classes: list  # c_0 = 0, ..., c_k = 0
    steps: list  # (move, isomorphism rep[c_{i+1}] -> move.split)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def tracks(self) -> list:
        return [self.graph.reps[c] for c in self.classes]

    def _push(self, path: TrainPath, i: int) -> TrainPath:
        """A path in tau_{i+1} carried into tau_i."""
        move, iso = self.steps[i]
        fold = move.fold
        out = None
        for idx, (e, fwd) in enumerate(path.letters):
            y, rev = iso.edge_map[e]
            fwd = fwd != rev
            if y == fold.move.alpha:
                piece = fold.path if fwd else fold.path.reversed()
            else:
                piece = single(y, fwd)
            out = piece if out is None else out.then(path.turns[idx - 1], piece)
        return out

    def map_on(self, i: int = 0, name: str = "g") -> TrainTrackMap:
        """The map on tau_i obtained by running the cycle from position i."""
        k = self.length
        t = self.graph.reps[self.classes[i]]
        images = {}
        vmap = {}
        for e in t.edge_ids:
            p = single(e)
            for j in reversed(range(k)):
                p = self._push(p, (i + j) % k)
            images[e] = p
        for v in t.switches:
            w = v
            for j in reversed(range(k)):
                w = self.steps[(i + j) % k][1].switch_map[w]
            vmap[v] = w
        return TrainTrackMap(name, t, vmap, images, "plain")


def fold_cycle(track: TrainTrack, seed, length: int) -> FoldCycle:
    """A random closed walk of at least ``length`` splits from ``track`` back to itself."""
    rng = random.Random(seed)
    g = split_graph(track)
    if length > 0 and not any(g.dist[m.target] is not None for m in g.moves[0]):
        raise SplitError(f"no split sequence returns to {track.name}")
    classes, steps = [0], []
    cur = 0
    while len(steps) < length or cur != 0:
        opts = [m for m in g.moves[cur] if g.dist[m.target] is not None]
        if len(steps) >= length:
            opts = [m for m in opts if g.dist[m.target] < g.dist[cur]]
        m = rng.choice(opts)
        steps.append((m, rng.choice(m.isos)))
        cur = m.target
        classes.append(cur)
    return FoldCycle(g, classes, steps)


def generate_map_by_folds(track: TrainTrack, seed, length: int) -> TrainTrackMap:
    """A train-track map on ``track`` built from random splits that return to
    an isomorphic track, composed with a random automorphism of the track."""
    rng = random.Random(f"auto:{seed}")
    auto = rng.choice(isomorphisms(track, track))
    h = map_from_isomorphism(track, auto)
    if length == 0:
        f = h
    else:
        f = compose(fold_cycle(track, seed, length).map_on(0), h)
    f = TrainTrackMap(f"fold{seed}", track, f.vertex_map, f.images, "plain")
    rep = validate_map(f)
    if not rep.valid:
        raise SplitError("generated map is invalid: " + "; ".join(rep.violations))
    return f
