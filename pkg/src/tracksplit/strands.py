"""Planarity of a train-track map's image, read off its words.

Each real edge's image is an arc running through the fibred neighbourhood of
the track: along real strips and, at switches, along infinitesimal sides.
Each side also has an image arc.  Around the image of a source switch the
arcs that end there form a star.  The words are realised by an embedding
exactly when, at every switch, the arcs passing through and the star sitting
there can be drawn without crossings in the order forced along each strip.

Order along a strip: two strands are compared by walking forward until they
part.  Facing forward after arriving through slot s, the exits read left to
right in clockwise order starting just after s (the star sits between i_l
and i_r).  Strands that end together at a star through the same slot are
ordered as their source edge-ends are around the source switch.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .maps import TrainTrackMap, expand

STAR = ("*", 0)


@dataclass(frozen=True)
class AbsorptionViolation:
    switch: str
    kind: str  # absorbed, crossing or orientation
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.switch}: {self.detail}"


@dataclass
class _Arc:
    label: str
    steps: list
    start_end: tuple  # source edge-end where the arc begins
    stop_end: tuple


def _leave(step):
    return (step[0], 0 if step[1] else 1)


def _arrive(step):
    return (step[0], 1 if step[1] else 0)


class _Planarity:
    def __init__(self, f: TrainTrackMap, edges=None):
        t = f.track
        self.t = t
        self.f = f
        inv = {w: v for v, w in f.vertex_map.items()}
        self.source = inv
        arcs = []
        chosen = t.edge_ids if edges is None else [e for e in t.edge_ids if e in set(edges)]
        for e in chosen:
            arcs.append(_Arc(e, expand(t, f.images[e]), (e, 0), (e, 1)))
        for s in t.sides:
            if s.tail not in f.vertex_map:
                continue  # partial map: the side's switch has no image yet
            img = t.il_slot(f.vertex_map[s.tail])[0]
            arcs.append(_Arc(s.id, [(img, True)], (s.id, 0), (s.id, 1)))
        self.arcs = arcs
        self.ccw = {}
        self.pos = {}
        for w in t.switches:
            slots = list(t.ccw_slots(w))
            k = slots.index(t.il_slot(w))
            slots.insert(k + 1, STAR)
            self.ccw[w] = slots
            self.pos[w] = {s: i for i, s in enumerate(slots)}
        self.src_index = {}
        for u in t.switches:
            for i, s in enumerate(t.ccw_slots(u)):
                self.src_index[s] = i
        self.slot_switch = {}
        for w in t.switches:
            for s in t.ccw_slots(w):
                self.slot_switch[s] = w

    # walking ------------------------------------------------------------

    def _walk(self, a: int, i: int, d: int):
        steps = self.arcs[a].steps
        while True:
            st = steps[i]
            arr = _arrive(st) if d > 0 else _leave(st)
            if d > 0:
                if i + 1 < len(steps):
                    i += 1
                    yield arr, _leave(steps[i]), None
                else:
                    yield arr, STAR, self.arcs[a].stop_end
                    return
            else:
                if i > 0:
                    i -= 1
                    yield arr, _arrive(steps[i]), None
                else:
                    yield arr, STAR, self.arcs[a].start_end
                    return

    def compare(self, A, B, edge: str) -> int:
        """-1 if occurrence A lies left of B looking along the edge's direction."""
        (a, i), (b, j) = A, B
        da = 1 if self.arcs[a].steps[i][1] else -1
        db = 1 if self.arcs[b].steps[j][1] else -1
        wa, wb = self._walk(a, i, da), self._walk(b, j, db)
        for (sa, oa, la), (sb, ob, lb) in zip(wa, wb):
            w = self.slot_switch[sa]
            if oa == STAR and ob == STAR:
                return -1 if self.src_index[la] < self.src_index[lb] else 1
            if oa != ob:
                p = self.pos[w]
                n = len(p)
                ka = (p[sa] - p[oa]) % n
                kb = (p[sa] - p[ob]) % n
                return -1 if ka < kb else 1
        raise AssertionError("strands never part")

    # check --------------------------------------------------------------

    def violations(self) -> list[AbsorptionViolation]:
        t = self.t
        on_edge: dict = {}
        for a, arc in enumerate(self.arcs):
            for i, st in enumerate(arc.steps):
                on_edge.setdefault(st[0], []).append((a, i))
        order = {}
        for e, occ in on_edge.items():
            order[e] = sorted(occ, key=cmp_to_key(lambda A, B, e=e: self.compare(A, B, e)))
        out = []
        for w in t.switches:
            seq = []
            legs = []
            for slot in t.ccw_slots(w):
                occ = order.get(slot[0], [])
                if slot[1] == 0:
                    occ = list(reversed(occ))
                for a, i in occ:
                    st = self.arcs[a].steps[i]
                    n = len(self.arcs[a].steps)
                    if _arrive(st) == slot:
                        if i + 1 < n:
                            seq.append(("pass", a, i))
                        else:
                            seq.append(("star",))
                            legs.append(self.arcs[a].stop_end)
                    else:
                        if i > 0:
                            seq.append(("pass", a, i - 1))
                        else:
                            seq.append(("star",))
                            legs.append(self.arcs[a].start_end)
            bad = _crossing(seq)
            if bad is not None:
                x, y = bad
                kind = "absorbed" if ("star",) in (x, y) else "crossing"
                out.append(AbsorptionViolation(w, kind, f"{self._name(x)} meets {self._name(y)}"))
            idx = [self.src_index[leg] for leg in legs]
            descents = sum(1 for k in range(len(idx)) if idx[k] > idx[(k + 1) % len(idx)])
            if len(idx) > 1 and descents != 1:
                out.append(AbsorptionViolation(w, "orientation",
                                               f"star of {self.source.get(w)} has its legs out of order"))
        return out

    def _name(self, block) -> str:
        if block[0] == "star":
            return "the star"
        _, a, i = block
        return f"image of {self.arcs[a].label} (step {i + 1})"


def _crossing(seq):
    last = {}
    for k, b in enumerate(seq):
        last[b] = k
    stack = []
    opened = set()
    for k, b in enumerate(seq):
        if stack and stack[-1] == b:
            if last[b] == k:
                stack.pop()
                opened.discard(b)
            continue
        if b in opened:
            return stack[-1], b
        if last[b] != k:
            stack.append(b)
            opened.add(b)
    return None


def planarity_violations(f: TrainTrackMap, edges=None) -> list[AbsorptionViolation]:
    """Obstructions to realising f's words by an embedding; empty when realisable.
    ``edges`` restricts the check to the images of some real edges."""
    return _Planarity(f, edges).violations()


def strand_order(f: TrainTrackMap, edge: str) -> list[tuple[str, int]]:
    """Strands over a real edge, left to right along its direction, as
    (source label, step index)."""
    p = _Planarity(f)
    occ = [(a, i) for a, arc in enumerate(p.arcs) for i, st in enumerate(arc.steps) if st[0] == edge]
    occ.sort(key=cmp_to_key(lambda A, B: p.compare(A, B, edge)))
    return [(p.arcs[a].label, i) for a, i in occ]
