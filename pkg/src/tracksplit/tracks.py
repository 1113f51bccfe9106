"""Standardly embedded train tracks on the punctured disk.

A track is stored combinatorially: infinitesimal polygons (loops are the
one-cornered ones), real edges between corner switches, and at every switch
the clockwise cyclic order of its edge-ends.  Corner ``P.i`` of a k-gon is
followed counterclockwise by ``P.(i+1)``; the side from ``P.i`` to ``P.(i+1)``
is the infinitesimal edge ``P:i``.  Facing the real edges at a switch, they
read left to right l(v) ... r(v); behind them sit i_l (the side towards the
next corner counterclockwise) and i_r.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

End = tuple  # (edge id, 0 for tail / 1 for head)
IL, IR = "%l", "%r"

_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


class TrackError(ValueError):
    """Malformed track text or an operation on an invalid track."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = f"line {line}" + (f", column {col}" if col else "") + ": " if line else ""
        super().__init__(loc + message)
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Polygon:
    id: str
    cusps: int
    punctured: bool
    is_loop: bool = False

    @property
    def corners(self) -> tuple[str, ...]:
        return tuple(f"{self.id}.{i}" for i in range(1, self.cusps + 1))


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class Region:
    id: str
    kind: str  # loop, polygon or exterior
    cusps: int
    punctured: bool


@dataclass(frozen=True)
class Stratum:
    boundary: tuple[int, ...]
    punctures: tuple[int, ...]
    interior: tuple[int, ...]

    @staticmethod
    def _fmt(values: tuple[int, ...]) -> str:
        if not values:
            return "∅"
        counts = Counter(values)
        return ",".join(f"{k}^{c}" if c > 1 else str(k) for k, c in sorted(counts.items(), key=lambda kv: -kv[0]))

    def __str__(self) -> str:
        return f"({self._fmt(self.boundary)};{self._fmt(self.punctures)};{self._fmt(self.interior)})"

    def index_sum(self) -> int:
        """Sum of (k-2) over interior prongs plus puncture and boundary prongs."""
        return sum(k - 2 for k in self.interior) + sum(self.punctures) + sum(self.boundary)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "valid" if self.valid else "\n".join(self.violations)


@dataclass(frozen=True)
class TrainTrack:
    name: str
    punctures: int
    polygons: tuple[Polygon, ...]
    edges: tuple[Edge, ...]
    # switch -> clockwise cyclic list of tokens, each an End or IL / IR
    rotations: tuple[tuple[str, tuple], ...] = ()
    exterior_cusps: int = 0
    exterior_punctured: bool = True

    # -- lookups -------------------------------------------------------------

    @cached_property
    def switches(self) -> tuple[str, ...]:
        return tuple(c for p in self.polygons for c in p.corners)

    @cached_property
    def _corner(self) -> dict:
        return {c: (p, i + 1) for p in self.polygons for i, c in enumerate(p.corners)}

    @cached_property
    def edge_by_id(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    @cached_property
    def sides(self) -> tuple[Edge, ...]:
        out = []
        for p in self.polygons:
            for i in range(1, p.cusps + 1):
                out.append(Edge(f"{p.id}:{i}", f"{p.id}.{i}", f"{p.id}.{i % p.cusps + 1}"))
        return tuple(out)

    @cached_property
    def side_by_id(self) -> dict:
        return {s.id: s for s in self.sides}

    @cached_property
    def _rot(self) -> dict:
        rot = dict(self.rotations)
        out = {}
        for v in self.switches:
            if v in rot:
                out[v] = tuple(rot[v])
            else:
                ends = tuple(end for end in self._incident_real_ends.get(v, ()))
                out[v] = ends + (IR, IL)
        return out

    @cached_property
    def _incident_real_ends(self) -> dict:
        out: dict = {}
        for e in self.edges:
            out.setdefault(e.tail, []).append((e.id, 0))
            out.setdefault(e.head, []).append((e.id, 1))
        return out

    def polygon_of(self, v: str) -> Polygon:
        return self._corner[v][0]

    def corner_index(self, v: str) -> int:
        return self._corner[v][1]

    def is_switch(self, v: str) -> bool:
        return v in self._corner

    def is_loop_switch(self, v: str) -> bool:
        return self.polygon_of(v).cusps == 1

    def is_side(self, edge_id: str) -> bool:
        return ":" in edge_id

    def end_switch(self, end: End) -> str:
        eid, k = end
        e = self.side_by_id[eid] if ":" in eid else self.edge_by_id[eid]
        return e.head if k else e.tail

    def real_ends(self, v: str) -> tuple[End, ...]:
        """R(v) from left to right."""
        return tuple(t for t in self._rot[v] if t not in (IL, IR))

    def valence(self, v: str) -> int:
        return len(self.real_ends(v))

    def left(self, v: str) -> End:
        return self.real_ends(v)[0]

    def right(self, v: str) -> End:
        return self.real_ends(v)[-1]

    def v_left(self, v: str) -> str:
        p, i = self._corner[v]
        return f"{p.id}.{i % p.cusps + 1}"

    def v_right(self, v: str) -> str:
        p, i = self._corner[v]
        return f"{p.id}.{(i - 2) % p.cusps + 1}"

    def il_slot(self, v: str) -> End:
        p, i = self._corner[v]
        return (f"{p.id}:{i}", 0)

    def ir_slot(self, v: str) -> End:
        p, i = self._corner[v]
        return (f"{p.id}:{(i - 2) % p.cusps + 1}", 1)

    def cw_tokens(self, v: str) -> tuple:
        return self._rot[v]

    def ccw_slots(self, v: str) -> tuple[End, ...]:
        """All edge-ends at v counterclockwise: r(v) ... l(v), i_l, i_r for a valid switch."""
        toks = self._rot[v]
        conv = {IL: self.il_slot(v), IR: self.ir_slot(v)}
        if toks[-2:] == (IR, IL):
            return tuple(reversed(toks[:-2])) + (conv[IL], conv[IR])
        return tuple(conv.get(t, t) for t in reversed(toks))

    def edge_index(self, eid: str) -> int:
        return self.edge_ids.index(eid)

    def far_end(self, end: End) -> End:
        return (end[0], 1 - end[1])


# -- parsing ----------------------------------------------------------------


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = []
        for m in re.finditer(r"\S+", line):
            toks.append((m.group(0), m.start() + 1))
        if toks:
            yield lineno, toks


def _kv(tok: str, key: str, lineno: int, col: int) -> int:
    m = re.fullmatch(rf"{key}=(\d+)", tok)
    if not m:
        raise TrackError(f"expected {key}=<int>, got {tok!r}", lineno, col)
    return int(m.group(1))


def parse_track(text: str) -> TrainTrack:
    name = None
    punctures = None
    polygons: list[Polygon] = []
    edges: list[Edge] = []
    orders: list = []
    exterior = None
    ids: set = set()
    for lineno, toks in _tokens(text):
        kw, col = toks[0]
        args = [t for t, _ in toks[1:]]
        if kw == "track":
            if len(args) != 1:
                raise TrackError("usage: track NAME", lineno, col)
            name = args[0]
        elif kw == "surface":
            if len(args) != 2 or args[0] != "disk":
                raise TrackError("usage: surface disk punctures=N", lineno, col)
            punctures = _kv(args[1], "punctures", lineno, toks[2][1])
        elif kw in ("loop", "polygon"):
            if not args or not _ID.match(args[0]):
                raise TrackError(f"bad {kw} id", lineno, col)
            pid = args[0]
            if pid in ids:
                raise TrackError(f"duplicate id {pid!r}", lineno, toks[1][1])
            ids.add(pid)
            rest = args[1:]
            if kw == "loop":
                k = 1
            else:
                if not rest:
                    raise TrackError("usage: polygon ID cusps=K [punctured]", lineno, col)
                k = _kv(rest[0], "cusps", lineno, toks[2][1])
                rest = rest[1:]
                if k < 1:
                    raise TrackError("a polygon needs at least one cusp", lineno, col)
            if rest not in ([], ["punctured"]):
                raise TrackError(f"unexpected tokens {' '.join(rest)!r}", lineno, col)
            polygons.append(Polygon(pid, k, bool(rest), kw == "loop"))
        elif kw == "edge":
            if len(args) != 3:
                raise TrackError("usage: edge ID SWITCH SWITCH", lineno, col)
            eid = args[0]
            if not _ID.match(eid):
                raise TrackError(f"bad edge id {eid!r}", lineno, toks[1][1])
            if eid in ids:
                raise TrackError(f"duplicate id {eid!r}", lineno, toks[1][1])
            ids.add(eid)
            edges.append(Edge(eid, args[1], args[2]))
        elif kw == "order":
            if len(args) < 1:
                raise TrackError("usage: order SWITCH END ...", lineno, col)
            orders.append((lineno, args[0], args[1:]))
        elif kw == "exterior":
            if not args:
                raise TrackError("usage: exterior cusps=B [punctured]", lineno, col)
            b = _kv(args[0], "cusps", lineno, toks[1][1])
            if args[1:] not in ([], ["punctured"]):
                raise TrackError("unexpected tokens after exterior cusps", lineno, col)
            exterior = (b, len(args) > 1)
        else:
            raise TrackError(f"unknown keyword {kw!r}", lineno, col)
    if name is None:
        raise TrackError("missing 'track NAME' line")
    if not polygons:
        raise TrackError("no polygons")
    corners = {c for p in polygons for c in p.corners}
    for e in edges:
        for s in (e.tail, e.head):
            if s not in corners:
                raise TrackError(f"dangling edge end: edge {e.id} references undeclared switch {s}")
    if punctures is None:
        punctures = sum(p.punctured for p in polygons)
    if exterior is None:
        raise TrackError("missing 'exterior' line")
    incident: dict = {}
    for e in edges:
        incident.setdefault(e.tail, []).append((e.id, 0))
        incident.setdefault(e.head, []).append((e.id, 1))
    rotations = {}
    for lineno, v, toks in orders:
        if v not in corners:
            raise TrackError(f"order for undeclared switch {v}", lineno)
        if v in rotations:
            raise TrackError(f"duplicate order for switch {v}", lineno)
        here = incident.get(v, [])
        seq = []
        for t in toks:
            if t in (IL, IR):
                seq.append(t)
                continue
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_']*)(?:@(tail|head))?", t)
            if not m:
                raise TrackError(f"bad order token {t!r}", lineno)
            eid, which = m.group(1), m.group(2)
            cands = [end for end in here if end[0] == eid and (which is None or end[1] == (which == "head"))]
            if len(cands) != 1:
                raise TrackError(f"switch-order mismatch at {v}: token {t!r} does not name one edge-end there", lineno)
            seq.append(cands[0])
        real = [t for t in seq if t not in (IL, IR)]
        if sorted(real) != sorted(here) or len(set(real)) != len(real):
            raise TrackError(f"switch-order mismatch at {v}: order must list each incident edge-end once", lineno)
        if IL not in seq and IR not in seq:
            seq = seq + [IR, IL]
        elif seq.count(IL) != 1 or seq.count(IR) != 1:
            raise TrackError(f"switch-order mismatch at {v}: %l and %r must both appear once", lineno)
        rotations[v] = _normalize_rotation(tuple(seq))
    for v in corners:
        if v not in rotations and len(incident.get(v, [])) > 1:
            raise TrackError(f"switch-order mismatch at {v}: {len(incident[v])} edge-ends need an order line")
    order_list = tuple((v, rotations[v]) for p in polygons for v in p.corners if v in rotations)
    return TrainTrack(name, punctures, tuple(polygons), tuple(edges), order_list, exterior[0], exterior[1])


def _normalize_rotation(seq: tuple) -> tuple:
    """Rotate a cyclic token list so a well-formed one reads R..., %r, %l."""
    n = len(seq)
    i = seq.index(IR)
    if seq[(i + 1) % n] == IL:
        start = (i + 2) % n
        return tuple(seq[(start + j) % n] for j in range(n))
    return seq[i:] + seq[:i]


def _end_token(track: TrainTrack, v: str, end: End) -> str:
    e = track.edge_by_id[end[0]]
    if e.tail == e.head == v:
        return f"{end[0]}@{'head' if end[1] else 'tail'}"
    return end[0]


def serialize_track(track: TrainTrack) -> str:
    lines = [f"track {track.name}", f"surface disk punctures={track.punctures}"]
    for p in track.polygons:
        flag = " punctured" if p.punctured else ""
        if p.is_loop and p.cusps == 1:
            lines.append(f"loop {p.id}{flag}")
        else:
            lines.append(f"polygon {p.id} cusps={p.cusps}{flag}")
    for e in track.edges:
        lines.append(f"edge {e.id} {e.tail} {e.head}")
    for v in track.switches:
        toks = track.cw_tokens(v)
        real = [t for t in toks if t not in (IL, IR)]
        standard = toks[-2:] == (IR, IL)
        if standard and len(real) < 2:
            continue
        body = [_end_token(track, v, t) for t in real] if standard else [
            t if t in (IL, IR) else _end_token(track, v, t) for t in toks]
        lines.append(f"order {v} " + " ".join(body))
    lines.append(f"exterior cusps={track.exterior_cusps}" + (" punctured" if track.exterior_punctured else ""))
    return "\n".join(lines) + "\n"


def with_orders(track: TrainTrack, orders: dict, edges: Iterable[Edge] | None = None, name: str | None = None) -> TrainTrack:
    """Copy of ``track`` with new edges and left-to-right R(v) orders."""
    edges = tuple(track.edges if edges is None else edges)
    rot = []
    for v in track.switches:
        ends = tuple(orders.get(v, ()))
        if len(ends) >= 2:
            rot.append((v, ends + (IR, IL)))
    cusps = sum(max(len(o) - 1, 0) for o in orders.values())
    return TrainTrack(name or track.name, track.punctures, track.polygons, edges, tuple(rot), cusps,
                      track.exterior_punctured)


def current_orders(track: TrainTrack) -> dict:
    return {v: list(track.real_ends(v)) for v in track.switches}


# -- validation and census --------------------------------------------------


def _faces(track: TrainTrack) -> list[list[End]]:
    """Boundary walks of complementary regions, each region on the left."""
    ccw = {v: track.ccw_slots(v) for v in track.switches}
    pos = {}
    for v, slots in ccw.items():
        for i, s in enumerate(slots):
            pos[s] = (v, i)
    seen = set()
    faces = []
    for start in pos:
        if start in seen:
            continue
        face = []
        s = start
        while s not in seen:
            seen.add(s)
            face.append(s)
            arrive = (s[0], 1 - s[1])
            if arrive not in pos:
                break
            w, i = pos[arrive]
            s = ccw[w][(i - 1) % len(ccw[w])]
        faces.append(face)
    return faces


def _real(end) -> bool:
    return ":" not in end[0]


def validate_track(track: TrainTrack) -> ValidationReport:
    out: list[str] = []
    counted = sum(p.punctured for p in track.polygons)
    if counted != track.punctures:
        out.append(f"puncture count {counted} differs from declared {track.punctures}")
    for p in track.polygons:
        if not p.punctured and p.cusps <= 2:
            out.append(f"region with {p.cusps} cusp{'s' if p.cusps != 1 else ''}, no puncture ({p.id})")
    if not track.exterior_punctured:
        out.append("exterior region must contain the boundary (declare it punctured)")
    for v in track.switches:
        toks = track.cw_tokens(v)
        n = len(toks)
        real_idx = [i for i, t in enumerate(toks) if t not in (IL, IR)]
        if not real_idx:
            out.append(f"switch {v} has no real edges")
            continue
        i_r, i_l = toks.index(IR), toks.index(IL)
        if (i_r + 1) % n != i_l:
            if (i_l + 1) % n == i_r:
                out.append(f"infinitesimal ends reversed at {v}")
            else:
                out.append(f"R(v) not connected at {v}")
    # connectivity over real and infinitesimal edges
    adj: dict = {v: set() for v in track.switches}
    for e in track.edges + track.sides:
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)
    if track.switches:
        seen = {track.switches[0]}
        dq = deque(seen)
        while dq:
            for w in adj[dq.popleft()]:
                if w not in seen:
                    seen.add(w)
                    dq.append(w)
        if len(seen) != len(track.switches):
            out.append("track is not connected")
    st = _stratum(track)
    if st.index_sum() != 2 * track.punctures - 2:
        out.append(f"Euler characteristic check failed: index sum {st.index_sum()} != {2 * track.punctures - 2}")
    if out:
        return ValidationReport(tuple(out))
    faces = _faces(track)
    V = len(track.switches)
    E = len(track.edges) + len(track.sides)
    if V - E + len(faces) != 2:
        out.append("rotation system is not planar")
    others = [f for f in faces if not all(not _real(s) and s[1] == 0 for s in f)]
    poly_faces = [f for f in faces if all(not _real(s) and s[1] == 0 for s in f)]
    if len(poly_faces) != len(track.polygons):
        out.append("infinitesimal polygons are not complementary regions")
    if len(others) != 1:
        out.append(f"expected one exterior region, found {len(others)}")
    else:
        cusps = _face_cusps(track, others[0])
        if cusps != track.exterior_cusps:
            out.append(f"exterior declared with {track.exterior_cusps} cusps but has {cusps}")
    return ValidationReport(tuple(out))


def _face_cusps(track: TrainTrack, face: list[End]) -> int:
    """Corners of a boundary walk where it turns between two real edge-ends."""
    ccw = {v: track.ccw_slots(v) for v in track.switches}
    n = 0
    for s in face:
        arrive = (s[0], 1 - s[1])
        w = track.end_switch(arrive)
        slots = ccw[w]
        nxt = slots[(slots.index(arrive) - 1) % len(slots)]
        if _real(arrive) and _real(nxt):
            n += 1
    return n


def _stratum(track: TrainTrack) -> Stratum:
    punct = tuple(sorted((p.cusps for p in track.polygons if p.punctured), reverse=True))
    inter = tuple(sorted((p.cusps for p in track.polygons if not p.punctured), reverse=True))
    return Stratum((track.exterior_cusps,), punct, inter)


def complement_census(track: TrainTrack) -> tuple[list[Region], Stratum]:
    rep = validate_track(track)
    if not rep.valid:
        raise TrackError("invalid track: " + "; ".join(rep.violations))
    regions = [Region(p.id, "loop" if p.cusps == 1 else "polygon", p.cusps, p.punctured) for p in track.polygons]
    regions.append(Region("exterior", "exterior", track.exterior_cusps, True))
    return regions, _stratum(track)


@dataclass(frozen=True)
class SwitchInfo:
    left: End
    right: End
    v_left: str
    v_right: str
    valence: int


@dataclass(frozen=True)
class StructureReport:
    loop_switches: tuple[str, ...]
    joints: tuple[str, ...]
    stems: tuple[str, ...]
    J: int
    switches: dict = field(default_factory=dict)


def structure_query(track: TrainTrack) -> StructureReport:
    loops = tuple(v for v in track.switches if track.is_loop_switch(v))
    joints = tuple(v for v in loops if track.valence(v) >= 2)
    stems = tuple(e.id for e in track.edges
                  if not track.is_loop_switch(e.tail) or not track.is_loop_switch(e.head))
    J = sum(track.valence(v) - 1 for v in loops)
    info = {v: SwitchInfo(track.left(v), track.right(v), track.v_left(v), track.v_right(v), track.valence(v))
            for v in track.switches if track.valence(v) > 0}
    return StructureReport(loops, joints, stems, J, info)


# -- canonical form ---------------------------------------------------------


def _traverse(track: TrainTrack, root: str, root_slot: End, mirror: bool):
    rot = {}
    for v in track.switches:
        s = track.ccw_slots(v)
        rot[v] = tuple(reversed(s)) if mirror else s
    label = {root: 0}
    start = {root: rot[root].index(root_slot)}
    order = [root]
    code = []
    slot_pos = {}
    i = 0
    while i < len(order):
        v = order[i]
        slots = rot[v]
        k = len(slots)
        p = track.polygon_of(v)
        code.append((-1, k, p.cusps, int(p.punctured)))
        for off in range(k):
            slot = slots[(start[v] + off) % k]
            slot_pos[(i, off)] = slot
            other = (slot[0], 1 - slot[1])
            w = track.end_switch(other)
            if w not in label:
                label[w] = len(order)
                order.append(w)
                start[w] = rot[w].index(other)
            woff = (rot[w].index(other) - start[w]) % len(rot[w])
            code.append((int(not _real(slot)), label[w], woff))
        i += 1
    return tuple(code), order, slot_pos


def _roots(track: TrainTrack):
    for v in track.switches:
        for s in track.ccw_slots(v):
            yield v, s


def canonical_form(track: TrainTrack, reflect: bool = False) -> tuple:
    """Minimal traversal code over all roots (and mirror images if ``reflect``)."""
    best = None
    for mirror in ((False, True) if reflect else (False,)):
        for v, s in _roots(track):
            code = _traverse(track, v, s, mirror)[0]
            if best is None or code < best:
                best = code
    return best


def is_isomorphic(a: TrainTrack, b: TrainTrack, reflect: bool = False) -> bool:
    return canonical_form(a, reflect) == canonical_form(b, reflect)


@dataclass(frozen=True)
class TrackIsomorphism:
    switch_map: dict
    edge_map: dict  # real edge of source -> (edge of target, reversed)
    mirrored: bool


def isomorphisms(a: TrainTrack, b: TrainTrack, reflect: bool = False) -> list[TrackIsomorphism]:
    """All isomorphisms a -> b (orientation preserving unless ``reflect``)."""
    if not a.switches:
        return []
    v0 = a.switches[0]
    s0 = a.ccw_slots(v0)[0]
    code_a, order_a, pos_a = _traverse(a, v0, s0, False)
    out = []
    for mirror in ((False, True) if reflect else (False,)):
        for v, s in _roots(b):
            code_b, order_b, pos_b = _traverse(b, v, s, mirror)
            if code_b != code_a:
                continue
            smap = dict(zip(order_a, order_b))
            emap = {}
            for key, slot in pos_a.items():
                if _real(slot) and slot[1] == 0:
                    target = pos_b[key]
                    emap[slot[0]] = (target[0], target[1] != 0)
            out.append(TrackIsomorphism(smap, emap, mirror))
    return out


def canonical_switch_order(track: TrainTrack) -> tuple[str, ...]:
    """Switches in the discovery order of the minimal traversal."""
    best = None
    for v, s in _roots(track):
        code, order, _ = _traverse(track, v, s, False)
        if best is None or code < best[0]:
            best = (code, order)
    return tuple(best[1])


def mirror_track(track: TrainTrack, name: str | None = None) -> TrainTrack:
    """Reflect the disk: corners reverse their cyclic order, R(v) reverses."""

    def corner(v: str) -> str:
        p, i = track._corner[v]
        return f"{p.id}.{(1 - i) % p.cusps + 1}"

    edges = tuple(Edge(e.id, corner(e.tail), corner(e.head)) for e in track.edges)
    orders = {corner(v): list(reversed(track.real_ends(v))) for v in track.switches}
    return with_orders(track, orders, edges, name or track.name)


# -- builtin tracks ---------------------------------------------------------

_PEACOCK = """\
track peacock
surface disk punctures=5
loop L1 punctured
loop L2 punctured
loop L3 punctured
loop L4 punctured
loop L5 punctured
polygon T cusps=3
edge o T.1 L1.1
edge g T.1 L2.1
edge p T.3 L3.1
edge b T.3 L4.1
edge r T.2 L5.1
order T.1 o g
order T.3 p b
exterior cusps=2 punctured
"""

_SNAIL = """\
track snail
surface disk punctures=5
loop L1 punctured
loop L2 punctured
loop L3 punctured
loop L4 punctured
loop L5 punctured
polygon T cusps=3
edge a T.1 L1.1
edge c T.1 L2.1
edge d T.1 L3.1
edge e T.2 L4.1
edge f T.3 L5.1
order T.1 a c d
exterior cusps=2 punctured
"""

# Extra jointless tracks in other strata, used to widen the property tests.
_SYNTHETIC = {
    "tri4": """\
track tri4
surface disk punctures=4
loop A punctured
loop B punctured
loop C punctured
loop D punctured
polygon T cusps=3
edge a T.1 A.1
edge b T.1 B.1
edge c T.2 C.1
edge d T.3 D.1
order T.1 a b
exterior cusps=1 punctured
""",
    "quad6": """\
track quad6
surface disk punctures=6
loop A punctured
loop B punctured
loop C punctured
loop D punctured
loop E punctured
loop F punctured
polygon Q cusps=4
edge a Q.1 A.1
edge b Q.1 B.1
edge c Q.2 C.1
edge d Q.3 D.1
edge e Q.3 E.1
edge f Q.4 F.1
order Q.1 a b
order Q.3 d e
exterior cusps=2 punctured
""",
    "twotri5": """\
track twotri5
surface disk punctures=5
loop A punctured
loop B punctured
loop C punctured
loop D punctured
loop E punctured
polygon T cusps=3
polygon U cusps=3
edge a T.1 A.1
edge b T.1 B.1
edge c T.2 C.1
edge s T.3 U.1
edge d U.2 D.1
edge e U.3 E.1
order T.1 a b
exterior cusps=1 punctured
""",
}


def builtin_track(name: str) -> TrainTrack:
    if name == "peacock":
        return parse_track(_PEACOCK)
    if name == "snail":
        return parse_track(_SNAIL)
    raise TrackError(f"unknown builtin track {name!r}")


def synthetic_track(name: str) -> TrainTrack:
    if name not in _SYNTHETIC:
        raise TrackError(f"unknown synthetic track {name!r}")
    return parse_track(_SYNTHETIC[name])


SYNTHETIC_NAMES = tuple(_SYNTHETIC)
