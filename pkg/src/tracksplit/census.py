"""The beta_n family on the Peacock and a bounded, pruned enumeration of
decorated Peacock maps.

Words are decorated: ``x+`` runs along x to its loop, around it turning
left and back; ``x-`` turns right; ``x0`` stops at the loop.  Word length
counts traversals of real edges, so ``x+`` and ``x-`` count 2 and ``x0``
counts 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cover import fixed_point_test
from .maps import (MapError, TrainPath, TrainTrackMap, infer_turn, matrix, parse_decorated, spectral,
                   to_decorated, toward_loop, transition_matrix, validate_map)
from .strands import AbsorptionViolation, planarity_violations
from .tracks import TrainTrack, builtin_track

ORDER = ("o", "g", "p", "b", "r")
ROTATION = {"T.1": "T.3", "T.2": "T.1", "T.3": "T.2"}
# orientation-reversing symmetry of the Peacock: fixes r and the corner T.2
REFLECT_EDGES = {"o": "b", "b": "o", "g": "p", "p": "g", "r": "r"}
REFLECT_CORNERS = {"T.1": "T.3", "T.3": "T.1", "T.2": "T.2"}
MAX_LEN_GUARD = 12
_DECO = {"plus": "+", "minus": "-", "terminal": "0"}
_FLIP = {"+": "-", "-": "+", "0": "0"}


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class DecoratedMap:
    map: TrainTrackMap
    words: tuple  # per edge in ORDER: tuple of tokens like 'r-', 'o0'

    @property
    def df(self) -> dict:
        """First decorated letter of each image, grouped by trigon corner."""
        t = self.map.track
        out: dict = {}
        for e, w in zip(ORDER, self.words):
            out.setdefault(_corner_of(t, e), {})[e] = w[0]
        return out

    def word(self, e: str) -> str:
        return " ".join(self.words[ORDER.index(e)])

    def key(self) -> tuple:
        return (tuple(sorted(self.map.vertex_map.items())), self.words)

    def __str__(self) -> str:
        return "; ".join(f"{e} -> {self.word(e)}" for e in ORDER)


def _corner_of(track: TrainTrack, e: str) -> str:
    edge = track.edge_by_id[e]
    return edge.head if track.is_loop_switch(edge.tail) else edge.tail


def expanded_length(word: Sequence[str]) -> int:
    return sum(1 if tok.endswith("0") else 2 for tok in word)


def decorated_map(words: dict, vertex_map: dict | None = None, name: str = "f",
                  track: TrainTrack | None = None) -> DecoratedMap:
    """Build a decorated Peacock map from words {edge: 'r- o0'} and the trigon
    rotation; loop switches follow the terminal letters."""
    t = track or builtin_track("peacock")
    rot = dict(ROTATION if vertex_map is None else vertex_map)
    toks = {e: tuple(words[e].split()) if isinstance(words[e], str) else tuple(words[e]) for e in ORDER}
    images = {}
    vmap = dict(rot)
    for e in ORDER:
        x = toward_loop(t, e)
        p = parse_decorated(t, toks[e])
        images[e] = p if x[1] else p.reversed()
        loop = t.edge_by_id[e].head if x[1] else t.edge_by_id[e].tail
        last = toks[e][-1][:-1]
        le = t.edge_by_id[last]
        vmap[loop] = le.head if t.is_loop_switch(le.head) else le.tail
    f = TrainTrackMap(name, t, vmap, images, "decorated", "peacock")
    return DecoratedMap(f, tuple(toks[e] for e in ORDER))


def from_map(f: TrainTrackMap) -> DecoratedMap:
    t = f.track
    words = []
    for e in ORDER:
        dec = to_decorated(t, f.image(*toward_loop(t, e)))
        if dec is None:
            raise CensusError(f"image of {e} is not a decorated word")
        words.append(tuple(d.edge + _DECO[d.decoration] for d in dec))
    return DecoratedMap(f, tuple(words))


# -- the beta_n family ------------------------------------------------------


def beta_words(n: int) -> dict:
    if n < 0:
        raise CensusError("n must be non-negative")
    if n % 2 == 0:
        wp = ["r-", "o-"] * (n // 2 + 1) + ["r0"]
        wb = ["r-", "o-"] * (n // 2) + ["r-", "o0"]
    else:
        wp = ["r-", "o-"] * ((n + 1) // 2) + ["r-", "o0"]
        wb = ["r-", "o-"] * ((n + 1) // 2) + ["r0"]
    return {"o": "p0", "g": "b0", "r": "g0", "p": " ".join(wp), "b": " ".join(wb)}


def beta_matrix(n: int):
    return matrix([[0, 0, n + 2, n + 1, 0], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0], [0, 1, 0, 0, 0],
                   [0, 0, n + 3, n + 2, 0]], ORDER)


def beta_family(n: int) -> tuple[DecoratedMap, object]:
    """f_n and its closed-form transition matrix M_n in edge order o,g,p,b,r."""
    return decorated_map(beta_words(n), name=f"f{n}"), beta_matrix(n)


# -- checks -----------------------------------------------------------------


def absorption_check(f) -> list[AbsorptionViolation]:
    if isinstance(f, DecoratedMap):
        f = f.map
    return planarity_violations(f)


def avoids_own_edge(e: str, word: Sequence[str]) -> bool:
    return all(tok[:-1] != e for tok in word)


def reverse_inverse(d: DecoratedMap) -> DecoratedMap:
    """Conjugate by the reflection of the Peacock: swaps o,b and g,p, fixes r,
    and exchanges left and right turns."""
    words = {}
    for e in ORDER:
        w = d.words[ORDER.index(e)]
        words[REFLECT_EDGES[e]] = tuple(REFLECT_EDGES[tok[:-1]] + _FLIP[tok[-1]] for tok in w)
    rot = {REFLECT_CORNERS[v]: REFLECT_CORNERS[w] for v, w in d.map.vertex_map.items() if v in REFLECT_CORNERS}
    return decorated_map(words, rot, name=d.map.name + "'")


# -- enumeration ------------------------------------------------------------

FIRST_LETTER_RULES = {
    "p": {"r-"},
    "b": {"r-"},
    "r": {"g-", "g0"},
}


def _next_letters(track: TrainTrack, prev: str | None, corner: str) -> list[str]:
    if prev is None:
        return [e for e in ORDER if _corner_of(track, e) == corner]
    back = toward_loop(track, prev)
    back = (back[0], not back[1])
    out = []
    for e in ORDER:
        if infer_turn(track, back, toward_loop(track, e)) is not None and e != prev:
            out.append(e)
    return out


def candidate_words(track: TrainTrack, e: str, corner: str, max_len: int,
                    first: set | None = None) -> Iterator[tuple[str, ...]]:
    """Decorated words starting at ``corner`` with expanded length <= max_len,
    free of letters on e itself."""

    def rec(prefix, prev, budget):
        for x in _next_letters(track, prev, corner if prev is None else None):
            if x == e:
                continue
            for d in "+-0":
                tok = x + d
                if not prefix and first is not None and tok not in first:
                    continue
                cost = 1 if d == "0" else 2
                if cost > budget:
                    continue
                if d == "0":
                    yield prefix + (tok,)
                else:
                    yield from rec(prefix + (tok,), x, budget - cost)

    yield from rec((), None, max_len)


@dataclass
class SearchStats:
    nodes: int = 0
    planarity_pruned: int = 0
    terminal_pruned: int = 0
    pf_rejected: int = 0
    trace_rejected: int = 0
    leaves: int = 0
    first_letters: dict = field(default_factory=dict)


def enumerate_candidates(max_len: int, mode: str = "lemma-replay", axioms: dict | None = None,
                         stats: SearchStats | None = None) -> list[DecoratedMap]:
    """Decorated Peacock maps with f(T.1)=T.3 whose words have expanded
    length <= max_len and which pass: train-path validity, no letter of a in
    f(a), a bijection on loops, planarity of the image, a Perron-Frobenius
    matrix and lifted traces zero.  In lemma-replay mode the first letters of
    f(p), f(b), f(r) are restricted to FIRST_LETTER_RULES (or ``axioms``)."""
    if max_len > MAX_LEN_GUARD:
        raise CensusError(f"max_len above {MAX_LEN_GUARD}")
    if mode not in ("lemma-replay", "full"):
        raise CensusError(f"unknown mode {mode!r}")
    if axioms is None:
        axioms = FIRST_LETTER_RULES if mode == "lemma-replay" else {}
    st = stats if stats is not None else SearchStats()
    t = builtin_track("peacock")
    order = ("o", "g", "r", "p", "b")
    options = {}
    for e in order:
        corner = ROTATION[_corner_of(t, e)]
        options[e] = list(candidate_words(t, e, corner, max_len, axioms.get(e)))
    paths = {e: {w: parse_decorated(t, w) for w in options[e]} for e in order}
    base_vmap = dict(ROTATION)
    loop_of = {e: (t.edge_by_id[e].head if toward_loop(t, e)[1] else t.edge_by_id[e].tail) for e in ORDER}
    out = []

    def images_for(assign):
        imgs = {}
        for e, w in assign.items():
            p = paths[e][w]
            imgs[e] = p if toward_loop(t, e)[1] else p.reversed()
        return imgs

    def planar(assign) -> bool:
        vmap = dict(base_vmap)
        for x, wx in assign.items():
            vmap[loop_of[x]] = loop_of[wx[-1][:-1]]
        f = TrainTrackMap("partial", t, vmap, images_for(assign), "plain")
        return not planarity_violations(f, edges=list(assign))

    pair_ok: dict = {}

    def pairs_planar(e, w, assign) -> bool:
        # necessary condition, cached: every pair of assigned words is planar
        for x, wx in assign.items():
            if x == e:
                continue
            key = (x, wx, e, w)
            ok = pair_ok.get(key)
            if ok is None:
                ok = pair_ok[key] = planar({x: wx, e: w})
            if not ok:
                return False
        return True

    options = {e: [w for w in options[e] if planar({e: w})] for e in order}

    def rec(k, assign, terminals):
        st.nodes += 1
        if k == len(order):
            st.leaves += 1
            d = decorated_map({e: assign[e] for e in ORDER}, name="f")
            M = transition_matrix(d.map)
            if not spectral(M).pf:
                st.pf_rejected += 1
                return
            if fixed_point_test(d.map).verdict != "TraceZero":
                st.trace_rejected += 1
                return
            if validate_map(d.map).valid:
                out.append(d)
            return
        e = order[k]
        for w in options[e]:
            term = w[-1][:-1]
            if term in terminals:
                st.terminal_pruned += 1
                continue
            assign[e] = w
            if not pairs_planar(e, w, assign) or (len(assign) > 2 and not planar(assign)):
                st.planarity_pruned += 1
            else:
                rec(k + 1, assign, terminals | {term})
            del assign[e]

    rec(0, {}, frozenset())
    for d in out:
        for e in ORDER:
            st.first_letters.setdefault(e, set()).add(d.words[ORDER.index(e)][0])
    return sorted(out, key=lambda d: (max(expanded_length(w) for w in d.words), d.words))


def first_letter_census(edge: str, max_len: int, stats: SearchStats | None = None) -> set[str]:
    """First letters of f(edge) over survivors when the axiom on ``edge`` is
    dropped and the others are kept."""
    axioms = {e: v for e, v in FIRST_LETTER_RULES.items() if e != edge}
    found = enumerate_candidates(max_len, "lemma-replay", axioms, stats)
    return {d.words[ORDER.index(edge)][0] for d in found}
