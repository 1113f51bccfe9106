"""Random relabeling of track text: new edge and polygon names, rotated
corner numbering, shuffled declaration order."""

from __future__ import annotations

import random
import re

from tracksplit.tracks import TrainTrack, parse_track, serialize_track


def relabel_text(text: str, rng: random.Random) -> str:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    polys, edges = {}, []
    for ln in lines:
        tok = ln.split()
        if tok[0] == "loop":
            polys[tok[1]] = 1
        elif tok[0] == "polygon":
            polys[tok[1]] = int(re.search(r"cusps=(\d+)", ln).group(1))
        elif tok[0] == "edge":
            edges.append(tok[1])
    names = rng.sample([f"P{i}" for i in range(100)], len(polys))
    pmap = dict(zip(polys, names))
    shift = {p: rng.randrange(k) for p, k in polys.items()}
    enames = rng.sample([f"x{i}" for i in range(100)], len(edges))
    emap = dict(zip(edges, enames))

    def switch(s: str) -> str:
        p, i = s.rsplit(".", 1)
        k = polys[p]
        return f"{pmap[p]}.{(int(i) - 1 + shift[p]) % k + 1}"

    head, body, tail = [], [], []
    for ln in lines:
        tok = ln.split()
        if tok[0] in ("loop", "polygon"):
            body.append(" ".join([tok[0], pmap[tok[1]]] + tok[2:]))
        elif tok[0] == "edge":
            body.append(f"edge {emap[tok[1]]} {switch(tok[2])} {switch(tok[3])}")
        elif tok[0] == "order":
            tail.append(" ".join(["order", switch(tok[1])] + [emap[e] for e in tok[2:]]))
        elif tok[0] == "track":
            head.append(ln)
        elif tok[0] == "surface":
            head.append(ln)
        else:
            tail.append(ln)
    polys_lines = [b for b in body if not b.startswith("edge")]
    edge_lines = [b for b in body if b.startswith("edge")]
    rng.shuffle(polys_lines)
    rng.shuffle(edge_lines)
    rng.shuffle(tail)
    return "\n".join(head + polys_lines + edge_lines + tail) + "\n"


def relabel(track: TrainTrack, seed: int) -> TrainTrack:
    return parse_track(relabel_text(serialize_track(track), random.Random(seed)))
