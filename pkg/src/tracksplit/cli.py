"""Command-line entry point.

Exit codes: 0 success, 1 negative domain result, 2 usage error, 3 invalid
input.  ``--format records`` prints one JSON object per line.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, replace
from pathlib import Path

from . import __version__
from .arith import (BraidWord, FdtcInterval, alexander_candidates, braid_stats, dilatation, fdtc_filter,
                    lefschetz_trace, rykken_check, twisted)
from .census import (CensusError, SearchStats, absorption_check, beta_family, enumerate_candidates,
                     first_letter_census, reverse_inverse)
from .cover import LiftError, fixed_point_test, lift, lift_track_census
from .maps import (MapError, TrainTrackMap, link_map, matrix, parse_map, pf_census, serialize_map, spectral,
                   transition_matrix, validate_map)
from .splitting import SplitError, generate_map_by_folds, reduce_joints, rigid_cycle_check, splittability, tight_split
from .tracks import (SYNTHETIC_NAMES, TrackError, builtin_track, canonical_form, complement_census, is_isomorphic,
                     parse_track, serialize_track, structure_query, synthetic_track, validate_track)

# module operation -> the subcommand that exposes it
OP_REGISTRY = {
    "parse_track": "validate",
    "validate_track": "validate",
    "validate_map": "validate",
    "complement_census": "census",
    "structure_query": "census",
    "canonical_form": "census",
    "is_isomorphic": "census",
    "builtin_track": "census",
    "transition_matrix": "matrix",
    "spectral": "spectral",
    "pf_census": "spectral",
    "link_map": "split",
    "splittability": "split",
    "tight_split": "split",
    "rigid_cycle_check": "split",
    "reduce_joints": "reduce",
    "generate_map_by_folds": "family",
    "lift": "lift",
    "fixed_point_test": "fpf",
    "beta_family": "family",
    "reverse_inverse": "family",
    "absorption_check": "validate",
    "enumerate_candidates": "enumerate",
    "lefschetz_trace": "alexander",
    "alexander_candidates": "alexander",
    "rykken_check": "rykken",
    "fdtc_filter": "fdtc",
    "braid_stats": "braid",
}

SUBCOMMANDS = ("validate", "census", "matrix", "spectral", "split", "reduce", "lift", "fpf", "family",
               "enumerate", "alexander", "rykken", "fdtc", "braid")


class InputError(Exception):
    pass


class Output:
    """Collects plain lines and structured records for one command."""

    def __init__(self, fmt: str, digits: int):
        self.fmt = fmt
        self.digits = digits
        self.lines: list[str] = []

    def num(self, x: float) -> str:
        return f"{x:.{self.digits}g}"

    def emit(self, plain: str, **record) -> None:
        if self.fmt == "records":
            self.lines.append(json.dumps(record, sort_keys=True, default=str))
        else:
            self.lines.append(plain)

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


@dataclass
class RunManifest:
    command: str
    inputs: dict
    version: str
    wall_time: float
    result_digest: str


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


# -- input loading ----------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _first_keyword(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return ""


def load_track(arg: str):
    if arg in ("peacock", "snail"):
        return builtin_track(arg)
    if arg in SYNTHETIC_NAMES:
        return synthetic_track(arg)
    return parse_track(_read(arg))


def load_map(path: str) -> TrainTrackMap:
    return parse_map(_read(path), base_dir=os.path.dirname(os.path.abspath(path)))


def parse_matrix_text(text: str):
    """``matrix NAME [labels=a,b,...]`` followed by one row of integers per line."""
    labels = None
    rows = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "matrix":
            seen_header = True
            for t in toks[2:]:
                k, _, v = t.partition("=")
                if k != "labels":
                    raise InputError(f"line {lineno}: bad matrix option {t!r}")
                labels = v.split(",")
            continue
        try:
            rows.append([int(x) for x in toks])
        except ValueError:
            raise InputError(f"line {lineno}: matrix rows hold integers only") from None
    if not seen_header:
        raise InputError("missing 'matrix NAME' header")
    if labels is not None and len(labels) != len(rows):
        raise InputError("label count differs from matrix size")
    return matrix(rows, labels)


def load_matrix_or_map(path: str):
    text = _read(path)
    if _first_keyword(text) == "matrix":
        return parse_matrix_text(text), None
    f = parse_map(text, base_dir=os.path.dirname(os.path.abspath(path)))
    return transition_matrix(f), f


def _rows(M) -> list:
    return [list(r) for r in M.rows]


# -- commands ---------------------------------------------------------------


def cmd_validate(a, out: Output) -> int:
    text = _read(a.file)
    kind = _first_keyword(text)
    if kind == "track":
        rep = validate_track(parse_track(text))
    elif kind == "map":
        f = parse_map(text, base_dir=os.path.dirname(os.path.abspath(a.file)))
        rep = validate_map(f)
        if a.absorption and rep.valid:
            for v in absorption_check(f):
                out.emit(str(v), kind="absorption", switch=v.switch, violation=v.kind, detail=v.detail)
            if out.lines:
                return 1
    else:
        raise InputError(f"{a.file}: expected a track or map file")
    if rep.valid:
        out.emit("valid", valid=True)
        return 0
    for v in rep.violations:
        out.emit(v, valid=False, violation=v)
    return 1


def cmd_census(a, out: Output) -> int:
    t = load_track(a.track)
    if a.serialize:
        for line in serialize_track(t).splitlines():
            out.emit(line, kind="track", line=line)
        return 0
    regions, stratum = complement_census(t)
    for r in regions:
        flag = " punctured" if r.punctured else ""
        out.emit(f"region {r.id} {r.kind} cusps={r.cusps}{flag}", kind="region", id=r.id, region=r.kind,
                 cusps=r.cusps, punctured=r.punctured)
    out.emit(f"stratum {stratum}", kind="stratum", stratum=str(stratum))
    if a.lifted:
        s = lift_track_census(t)
        out.emit(f"lifted stratum {s}", kind="lifted", stratum=str(s))
    if a.structure:
        rep = structure_query(t)
        out.emit(f"J={rep.J} joints={','.join(rep.joints) or '-'} stems={','.join(rep.stems) or '-'}",
                 kind="structure", J=rep.J, joints=list(rep.joints), stems=list(rep.stems),
                 loop_switches=list(rep.loop_switches))
        for v, info in rep.switches.items():
            out.emit(f"switch {v} valence={info.valence} l={info.left[0]} r={info.right[0]} "
                     f"v_l={info.v_left} v_r={info.v_right}", kind="switch", switch=v, valence=info.valence,
                     left=info.left[0], right=info.right[0], v_left=info.v_left, v_right=info.v_right)
    if a.canonical:
        code = canonical_form(t, a.reflect)
        d = _digest(repr(code).encode())[:16]
        out.emit(f"canonical {d}", kind="canonical", digest=d)
    if a.compare:
        other = load_track(a.compare)
        iso = is_isomorphic(t, other, a.reflect)
        out.emit("isomorphic" if iso else "not isomorphic", kind="isomorphic", value=iso)
        return 0 if iso else 1
    return 0


def cmd_matrix(a, out: Output) -> int:
    f = load_map(a.map)
    order = a.order.split(",") if a.order else None
    M = transition_matrix(f, a.extended, order)
    out.emit("order " + ",".join(M.labels), kind="labels", labels=list(M.labels))
    for lab, r in zip(M.labels, M.rows):
        out.emit(" ".join(str(x) for x in r), kind="row", label=lab, row=list(r))
    return 0


def cmd_spectral(a, out: Output) -> int:
    if a.pf_census is not None:
        if a.bound is None:
            raise InputError("--pf-census needs --bound")
        found = pf_census(a.pf_census, a.bound)
        for M in found:
            out.emit(str(_rows(M)), kind="pf", rows=_rows(M), lam=out.num(spectral(M).lam))
        out.emit(f"count {len(found)}", kind="count", count=len(found))
        return 0
    if not a.file:
        raise InputError("spectral needs a map or matrix file, or --pf-census")
    M, _ = load_matrix_or_map(a.file)
    pin = None
    if a.pin:
        label, _, value = a.pin.partition("=")
        if label not in M.labels:
            raise InputError(f"unknown label {label!r} in --pin")
        pin = (label, float(value))
    sp = spectral(M, pin)
    out.emit(f"charpoly {sp.charpoly}", kind="charpoly", charpoly=str(sp.charpoly))
    out.emit(f"pf {'yes' if sp.pf else 'no'}" + (f" witness={sp.witness}" if sp.pf else ""),
             kind="pf", pf=sp.pf, witness=sp.witness)
    out.emit(f"lambda={out.num(sp.lam)}", kind="lambda", value=out.num(sp.lam),
             interval=[str(sp.lam_interval[0]), str(sp.lam_interval[1])])
    if sp.mu is not None:
        mu = [out.num(x) for x in sp.mu]
        out.emit("mu=(" + ",".join(mu) + ")", kind="mu", labels=list(M.labels), value=mu)
    return 0 if sp.pf else 1


def cmd_split(a, out: Output) -> int:
    f = load_map(a.map)
    if a.rigid_cycles:
        cyc = rigid_cycle_check(f)
        for c in cyc:
            out.emit("rigid cycle " + " ".join(c), kind="rigid_cycle", cycle=list(c))
        if not cyc:
            out.emit("no rigid cycles", kind="rigid_cycle", cycle=None)
        return 1 if cyc else 0
    if not a.switch:
        raise InputError("split needs --switch (or --rigid-cycles)")
    v = a.switch
    if not f.track.is_switch(v):
        raise InputError(f"unknown switch {v}")
    if a.link:
        lm = link_map(f, v)
        for (e, k), (e2, k2) in sorted(lm.df.items()):
            out.emit(f"Df({e}@{'tail' if k == 0 else 'head'}) = {e2}@{'tail' if k2 == 0 else 'head'}",
                     kind="df", edge=e, end=k, image=e2, image_end=k2)
        out.emit(f"gate depth {lm.gate_depth}", kind="gate", depth=lm.gate_depth)
    verdict = splittability(f, v)
    if not a.side:
        out.emit(f"{v}: {verdict}", kind="splittability", switch=v, verdict=verdict)
        return 0
    side = verdict.lower() if a.side == "auto" else a.side
    if side not in ("left", "right"):
        out.emit(f"{v}: {verdict}, no split", kind="splittability", switch=v, verdict=verdict)
        return 1
    g, move = tight_split(f, v, side)
    out.emit(f"split {v} {side}: folded {move.folded[0]} over {move.folded[1]}, new edge {move.alpha}, "
             f"P = I + D_{move.P[0]},{move.P[1]}", kind="move", switch=v, side=side, folded=list(move.folded),
             alpha=move.alpha, P=list(move.P))
    text = serialize_map(g)
    track_text = serialize_track(g.track)
    if a.out:
        base = Path(a.out)
        base.with_suffix(".track").write_text(track_text, encoding="utf-8")
        g = replace(g, track_ref=base.with_suffix(".track").name)
        base.with_suffix(".map").write_text(serialize_map(g), encoding="utf-8")
    else:
        for line in track_text.splitlines():
            out.emit(line, kind="track", line=line)
        for line in text.splitlines():
            out.emit(line, kind="map", line=line)
    return 0


def cmd_reduce(a, out: Output) -> int:
    f = load_map(a.map)
    target = load_track(a.target) if a.target else None
    before = spectral(transition_matrix(f)).lam
    g, log = reduce_joints(f, a.max_steps, target)
    after = spectral(transition_matrix(g)).lam
    if a.log:
        Path(a.log).write_text("".join(line + "\n" for line in log.to_lines()), encoding="utf-8")
    for r in log.records:
        out.emit(f"step {r['step']}: {r['side']} split at {r['switch']}, P = I + D_{r['P'][0]},{r['P'][1]}",
                 kind="step", step=r["step"], switch=r["switch"], side=r["side"], P=r["P"])
    out.emit(f"J: {' -> '.join(str(j) for j in log.J)}", kind="J", trajectory=log.J)
    out.emit(f"lambda {out.num(before)} -> {out.num(after)}", kind="lambda", before=out.num(before),
             after=out.num(after))
    if target is not None:
        iso = is_isomorphic(g.track, target)
        out.emit("final track isomorphic to target" if iso else "final track differs from target",
                 kind="target", isomorphic=iso)
    return 0


def cmd_lift(a, out: Output) -> int:
    f = load_map(a.map)
    r = lift(f, a.sheet)
    out.emit(f"sheet {r.sheet} trace {r.trace}", kind="lift", sheet=r.sheet, trace=r.trace)
    if a.words:
        for lab in r.labels:
            out.emit(f"{lab} -> {' '.join(r.words[lab])}", kind="word", edge=lab, word=list(r.words[lab]))
    if a.emit_matrix:
        out.emit("order " + ",".join(r.labels), kind="labels", labels=list(r.labels))
        for lab, row in zip(r.labels, r.matrix):
            out.emit(" ".join(str(x) for x in row), kind="row", label=lab, row=list(row))
    return 0


def cmd_fpf(a, out: Output) -> int:
    f = load_map(a.map)
    try:
        rep = fixed_point_test(f)
    except LiftError as exc:
        out.emit(f"unsupported: {exc}", kind="fpf", verdict="Unsupported", reason=str(exc))
        return 2
    out.emit(str(rep), kind="fpf", verdict=rep.verdict, traces=list(rep.traces),
             disk_failures=list(rep.disk_failures))
    return 0 if rep.verdict == "TraceZero" else 1


def cmd_family(a, out: Output) -> int:
    emit = set(a.emit.split(","))
    if a.folds:
        t = load_track(a.folds)
        f = generate_map_by_folds(t, a.seed, a.length)
        M = transition_matrix(f)
    else:
        if a.n is None or a.n < 0:
            raise InputError("family needs --n >= 0 (or --folds TRACK)")
        d, M = beta_family(a.n)
        if a.reverse_inverse:
            d = reverse_inverse(d)
            M = transition_matrix(d.map)
        f = d.map
    if "map" in emit:
        for line in serialize_map(f).splitlines():
            out.emit(line, kind="map", line=line)
    if "matrix" in emit:
        out.emit("order " + ",".join(M.labels), kind="labels", labels=list(M.labels))
        for lab, r in zip(M.labels, M.rows):
            out.emit(" ".join(str(x) for x in r), kind="row", label=lab, row=list(r))
    return 0


def cmd_enumerate(a, out: Output) -> int:
    st = SearchStats()
    if a.first_letter:
        letters = first_letter_census(a.first_letter, a.max_len, st)
        out.emit(f"first letters of f({a.first_letter}): {' '.join(sorted(letters))}", kind="first_letters",
                 edge=a.first_letter, letters=sorted(letters))
        return 0
    found = enumerate_candidates(a.max_len, a.mode, stats=st)
    for i, d in enumerate(found):
        out.emit(str(d), kind="survivor", index=i, words={e: " ".join(w) for e, w in zip(("o", "g", "p", "b", "r"), d.words)})
    out.emit(f"survivors {len(found)} (nodes {st.nodes}, planarity pruned {st.planarity_pruned}, "
             f"PF rejected {st.pf_rejected})", kind="summary", survivors=len(found), nodes=st.nodes,
             planarity_pruned=st.planarity_pruned, pf_rejected=st.pf_rejected)
    if a.out:
        os.makedirs(a.out, exist_ok=True)
        for i, d in enumerate(found):
            Path(a.out, f"s{i}.map").write_text(serialize_map(replace(d.map, name=f"s{i}")), encoding="utf-8")
    return 0


def cmd_alexander(a, out: Output) -> int:
    if a.indices is not None:
        idx = [int(x) for x in a.indices.split(",") if x.strip()]
        trace = lefschetz_trace(idx)
        out.emit(f"trace {trace}", kind="trace", value=trace)
    elif a.trace is not None:
        trace = a.trace
    else:
        raise InputError("alexander needs --trace or --indices")
    try:
        res = alexander_candidates(trace, a.genus)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for p, n in zip(res.candidates, res.real_roots):
        out.emit(f"candidate {p}  real roots {n}  Delta(1)={p(1)}", kind="candidate", poly=str(p), real_roots=n,
                 at_one=p(1))
    for p in res.selected:
        out.emit(f"selected {p}  lambda={out.num(dilatation(p))}", kind="selected", poly=str(p),
                 lam=out.num(dilatation(p)))
    return 0 if res.selected else 1


def cmd_rykken(a, out: Output) -> int:
    try:
        r = rykken_check(a.hom_trace, a.real_edges, a.hom_rank, a.matrix_trace)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.emit(f"bound {r.bound}: {r.verdict}", kind="rykken", bound=r.bound, verdict=r.verdict)
    return 1 if r.contradiction else 0


def cmd_fdtc(a, out: Output) -> int:
    try:
        c = FdtcInterval.parse(a.interval)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ms = fdtc_filter(c)
    out.emit("m in {" + ", ".join(str(m) for m in ms) + "}", kind="fdtc", interval=str(c), shifts=ms)
    return 0 if ms else 1


def cmd_braid(a, out: Output) -> int:
    try:
        w = BraidWord.parse(a.word, a.strands)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if a.inverse:
        w = w.inverse()
    if a.twist:
        w = twisted(w, a.twist, a.twist_side)
    s = braid_stats(w)
    out.emit(f"word {w}", kind="word", word=str(w))
    out.emit(f"exponent sum {s.exponent_sum}, self-linking {s.self_linking}", kind="stats",
             exponent_sum=s.exponent_sum, self_linking=s.self_linking)
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tracksplit", description="Train tracks and train-track maps on punctured disks.")
    p.add_argument("--version", action="version", version=f"tracksplit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "records"), default="plain")
    common.add_argument("--digits", type=int, default=6, help="significant digits for real numbers")
    common.add_argument("--manifest", help="write a run manifest (JSON) to this path")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    s = sub.add_parser("validate", parents=[common], help="validate a track or map file")
    s.add_argument("file")
    s.add_argument("--absorption", action="store_true", help="also check that the map's image is planar")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("census", parents=[common], help="complementary regions and structure of a track")
    s.add_argument("track", help="track file or builtin name (peacock, snail, " + ", ".join(SYNTHETIC_NAMES) + ")")
    s.add_argument("--structure", action="store_true")
    s.add_argument("--lifted", action="store_true", help="census of the lift to the double branched cover")
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--compare", help="test isomorphism with another track")
    s.add_argument("--reflect", action="store_true", help="allow orientation-reversing isomorphisms")
    s.add_argument("--serialize", action="store_true", help="print the track in file form")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("matrix", parents=[common], help="transition matrix of a map")
    s.add_argument("map")
    s.add_argument("--extended", action="store_true")
    s.add_argument("--order")
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("spectral", parents=[common], help="characteristic polynomial, dilatation, eigenvector")
    s.add_argument("file", nargs="?")
    s.add_argument("--pin", help="normalize the eigenvector so that LABEL=VALUE")
    s.add_argument("--pf-census", type=int, metavar="N", help="list N x N PF matrices with radius <= --bound")
    s.add_argument("--bound", type=float)
    s.set_defaults(func=cmd_spectral)

    s = sub.add_parser("split", parents=[common], help="splittability and tight splits")
    s.add_argument("map")
    s.add_argument("--switch")
    s.add_argument("--side", choices=("left", "right", "auto"))
    s.add_argument("--link", action="store_true", help="print Df on the switch and its gate depth")
    s.add_argument("--rigid-cycles", action="store_true")
    s.add_argument("--out", help="write the split track and map to OUT.track / OUT.map")
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("reduce", parents=[common], help="split away all joints")
    s.add_argument("map")
    s.add_argument("--max-steps", type=int, default=100_000)
    s.add_argument("--log", help="write line-delimited split records")
    s.add_argument("--target", help="keep splitting until the track is isomorphic to this track")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("lift", parents=[common], help="lift a map to the double branched cover")
    s.add_argument("map")
    s.add_argument("--sheet", type=int, choices=(1, 2), default=1)
    s.add_argument("--emit-matrix", action="store_true")
    s.add_argument("--words", action="store_true")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("fpf", parents=[common], help="lifted-trace fixed point test")
    s.add_argument("map")
    s.set_defaults(func=cmd_fpf)

    s = sub.add_parser("family", parents=[common], help="the beta_n maps, or a fold-generated map")
    s.add_argument("--n", type=int)
    s.add_argument("--emit", default="map,matrix")
    s.add_argument("--reverse-inverse", action="store_true")
    s.add_argument("--folds", metavar="TRACK", help="generate a map on TRACK from random splits")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--length", type=int, default=6)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("enumerate", parents=[common], help="bounded search for decorated Peacock maps")
    s.add_argument("--max-len", type=int, default=9)
    s.add_argument("--mode", choices=("lemma-replay", "full"), default="lemma-replay")
    s.add_argument("--first-letter", choices=("o", "g", "p", "b", "r"),
                   help="report first letters of this edge's image with its own restriction dropped")
    s.add_argument("--out", help="directory for survivor map files")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("alexander", parents=[common], help="Alexander polynomial candidates")
    s.add_argument("--trace", type=int)
    s.add_argument("--indices", help="comma-separated fixed point indices; the trace is 2 minus their sum")
    s.add_argument("--genus", type=int, default=2)
    s.set_defaults(func=cmd_alexander)

    s = sub.add_parser("rykken", parents=[common], help="trace bound from homology")
    s.add_argument("hom_trace", type=int)
    s.add_argument("real_edges", type=int)
    s.add_argument("hom_rank", type=int)
    s.add_argument("matrix_trace", type=int)
    s.set_defaults(func=cmd_rykken)

    s = sub.add_parser("fdtc", parents=[common], help="twist exponents compatible with |c| < 1")
    s.add_argument("--interval", required=True)
    s.set_defaults(func=cmd_fdtc)

    s = sub.add_parser("braid", parents=[common], help="exponent sum and self-linking of a braid")
    s.add_argument("--word", required=True)
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("--stats", action="store_true", help="accepted for symmetry; statistics are always printed")
    s.add_argument("--twist", type=int, default=0, help="compose with this power of the full twist")
    s.add_argument("--twist-side", choices=("left", "right"), default="left")
    s.add_argument("--inverse", action="store_true", help="invert the word before twisting")
    s.set_defaults(func=cmd_braid)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(a.format, a.digits)
    start = time.perf_counter()
    try:
        code = a.func(a, out)
    except (InputError, TrackError, MapError, SplitError, CensusError) as exc:
        sys.stdout.write(out.text())
        print(f"tracksplit: error: {exc}", file=sys.stderr)
        return 3
    text = out.text()
    sys.stdout.write(text)
    if a.manifest:
        inputs = {}
        for key in ("file", "map", "track"):
            path = getattr(a, key, None)
            if path and os.path.isfile(path):
                inputs[path] = _digest(Path(path).read_bytes())
        m = RunManifest(" ".join(argv), inputs, __version__, round(time.perf_counter() - start, 6),
                        _digest(text.encode()))
        Path(a.manifest).write_text(json.dumps(asdict(m), sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
