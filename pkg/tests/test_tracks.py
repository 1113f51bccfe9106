from __future__ import annotations

from collections import Counter
from dataclasses import replace
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from relabel import relabel
from tracksplit.tracks import (IL, IR, SYNTHETIC_NAMES, TrackError, builtin_track, canonical_form,
                               canonical_switch_order, complement_census, is_isomorphic, isomorphisms,
                               mirror_track, parse_track, serialize_track, structure_query, synthetic_track,
                               validate_track)

DATA = Path(__file__).resolve().parent.parent / "data"
ALL = ("peacock", "snail") + SYNTHETIC_NAMES


def track(name):
    return builtin_track(name) if name in ("peacock", "snail") else synthetic_track(name)


def test_peacock_shape():
    P = builtin_track("peacock")
    assert sum(p.is_loop for p in P.polygons) == 5
    assert [p.cusps for p in P.polygons if not p.is_loop] == [3]
    assert sorted(P.edge_ids) == sorted("ogpbr")
    assert validate_track(P).valid


def test_peacock_file_matches_builtin():
    assert canonical_form(parse_track((DATA / "peacock.track").read_text())) == canonical_form(
        builtin_track("peacock"))


def test_snail_has_one_valence_three_corner():
    S = builtin_track("snail")
    corners = [v for v in S.switches if not S.is_loop_switch(v)]
    assert sorted(S.valence(v) for v in corners) == [1, 1, 3]


def test_unknown_builtin():
    with pytest.raises(TrackError, match="unknown"):
        builtin_track("torus")


def test_parse_errors():
    with pytest.raises(TrackError, match="no polygons"):
        parse_track("track x\nsurface disk punctures=0\n")
    bad = ("track x\nsurface disk punctures=1\nloop L1 punctured\npolygon T cusps=3\n"
           "edge o L1.1 Z.1\nexterior cusps=2 punctured\n")
    with pytest.raises(TrackError, match="dangling edge end"):
        parse_track(bad)


def test_disconnected_real_link_is_reported():
    P = builtin_track("peacock")
    rot = dict(P.rotations)
    o, g = rot["T.1"][:2]
    rot["T.1"] = (o, IR, g, IL)
    bad = replace(P, rotations=tuple(rot.items()))
    assert any("R(v) not connected" in v for v in validate_track(bad).violations)


def test_unpunctured_bigon_is_reported():
    text = serialize_track(builtin_track("peacock")).replace("polygon T cusps=3", "polygon T cusps=2")
    try:
        t = parse_track(text)
    except TrackError:
        return  # rejected already at parse time
    assert any("region with 2 cusps, no puncture" in v for v in validate_track(t).violations)


@pytest.mark.parametrize("name,stratum", [("peacock", "(2;1^5;3)"), ("snail", "(2;1^5;3)"),
                                          ("tri4", "(1;1^4;3)"), ("quad6", "(2;1^6;4)"),
                                          ("twotri5", "(1;1^5;3^2)")])
def test_census(name, stratum):
    regions, s = complement_census(track(name))
    assert str(s) == stratum
    assert s.index_sum() == 2 * track(name).punctures - 2


def test_peacock_regions():
    regions, _ = complement_census(builtin_track("peacock"))
    kinds = Counter((r.cusps, r.punctured) for r in regions)
    assert kinds[(1, True)] == 5
    assert kinds[(3, False)] == 1
    assert kinds[(2, True)] == 1


@pytest.mark.parametrize("name", ALL)
def test_cusp_totals_match_switch_orders(name):
    t = track(name)
    regions, _ = complement_census(t)
    # every switch of valence k contributes k-1 cusps between real ends, plus
    # one cusp per polygon corner
    from_switches = sum(max(t.valence(v) - 1, 0) for v in t.switches) + sum(p.cusps for p in t.polygons)
    assert sum(r.cusps for r in regions) == from_switches


@pytest.mark.parametrize("name", ALL)
def test_joint_count_recomputed_from_loop_valences(name):
    t = track(name)
    rep = structure_query(t)
    assert rep.J == sum(t.valence(v) - 1 for v in t.switches if t.is_loop_switch(v))
    assert rep.J == 0


def test_fold_creates_a_joint():
    from tracksplit.splitting import split_graph
    g = split_graph(builtin_track("peacock"))
    assert any(structure_query(t).J == 1 for t in g.reps)


@pytest.mark.parametrize("name", ALL)
def test_serialize_round_trip(name):
    t = track(name)
    text = serialize_track(t)
    assert serialize_track(parse_track(text)) == text


def test_isomorphism_classes():
    P, S = builtin_track("peacock"), builtin_track("snail")
    assert not is_isomorphic(P, S)
    assert is_isomorphic(P, mirror_track(P), reflect=True)
    assert is_isomorphic(P, relabel(P, 7))


def test_isomorphisms_carry_switches_to_switches():
    P = builtin_track("peacock")
    Q = relabel(P, 3)
    isos = isomorphisms(P, Q)
    assert isos
    for iso in isos:
        assert sorted(iso.switch_map.values()) == sorted(Q.switches)


def test_canonical_switch_order_is_a_permutation():
    for name in ALL:
        t = track(name)
        assert sorted(canonical_switch_order(t)) == sorted(t.switches)


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(ALL), st.integers(0, 2**32 - 1))
def test_canonical_form_invariant_under_relabeling(name, seed):
    t = track(name)
    r = relabel(t, seed)
    assert validate_track(r).valid
    assert canonical_form(r) == canonical_form(t)
