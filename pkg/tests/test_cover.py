from __future__ import annotations

import numpy as np
import pytest

from tracksplit.census import beta_family, beta_words, decorated_map
from tracksplit.cover import (LiftError, base_dilatation, check_liftable, disk_trace_predicate, fixed_point_test,
                              lift, lift_track_census, lifted_dilatation)
from tracksplit.maps import identity_map, spectral, transition_matrix, validate_map
from tracksplit.splitting import fold_cycle
from tracksplit.tracks import SYNTHETIC_NAMES, builtin_track, structure_query, synthetic_track

ALL = ("peacock", "snail") + SYNTHETIC_NAMES


def track(name):
    return builtin_track(name) if name in ("peacock", "snail") else synthetic_track(name)


def test_lifted_censuses():
    assert str(lift_track_census(builtin_track("peacock"))) == "(4;∅;3^2)"
    assert str(lift_track_census(builtin_track("snail"))) == "(4;∅;3^2)"
    assert str(lift_track_census(synthetic_track("quad6"))) == "(2^2;∅;4^2)"


def test_jointed_track_is_not_liftable():
    from tracksplit.splitting import split_graph
    jointed = next(t for t in split_graph(builtin_track("peacock")).reps if structure_query(t).J)
    with pytest.raises(LiftError):
        check_liftable(jointed)


def test_f0_lift_words():
    L = lift(beta_family(0)[0].map, 1)
    assert L.words["p^1"] == ("r^1", "~r^2", "o^2", "~o^1", "r^1")
    assert L.words["o^1"] == ("p^1",)


@pytest.mark.parametrize("n", range(11))
def test_beta_family_lifts(n):
    f, Mn = beta_family(n)
    traces = []
    for sheet in (1, 2):
        L = lift(f.map, sheet)
        assert L.array().shape == (10, 10)
        assert np.array_equal(L.collapse(), transition_matrix(f.map).array())
        traces.append(L.trace)
    assert traces == [0, 0]
    rep = fixed_point_test(f.map)
    assert rep.verdict == "TraceZero" and rep.disk_failures == ()


def test_identity_lifts_to_permutation():
    L = lift(identity_map(builtin_track("peacock")))
    A = L.array()
    assert (A.sum(axis=0) == 1).all() and (A.sum(axis=1) == 1).all()


def test_fixed_marked_edge():
    # every edge maps to itself: the disk predicate fails everywhere and one
    # lift has full trace, the other lift swaps the sheets
    rep = fixed_point_test(identity_map(builtin_track("peacock")))
    assert rep.disk_failures == ("o", "g", "p", "b", "r")
    assert rep.traces == (10, 0)
    assert rep.verdict == "TraceZero"


def test_turning_letter_on_own_edge():
    words = beta_words(0)
    words["o"] = "p- o+ p0"
    d = decorated_map(words)
    assert validate_map(d.map).valid
    rep = fixed_point_test(d.map)
    assert rep.disk_failures == ("o",)
    assert rep.traces == (2, 2)
    assert rep.verdict == "TraceNonzero" and rep.value == 2
    assert str(rep).startswith("TraceNonzero(2)")


def test_sheet_choice_checked():
    with pytest.raises(LiftError):
        lift(beta_family(0)[0].map, 3)


def _jointless_pf_corpus(name, seeds=range(10)):
    for seed in seeds:
        cyc = fold_cycle(track(name), seed, 6)
        for i in range(cyc.length):
            f = cyc.map_on(i)
            if structure_query(f.track).J == 0 and spectral(transition_matrix(f)).pf:
                yield f


@pytest.mark.parametrize("name", ALL)
def test_corpus_lift_properties(name):
    seen = 0
    for f in _jointless_pf_corpus(name):
        base = transition_matrix(f).array()
        lam = base_dilatation(f)
        failures = disk_trace_predicate(f)
        for sheet in (1, 2):
            L = lift(f, sheet)
            assert np.array_equal(L.collapse(), base)
            assert lifted_dilatation(f, sheet) == pytest.approx(lam, abs=1e-9)
        if failures:
            assert max(fixed_point_test(f).traces) > 0
        seen += 1
    assert seen > 0
