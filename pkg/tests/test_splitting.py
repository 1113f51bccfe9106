from __future__ import annotations

import json

import numpy as np
import pytest

from tracksplit.arith import char_poly
from tracksplit.census import beta_family
from tracksplit.maps import identity_map, matrix, spectral, transition_matrix, validate_map
from tracksplit.splitting import (ReductionError, SplitError, admissible_sides, fold_cycle, generate_map_by_folds,
                                  is_rigid, reduce_joints, rigid_cycle_check, split_graph, splittability,
                                  tight_split)
from tracksplit.tracks import (SYNTHETIC_NAMES, builtin_track, is_isomorphic, structure_query, synthetic_track,
                               validate_track)

ALL = ("peacock", "snail") + SYNTHETIC_NAMES


def track(name):
    return builtin_track(name) if name in ("peacock", "snail") else synthetic_track(name)


def corpus(name, seeds=range(12), length=6):
    for seed in seeds:
        cyc = fold_cycle(track(name), seed, length)
        for i in range(cyc.length):
            f = cyc.map_on(i)
            if spectral(transition_matrix(f)).pf:
                yield f


def f0():
    return beta_family(0)[0].map


def test_splittability_on_f0():
    f = f0()
    verdicts = {v: splittability(f, v) for v in f.track.switches}
    assert verdicts["T.1"] == "Left"
    assert verdicts["T.3"] == "Rigid"
    assert all(verdicts[v] == "Singleton" for v in f.track.switches if f.track.valence(v) == 1)


def test_left_split_eigenvector_inequality_on_f0():
    f = f0()
    g, move = tight_split(f, "T.1", "left")
    mu = spectral(transition_matrix(f)).mu
    i, j = move.P
    assert move.folded == ("o", "r")
    assert mu[j - 1] < mu[i - 1]


def test_tight_split_on_f0():
    f = f0()
    g, move = tight_split(f, "T.1", "left")
    assert validate_track(g.track).valid
    assert validate_map(g).valid
    M = transition_matrix(f).array()
    assert np.array_equal(move.inverse_matrix(5) @ M @ move.matrix(5), transition_matrix(g).array())
    assert char_poly(transition_matrix(g).rows) == char_poly(transition_matrix(f).rows)
    assert move.alpha in g.track.edge_ids and "o" not in g.track.edge_ids


def test_split_move_matrix_is_unimodular():
    _, move = tight_split(f0(), "T.1", "left")
    P, Q = move.matrix(5), move.inverse_matrix(5)
    assert np.array_equal(P @ Q, np.eye(5, dtype=np.int64))
    assert round(np.linalg.det(P)) == 1


def test_inadmissible_side_is_refused():
    with pytest.raises(SplitError):
        tight_split(f0(), "T.1", "right")


def test_rigid_example():
    f = identity_map(builtin_track("snail"))
    assert splittability(f, "T.1") == "Rigid"
    assert is_rigid(f, "T.1")


def test_rigid_cycles_empty_on_f0():
    assert rigid_cycle_check(f0()) == []


def test_rigid_cycle_of_identity():
    # the identity fixes every switch, so each rigid switch is its own cycle
    f = identity_map(builtin_track("snail"))
    assert rigid_cycle_check(f) == [("T.1",)]


def test_reduce_joints_on_jointless_map_is_a_no_op():
    g, log = reduce_joints(f0())
    assert g is not None and log.moves == [] and log.J == [0]
    assert transition_matrix(g).rows == transition_matrix(f0()).rows


def test_reduce_joints_needs_pf():
    with pytest.raises(SplitError):
        reduce_joints(identity_map(builtin_track("peacock")))


def test_reduce_joints_step_limit():
    f = next(f for f in corpus("peacock") if structure_query(f.track).J > 0)
    with pytest.raises(ReductionError) as exc:
        reduce_joints(f, max_steps=0)
    assert exc.value.log.J[0] > 0


@pytest.mark.parametrize("name", ALL)
def test_reduce_joints_on_fold_corpus(name):
    target = builtin_track("peacock") if name == "snail" else None
    for f in corpus(name):
        lam = spectral(transition_matrix(f)).lam
        g, log = reduce_joints(f, target=target)
        assert structure_query(g.track).J == 0
        assert spectral(transition_matrix(g)).lam == pytest.approx(lam, abs=1e-9)
        # J never rises while joints are being removed; the later corner
        # splits towards a target track may create joints again
        phase = log.J[:log.J.index(0) + 1]
        assert all(a >= b for a, b in zip(phase, phase[1:]))
        if target is not None:
            assert is_isomorphic(g.track, target)


def test_stem_splits_lower_the_joint_count():
    seen = 0
    for f in corpus("peacock"):
        cur = f
        g, log = reduce_joints(f)
        for k, move in enumerate(log.moves):
            stems = set(structure_query(cur.track).stems)
            if move.folded[1] in stems:
                assert log.J[k + 1] == log.J[k] - 1
                seen += 1
            cur, _ = tight_split(cur, move.switch, move.side)
    assert seen > 0


@pytest.mark.parametrize("name", ALL)
def test_loop_switches_admit_at_most_one_side(name):
    for f in corpus(name, seeds=range(6)):
        t = f.track
        for v in t.switches:
            if t.is_loop_switch(v):
                assert len(admissible_sides(f, v)) < 2


@pytest.mark.parametrize("name", ALL)
def test_some_maximal_loop_switch_is_not_rigid(name):
    for f in corpus(name, seeds=range(6)):
        t = f.track
        loops = [v for v in t.switches if t.is_loop_switch(v) and t.valence(v) >= 2]
        if not loops:
            continue
        top = max(t.valence(v) for v in loops)
        assert any(not is_rigid(f, v) for v in loops if t.valence(v) == top)


def test_split_log_records_are_json():
    f = next(f for f in corpus("peacock") if structure_query(f.track).J > 0)
    g, log = reduce_joints(f)
    lines = log.to_lines()
    assert len(lines) == len(log.moves)
    rec = json.loads(lines[0])
    assert {"step", "switch", "side", "P", "matrix", "mu_before"} <= set(rec)
    M = transition_matrix(f).array()
    n = M.shape[0]
    P = log.moves[0]
    assert np.array_equal(P.inverse_matrix(n) @ M @ P.matrix(n), np.array(rec["matrix"]))


def test_split_graph_sizes():
    # number of split-isomorphism classes reachable from each base track
    sizes = {name: len(split_graph(track(name)).reps) for name in ALL}
    assert sizes == {"peacock": 16, "snail": 16, "tri4": 3, "quad6": 22, "twotri5": 9}


def test_generate_length_zero_is_a_permutation():
    h = generate_map_by_folds(builtin_track("peacock"), 0, 0)
    A = transition_matrix(h).array()
    assert (A.sum(axis=0) == 1).all() and (A.sum(axis=1) == 1).all()


def test_generate_long_walk_is_valid_and_deterministic():
    P = builtin_track("peacock")
    h = generate_map_by_folds(P, 42, 20)
    assert validate_map(h).valid
    again = generate_map_by_folds(P, 42, 20)
    assert {e: h.word(e) for e in P.edge_ids} == {e: again.word(e) for e in P.edge_ids}


def test_fold_cycle_returns_to_start():
    cyc = fold_cycle(builtin_track("snail"), 5, 6)
    assert cyc.classes[0] == cyc.classes[-1] == 0
    assert cyc.length >= 6
    for i in range(cyc.length):
        assert validate_map(cyc.map_on(i)).valid


def test_worked_example_matrix_contract():
    M1 = np.array([[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 1, 1], [1, 2, 0, 0, 0], [1, 1, 0, 0, 0]])
    P1 = np.eye(5, dtype=np.int64)
    P1[3, 4] = 1
    Q1 = np.eye(5, dtype=np.int64)
    Q1[3, 4] = -1
    M2 = Q1 @ M1 @ P1
    mu1 = np.array(spectral(matrix(M1.tolist()), pin=("e5", 3.0)).mu)
    mu2 = Q1 @ mu1
    lam = spectral(matrix(M1.tolist())).lam
    assert np.allclose(M2 @ mu2, lam * mu2)
    P2 = np.eye(5, dtype=np.int64)
    P2[4, 3] = 1
    Q2 = np.eye(5, dtype=np.int64)
    Q2[4, 3] = -1
    mu3 = Q2 @ mu2
    # entry 2 is untouched by the second split; entry 5 drops by mu2(e4)
    assert mu3[1] == pytest.approx(2.628370, abs=1e-6)
    assert mu3[4] == pytest.approx(1.473727, abs=1e-6)
