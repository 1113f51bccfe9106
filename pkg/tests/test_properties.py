"""Property tests over fold-generated maps with hypothesis-chosen seeds."""

from __future__ import annotations

import numpy as np
from hypothesis import HealthCheck, given, settings, strategies as st

from tracksplit.arith import char_poly
from tracksplit.cover import lift
from tracksplit.maps import compose, spectral, transition_matrix, validate_map
from tracksplit.splitting import admissible_sides, generate_map_by_folds, rigid_cycle_check, tight_split
from tracksplit.strands import planarity_violations
from tracksplit.tracks import SYNTHETIC_NAMES, builtin_track, structure_query, synthetic_track

NAMES = ("peacock", "snail") + SYNTHETIC_NAMES
_TRACKS = {n: builtin_track(n) if n in ("peacock", "snail") else synthetic_track(n) for n in NAMES}

maps = st.builds(lambda n, seed, length: generate_map_by_folds(_TRACKS[n], seed, length),
                 st.sampled_from(NAMES), st.integers(0, 10**9), st.integers(0, 8))

common = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@common
@given(maps)
def test_generated_maps_are_valid_and_planar(f):
    assert validate_map(f).valid
    assert planarity_violations(f) == []
    assert structure_query(f.track).J == 0


@common
@given(maps)
def test_splits_conjugate_and_keep_mu_positive(f):
    M = transition_matrix(f)
    sp = spectral(M)
    if not sp.pf:
        return
    A = M.array()
    n = A.shape[0]
    for v in f.track.switches:
        for side in admissible_sides(f, v):
            g, move = tight_split(f, v, side)
            B = transition_matrix(g).array()
            assert np.array_equal(move.inverse_matrix(n) @ A @ move.matrix(n), B)
            assert char_poly(B.tolist()) == sp.charpoly
            i, j = move.P
            assert sp.mu[j - 1] < sp.mu[i - 1]
            assert (move.inverse_matrix(n).astype(float) @ np.array(sp.mu) > 0).all()
            assert validate_map(g).valid


@common
@given(maps)
def test_no_rigid_cycles_on_pf_maps(f):
    if spectral(transition_matrix(f)).pf:
        assert rigid_cycle_check(f) == []


@common
@given(maps)
def test_sheet_collapse(f):
    base = transition_matrix(f).array()
    for sheet in (1, 2):
        L = lift(f, sheet)
        assert np.array_equal(L.collapse(), base)
        # the two lifts of an edge together cover the base image
        A = L.array()
        m = base.shape[0]
        assert np.array_equal(A[:m, m:] + A[m:, m:], base)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(NAMES), st.integers(0, 10**9), st.integers(0, 10**9))
def test_composition_multiplies_matrices(name, s1, s2):
    t = _TRACKS[name]
    f = generate_map_by_folds(t, s1, 3)
    g = generate_map_by_folds(t, s2, 3)
    h = compose(f, g)
    assert validate_map(h).valid
    assert np.array_equal(transition_matrix(h).array(), transition_matrix(f).array() @ transition_matrix(g).array())
