from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tracksplit.arith import (BraidWord, FdtcInterval, IntPolynomial, alexander_candidates, braid_stats, char_poly,
                              count_real_roots, dilatation, fdtc_filter, full_twist, largest_real_root,
                              lefschetz_trace, rykken_check, sturm_sequence, twisted)

LAMBDA2 = IntPolynomial.from_descending([1, -1, -1, -1, 1])


def test_polynomial_basics():
    p = IntPolynomial.from_descending([1, 0, -2])
    assert p.degree == 2 and p.leading == 1
    assert p(3) == 7
    assert str(LAMBDA2) == "t^4 - t^3 - t^2 - t + 1"
    assert LAMBDA2.is_palindromic()
    assert IntPolynomial((0, 0)).degree == -1


def test_char_poly_of_companion():
    assert char_poly([[0, 1], [1, 1]]) == IntPolynomial.from_descending([1, -1, -1])
    assert char_poly([[2]]) == IntPolynomial.from_descending([1, -2])


def test_lefschetz_trace():
    assert lefschetz_trace([1]) == 1
    assert lefschetz_trace([1 - 6]) == 7
    assert lefschetz_trace([]) == 2


def test_alexander_candidates_trace_one():
    res = alexander_candidates(1)
    assert [str(q) for q in res.candidates] == ["t^4 - t^3 + t^2 - t + 1", "t^4 - t^3 - t^2 - t + 1"]
    assert res.selected == (LAMBDA2,)
    assert res.real_roots == (0, 2)
    assert all(abs(q(1)) == 1 for q in res.candidates)
    assert dilatation(LAMBDA2) == pytest.approx(1.72208, abs=1e-5)


def test_alexander_other_genus_rejected():
    with pytest.raises(ValueError):
        alexander_candidates(1, genus=3)


def test_rykken():
    r = rykken_check(7, 8, 4, 0)
    assert (r.bound, r.verdict) == (3, "Contradiction")
    assert (rykken_check(1, 8, 4, 0).bound, rykken_check(1, 8, 4, 0).verdict) == (-3, "Consistent")
    assert rykken_check(7, 8, 4, 3).verdict == "Consistent"
    with pytest.raises(ValueError):
        rykken_check(7, 3, 4, 0)


def test_fdtc_filter():
    assert fdtc_filter(FdtcInterval.parse("(0,1]")) == [-1, 0]
    assert fdtc_filter(FdtcInterval.parse("(0,1)")) == [-1, 0]
    # c = 5 exactly: the shift by -5 lands on 0, inside (-1, 1)
    assert fdtc_filter(FdtcInterval.parse("[5,5]")) == [-5]
    with pytest.raises(ValueError):
        FdtcInterval.parse("(5,5)")


@given(st.fractions(-20, 20), st.fractions(0, 5), st.booleans(), st.booleans())
def test_fdtc_filter_is_exact(lo, width, lc, uc):
    if width == 0:
        lc = uc = True
    c = FdtcInterval(lo, lo + width, lc, uc)
    got = set(fdtc_filter(c))
    for m in range(-40, 40):
        lo_m, hi_m = c.lower + m, c.upper + m
        meets = lo_m < 1 and hi_m > -1
        assert (m in got) == meets


def test_braid_stats():
    alpha = BraidWord.parse("s1 s2 s3 s4 s1 s2", 5)
    assert (braid_stats(alpha).exponent_sum, braid_stats(alpha).self_linking) == (6, 1)
    b = twisted(alpha.inverse(), 1)
    assert (braid_stats(b).exponent_sum, braid_stats(b).self_linking) == (14, 9)
    empty = BraidWord(5)
    assert (braid_stats(empty).exponent_sum, braid_stats(empty).self_linking) == (0, -5)
    assert len(full_twist(5).letters) == 20


def test_braid_parse_forms():
    assert BraidWord.parse("s1 S2 s3^-1 -4", 5).letters == (1, -2, -3, -4)
    with pytest.raises(ValueError):
        BraidWord.parse("s5", 5)


def _rewrite(letters: list, rng: random.Random) -> list:
    """One random braid relation applied somewhere in the word, if possible."""
    w = list(letters)
    spots = []
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            spots.append(("commute", i))
    for i in range(len(w) - 2):
        a, b, c = w[i:i + 3]
        if a == c and a > 0 and b > 0 and abs(a - b) == 1:
            spots.append(("braid", i))
    if not spots:
        return w
    kind, i = rng.choice(spots)
    if kind == "commute":
        w[i], w[i + 1] = w[i + 1], w[i]
    else:
        a, b = w[i], w[i + 1]
        w[i:i + 3] = [b, a, b]
    return w


@settings(max_examples=200)
@given(st.lists(st.sampled_from([1, 2, 3, 4, -1, -2, -3, -4]), max_size=20), st.integers(0, 10**6))
def test_self_linking_invariant_under_braid_relations(letters, seed):
    rng = random.Random(seed)
    w = BraidWord(5, tuple(letters))
    cur = list(letters)
    for _ in range(10):
        cur = _rewrite(cur, rng)
    assert braid_stats(BraidWord(5, tuple(cur))).self_linking == braid_stats(w).self_linking


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_sturm_counts_agree_with_numpy(coeffs):
    p = IntPolynomial(tuple(coeffs))
    roots = np.roots(list(reversed(coeffs)))
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-7)
    # skip inputs with near-coincident roots, where numpy itself is unreliable
    if any(abs(a - b) < 1e-4 for a, b in zip(real, real[1:])):
        return
    if any(abs(r.imag) < 1e-3 and abs(r.imag) >= 1e-7 for r in roots):
        return
    distinct = len(real)
    assert count_real_roots(p) == distinct
    enc = largest_real_root(p)
    if distinct == 0:
        assert enc is None
    else:
        lo, hi = enc
        assert lo <= Fraction(real[-1]).limit_denominator(10**9) + Fraction(1, 10**6)
        assert float(hi) == pytest.approx(real[-1], abs=1e-6)
        assert hi - lo <= Fraction(1, 10**12)


def test_sturm_sequence_ends_in_constant():
    seq = sturm_sequence(LAMBDA2)
    assert len(seq[-1]) == 1
