"""Exact integer polynomials, Sturm root isolation, and the small arithmetic
checks used to rule out pseudo-Anosov candidates: Lefschetz traces,
Alexander polynomial candidates, the trace bound on transition matrices,
fractional Dehn twist shifts and braid self-linking numbers."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

Number = "int | Fraction"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients listed from the constant term up."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(reversed(list(coeffs))))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0,))

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __str__(self) -> str:
        if self.degree < 0:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [Fraction(0)]


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    if p.degree < 1:
        return seq[:1]
    while True:
        r = _poly_rem(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append([-c for c in r])
    return seq


def _eval(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_changes(seq, x) -> int:
    signs = [v for v in (_eval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root lies in (-B, B)."""
    lead = abs(p.leading)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead)


def count_real_roots(p: IntPolynomial, lo=None, hi=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if p.degree < 1:
        return 0
    seq = sturm_sequence(p)
    B = root_bound(p)
    lo = -B if lo is None else Fraction(lo)
    hi = B if hi is None else Fraction(hi)
    if lo >= hi:
        return 0
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def largest_real_root(p: IntPolynomial, tol=Fraction(1, 10**13)) -> tuple[Fraction, Fraction] | None:
    """Exact enclosure (lo, hi] of the largest real root with hi - lo <= tol."""
    if p.degree < 1:
        return None
    return _largest_real_root(tuple(p.coeffs), Fraction(tol))


@lru_cache(maxsize=4096)
def _largest_real_root(coeffs: tuple, tol: Fraction):
    p = IntPolynomial(coeffs)
    seq = sturm_sequence(p)
    B = root_bound(p)
    top = _sign_changes(seq, B)
    if _sign_changes(seq, -B) - top == 0:
        return None
    lo, hi = -B, B
    # a floating-point estimate only seeds the bracket; Sturm counts certify it
    guess = max((r.real for r in np.roots(list(reversed(coeffs))) if abs(r.imag) < 1e-6), default=None)
    if guess is not None and np.isfinite(guess):
        w = max(abs(guess), 1.0) * 1e-9
        a, b = Fraction(guess - w), Fraction(guess + w)
        if -B <= a and b <= B:
            above = _sign_changes(seq, b) - top
            inside = _sign_changes(seq, a) - _sign_changes(seq, b)
            if above == 0 and inside >= 1:
                lo, hi = a, b
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _sign_changes(seq, mid) - top > 0:
            lo = mid
        else:
            if _eval(seq[0], mid) == 0:
                return mid, mid
            hi = mid
    return lo, hi


def char_poly(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(tI - A) by the division-free Berkowitz recursion."""
    n = len(matrix)
    A = [[int(x) for x in row] for row in matrix]
    if n == 0:
        return IntPolynomial((1,))
    # vec holds coefficients of the char poly of the leading r x r block, highest first
    vec = [1, -A[0][0]]
    for r in range(1, n):
        R = A[r][:r]
        C = [A[i][r] for i in range(r)]
        M = [row[:r] for row in A[:r]]
        a = A[r][r]
        # Toeplitz column: 1, -a, -R C, -R M C, ...
        col = [1, -a]
        v = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(M[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            new.append(sum(col[i - j] * vec[j] for j in range(len(vec)) if 0 <= i - j < len(col)))
        vec = new
    return IntPolynomial.from_descending(vec)


# -- Lefschetz and Alexander ------------------------------------------------


def lefschetz_trace(indices: Iterable[int]) -> int:
    """Trace of the action on first homology from fixed point indices."""
    return 2 - sum(indices)


@dataclass(frozen=True)
class AlexanderResult:
    candidates: tuple[IntPolynomial, ...]
    selected: tuple[IntPolynomial, ...]
    real_roots: tuple[int, ...]


def alexander_candidates(trace: int, genus: int = 2) -> AlexanderResult:
    """Monic palindromic degree-2g candidates with t^{2g-1} coefficient -trace
    and |Delta(1)| = 1; selected are those with a real root above 1."""
    if genus != 2:
        raise ValueError(f"unsupported genus {genus}; only genus 2 is implemented")
    a = -trace
    cands = []
    for d1 in (1, -1):
        b = d1 - 2 - 2 * a
        cands.append(IntPolynomial((1, a, b, a, 1)))
    cands.sort(key=lambda q: tuple(-c for c in reversed(q.coeffs)))
    roots = tuple(count_real_roots(q) for q in cands)
    selected = tuple(q for q in cands if count_real_roots(q, 1, None) > 0)
    return AlexanderResult(tuple(cands), selected, roots)


def dilatation(p: IntPolynomial) -> float:
    lo, hi = largest_real_root(p)
    return float((lo + hi) / 2)


@dataclass(frozen=True)
class RykkenResult:
    bound: int
    contradiction: bool

    @property
    def verdict(self) -> str:
        return "Contradiction" if self.contradiction else "Consistent"


def rykken_check(hom_trace: int, real_edges: int, hom_rank: int, matrix_trace: int) -> RykkenResult:
    """Each real edge beyond the homology rank can lower the trace by at most one."""
    if real_edges < hom_rank:
        raise ValueError("realEdges must be at least homRank")
    bound = hom_trace - (real_edges - hom_rank)
    return RykkenResult(bound, matrix_trace < bound)


# -- fractional Dehn twist coefficients -------------------------------------


@dataclass(frozen=True)
class FdtcInterval:
    lower: Fraction
    upper: Fraction
    lower_closed: bool = False
    upper_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.lower == self.upper and not (self.lower_closed and self.upper_closed):
            raise ValueError("degenerate interval must be closed")

    @classmethod
    def parse(cls, text: str) -> "FdtcInterval":
        m = re.fullmatch(r"\s*([\(\[])\s*([-+0-9/\.]+)\s*,\s*([-+0-9/\.]+)\s*([\)\]])\s*", text)
        if not m:
            raise ValueError(f"cannot parse interval {text!r}")
        return cls(Fraction(m.group(2)), Fraction(m.group(3)), m.group(1) == "[", m.group(4) == "]")

    def shifted(self, m: int) -> "FdtcInterval":
        return FdtcInterval(self.lower + m, self.upper + m, self.lower_closed, self.upper_closed)

    def meets_open_unit(self) -> bool:
        """Does the interval intersect (-1, 1)?"""
        lo_ok = self.lower < 1
        hi_ok = self.upper > -1
        return lo_ok and hi_ok

    def __str__(self) -> str:
        return f"{'[' if self.lower_closed else '('}{self.lower},{self.upper}{']' if self.upper_closed else ')'}"


def fdtc_filter(c: FdtcInterval) -> list[int]:
    """Shifts m with (c + m) meeting (-1, 1): the twist exponents whose braid
    could still close up to an unknot."""
    start = -int(c.upper) - 2
    stop = -int(c.lower) + 2
    return [m for m in range(start, stop + 1) if c.shifted(m).meets_open_unit()]


# -- braids -----------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"generator {g} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        out = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"([sS])(\d+)(\^-1)?|(-?\d+)", tok)
            if not m:
                raise ValueError(f"bad braid token {tok!r}")
            if m.group(4):
                out.append(int(m.group(4)))
            else:
                i = int(m.group(2))
                inv = m.group(1) == "S" or bool(m.group(3))
                out.append(-i if inv else i)
        return cls(strands, tuple(out))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(f"s{g}" if g > 0 else f"s{-g}^-1" for g in self.letters)


def full_twist(strands: int, power: int = 1) -> BraidWord:
    """Delta^{2m} = ((s1 ... s_{n-1})^n)^m."""
    base = tuple(range(1, strands)) * strands
    if power < 0:
        base = tuple(-g for g in reversed(base))
    return BraidWord(strands, base * abs(power))


@dataclass(frozen=True)
class BraidStats:
    exponent_sum: int
    self_linking: int


def braid_stats(w: BraidWord) -> BraidStats:
    e = sum(1 if g > 0 else -1 for g in w.letters)
    return BraidStats(e, e - w.strands)


def twisted(w: BraidWord, m: int, side: str = "left") -> BraidWord:
    """Prepend (or append) Delta^{2m}; the exponent sum moves by m n (n - 1)."""
    d = full_twist(w.strands, m)
    return d * w if side == "left" else w * d
