"""Independent computations of the derived values pinned in the tests.

Uses sympy and numpy only; nothing here imports tracksplit.  Run it and
compare its output with the constants frozen in tests/.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import sympy as sp

t = sp.symbols("t")

M1 = sp.Matrix([[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 1, 1], [1, 2, 0, 0, 0], [1, 1, 0, 0, 0]])


def elementary(i: int, j: int, n: int = 5) -> sp.Matrix:
    P = sp.eye(n)
    P[i - 1, j - 1] += 1
    return P


def pf_vector(M: sp.Matrix, pin_index: int, pin_value) -> np.ndarray:
    w, V = np.linalg.eig(np.array(M.tolist(), dtype=float))
    k = int(np.argmax(w.real))
    v = V[:, k].real
    return v * (pin_value / v[pin_index])


def worked_example() -> None:
    chi = M1.charpoly(t).as_expr()
    print("chi(M1) =", sp.factor(chi))
    lam = max(r for r in sp.Poly(chi, t).nroots(n=30) if r.is_real)
    print("lambda(M1) =", sp.N(lam, 12))
    P1, P2 = elementary(4, 5), elementary(5, 4)
    M2 = P1.inv() * M1 * P1
    M3 = P2.inv() * M2 * P2
    print("M2 =", M2.tolist())
    print("M3 =", M3.tolist())
    print("charpolys equal:", M1.charpoly(t) == M2.charpoly(t) == M3.charpoly(t))
    mu1 = pf_vector(M1, 4, 3.0)
    mu2 = np.array((P1.inv()).tolist(), dtype=float) @ mu1
    mu3 = np.array((P2.inv()).tolist(), dtype=float) @ mu2
    for name, mu in (("mu1", mu1), ("mu2", mu2), ("mu3", mu3)):
        print(name, "=", tuple(round(float(x), 6) for x in mu))


def beta_matrix(n: int) -> sp.Matrix:
    return sp.Matrix([[0, 0, n + 2, n + 1, 0], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0], [0, 1, 0, 0, 0],
                      [0, 0, n + 3, n + 2, 0]])


def beta_words(n: int) -> dict:
    """Images as strings of edge letters: a turning letter x+ or x- runs along
    x and back, so it contributes xx; a terminal letter x0 contributes x."""
    if n % 2 == 0:
        p = "rroo" * (n // 2 + 1) + "r"
        b = "rroo" * (n // 2) + "rro"
    else:
        p = "rroo" * ((n + 1) // 2) + "rro"
        b = "rroo" * ((n + 1) // 2) + "r"
    return {"o": "p", "g": "b", "r": "g", "p": p, "b": b}


def beta_family() -> None:
    order = "ogpbr"
    for n in range(11):
        w = beta_words(n)
        counted = sp.Matrix(5, 5, lambda i, j: w[order[j]].count(order[i]))
        M = beta_matrix(n)
        A = np.array(M.tolist(), dtype=np.int64)
        witness = next(k for k in range(1, 18) if (np.linalg.matrix_power(A, k) > 0).all())
        lam = max(abs(np.linalg.eigvals(A.astype(float))))
        print(f"n={n} counted==closed form: {counted == M}  witness={witness}  lambda={lam:.12f}")


def pf_census_bruteforce(n: int = 2, B: float = 1.7) -> list:
    """All n x n non-negative integer PF matrices with spectral radius <= B,
    searched over entry sums up to ceil(B**3)."""
    cap = math.ceil(B ** 3)
    out = []
    for entries in itertools.product(range(cap + 1), repeat=n * n):
        if sum(entries) > cap or sum(entries) == 0:
            continue
        A = np.array(entries, dtype=np.int64).reshape(n, n)
        if not any((np.linalg.matrix_power(A, k) > 0).all() for k in range(1, n * n - 2 * n + 3)):
            continue
        if max(abs(np.linalg.eigvals(A.astype(float)))) <= B + 1e-12:
            out.append(tuple(tuple(int(x) for x in r) for r in A))
    return sorted(out)


def lifted_traces() -> None:
    """Trace of the lifted matrix equals the number of lifted edges e^s whose
    image passes over e^s.  For f_n no image contains its own edge, so the
    trace vanishes on both sheets."""
    for n in range(6):
        w = beta_words(n)
        own = [e for e, img in w.items() if e in img]
        print(f"n={n} edges whose image meets themselves: {own}")


if __name__ == "__main__":
    worked_example()
    beta_family()
    print("pf_census(2, 1.7) brute force:", pf_census_bruteforce())
    print("pf_census(2, 1) brute force:", pf_census_bruteforce(2, 1.0))
    lifted_traces()
