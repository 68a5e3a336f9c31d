"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf


def invariant_factors(matrix) -> list[int]:
    """Nonzero diagonal of the Smith form, computed by sympy."""
    M = Matrix(matrix)
    D = sympy_snf(M, domain=ZZ)
    diag = [abs(int(D[i, i])) for i in range(min(D.shape))]
    return sorted(d for d in diag if d)


def float_signature(gram) -> tuple[int, int, int]:
    """Inertia from floating eigenvalues; fine for small integer Grams."""
    g = np.array(gram, dtype=float)
    if g.size == 0:
        return (0, 0, 0)
    ev = np.linalg.eigvalsh(g)
    tol = 1e-8 * max(1.0, float(np.abs(g).max()))
    return (int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum()))


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> list[list[int]]:
    """Product of random elementary matrices and sign flips."""
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        kind = rng.random()
        if n > 1 and kind < 0.7:
            q = rng.choice([-2, -1, 1, 2])
            P[i] = [a + q * b for a, b in zip(P[i], P[j])]
        elif n > 1 and kind < 0.85:
            P[i], P[j] = P[j], P[i]
        else:
            P[i] = [-a for a in P[i]]
    return P


def congruent(gram, P):
    """P G P^T for integer matrices given as nested lists."""
    G = Matrix(gram)
    Q = Matrix(P)
    return [[int(x) for x in row] for row in (Q * G * Q.T).tolist()]


def wall_box(gram, bound: Fraction, h1, h2) -> int:
    """Coordinate box that contains every D with -bound <= D^2 < 0 crossing [h1, h2].

    From s = D.h1 and t = D.h2 with s t <= 0 one gets
    c s^2 + a t^2 <= bound |det|, which caps |s| and |t|; inverting the map
    D -> (s, t) then caps the coordinates of D. For a degenerate segment the
    box is derived from D^2 >= -bound restricted to h1-perp instead.
    """
    G = Matrix(gram)
    H = Matrix([list(h1), list(h2)]).T
    a = int((H[:, 0].T * G * H[:, 0])[0])
    c = int((H[:, 1].T * G * H[:, 1])[0])
    b = int((H[:, 0].T * G * H[:, 1])[0])
    delta = a * c - b * b
    if delta == 0:
        # D is a multiple of the primitive generator of h1-perp
        al, be = (G * H[:, 0]).T.tolist()[0]
        g = math.gcd(int(al), int(be))
        gen = (int(be) // g, -int(al) // g)
        gsq = int((Matrix(gen).T * G * Matrix(gen))[0])
        jmax = math.isqrt(int(bound / -gsq)) + 1
        return jmax * max(abs(gen[0]), abs(gen[1])) + 1
    cap = bound * -delta
    smax = math.isqrt(int(cap / c)) + 1
    tmax = math.isqrt(int(cap / a)) + 1
    inv = (G * H).T.inv()  # (s, t) = (G H)^T D
    return int(max(sum(abs(x) for x in row) for row in inv.tolist()) * max(smax, tmax)) + 2


def brute_force_walls(gram, bound: Fraction, h1, h2) -> list[tuple[int, int]]:
    """Scan a coordinate box for wall classes meeting [h1, h2], canonical sign."""
    B = wall_box(gram, bound, h1, h2)
    (p, q), (_, r) = gram
    out = set()
    for x in range(-B, B + 1):
        for y in range(-B, B + 1):
            sq = p * x * x + 2 * q * x * y + r * y * y
            if not (sq < 0 and -bound <= sq):
                continue
            s = (p * x + q * y) * h1[0] + (q * x + r * y) * h1[1]
            t = (p * x + q * y) * h2[0] + (q * x + r * y) * h2[1]
            if s * t > 0:
                continue
            d = (x, y) if (x > 0 or (x == 0 and y > 0)) else (-x, -y)
            out.add(d)
    return sorted(out)


# Fixed instances for the wall oracle: three rank-two NS lattices, five
# segments each (one degenerate), and every small Mukai vector with
# 0 < |v| <= 20 on both surface kinds.
WALL_LATTICES = {
    "U": ([[0, 1], [1, 0]],
          [((1, 1), (1, 2)), ((1, 7), (7, 1)), ((1, 3), (2, 1)),
           ((1, 12), (12, 1)), ((2, 3), (2, 3))]),
    "diag(2,-2)": ([[2, 0], [0, -2]],
                   [((1, 0), (2, 1)), ((3, 1), (3, -1)), ((5, 4), (5, -4)),
                    ((2, 1), (3, 2)), ((3, 1), (3, 1))]),
    "diag(2,-4)": ([[2, 0], [0, -4]],
                   [((1, 0), (2, 1)), ((3, 2), (3, -2)), ((5, 3), (7, -4)),
                    ((2, 1), (5, 3)), ((2, 1), (2, 1))]),
}


def small_mukai_vectors(gram, kind, max_bound=20):
    """(r, c, s) with 1 <= r <= 3, small entries and 0 < |v| <= max_bound."""
    from mukailab import MukaiVector, SurfaceModel, v_norm_bound

    ample = next(h for h, _ in WALL_LATTICES_BY_GRAM[str(gram)])
    S = SurfaceModel(kind, gram, ample)
    out = []
    for r in (1, 2, 3):
        for x in range(-2, 3):
            for y in range(-2, 3):
                for s in range(-4, 5):
                    v = MukaiVector(r, (x, y), s)
                    b = v_norm_bound(v, S)
                    if 0 < b <= max_bound:
                        out.append((v, b))
    return S, out


WALL_LATTICES_BY_GRAM = {str(g): segs for g, segs in WALL_LATTICES.values()}
