"""Exact integral lattices.

A lattice is a free Z-module together with a symmetric integer Gram matrix.
Everything here works on plain Python integers so values never overflow;
numpy arrays are accepted as input and converted eagerly.

Matrices are represented as lists of lists (mutable, internal) or tuples of
tuples (frozen, inside :class:`Lattice`).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .decimal_text import from_decimal, to_decimal
from .errors import DomainError

__all__ = [
    "Lattice",
    "Signature",
    "DiscriminantGroup",
    "determinant",
    "smith_normal_form",
    "hermite_normal_form",
    "integer_kernel",
    "standard_lattice",
    "twist",
    "direct_sum",
    "signature",
    "discriminant_group",
    "orthogonal_complement",
    "divisibility",
    "primitive_scale",
    "is_primitive",
    "E8_GRAM",
]


def _as_int(x) -> int:
    try:
        return operator.index(x)
    except TypeError:
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"expected an integer, got {x!r}") from None


def _int_matrix(rows) -> list[list[int]]:
    return [[_as_int(x) for x in row] for row in rows]


def _int_vector(v) -> list[int]:
    return [_as_int(x) for x in v]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def _transpose(a):
    return [list(col) for col in zip(*a)]


@dataclass(frozen=True)
class Signature:
    """Inertia of a real symmetric form: (positive, negative, null)."""

    positive: int
    negative: int
    null: int = 0

    def __iter__(self):
        return iter((self.positive, self.negative, self.null))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.null)


@dataclass(frozen=True)
class DiscriminantGroup:
    """Finite abelian group Z/d1 x ... x Z/dr with d1 | d2 | ... | dr, di >= 2."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(_as_int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if any(d < 2 for d in factors):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError("invariant factors must form a divisibility chain")

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __len__(self):
        return len(self.invariant_factors)

    def as_list(self) -> list[int]:
        return list(self.invariant_factors)


@dataclass(frozen=True)
class Lattice:
    """A free Z-module of finite rank with a symmetric integer Gram matrix.

    The Gram matrix may be degenerate; operations that need nondegeneracy
    check it themselves.
    """

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in _int_matrix(self.gram))
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", rows)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return determinant(self.gram)

    def is_nondegenerate(self) -> bool:
        return self.det() != 0

    def require_nondegenerate(self) -> None:
        if not self.is_nondegenerate():
            raise DomainError("lattice is degenerate (det = 0)")

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        x, y = _int_vector(x), _int_vector(y)
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError(f"vectors must have length {self.rank}")
        g = self.gram
        return sum(x[i] * g[i][j] * y[j]
                   for i in range(self.rank) if x[i]
                   for j in range(self.rank) if y[j])

    def square(self, x: Sequence[int]) -> int:
        return self.pair(x, x)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def to_json(self) -> list[list[str]]:
        """Row-major Gram with entries as decimal strings."""
        return [[to_decimal(x) for x in row] for row in self.gram]

    @classmethod
    def from_json(cls, rows) -> "Lattice":
        return cls([[from_decimal(x) if isinstance(x, str) else x for x in row]
                    for row in rows])

    def __repr__(self):
        return f"Lattice(rank={self.rank}, gram={[list(r) for r in self.gram]})"


# ---------------------------------------------------------------------------
# exact integer linear algebra


def determinant(matrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    a = _int_matrix(matrix)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(matrix):
    """Smith normal form with unimodular transforms.

    Args:
        matrix: an n x m integer matrix M.

    Returns:
        ``(U, D, V)`` with ``U @ M @ V == D``, U (n x n) and V (m x m) of
        determinant +-1, D diagonal with nonnegative entries d1 | d2 | ...
        (trailing zeros last).

    Pivoting takes the nonzero entry of smallest absolute value in the
    remaining block; ties go to the lowest (row, column) index.
    """
    a = _int_matrix(matrix)
    n = len(a)
    m = len(a[0]) if n else 0
    U = _identity(n)
    V = _identity(m)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(n, m)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, m):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, n)
                        if any(a[i][j] % p for j in range(t + 1, m))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        if a[t][t] == 0:
            break
    return U, a, V


def hermite_normal_form(matrix):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ A == H``, U unimodular, H in row echelon
    form with positive pivots and entries above each pivot reduced into
    ``[0, pivot)``. Zero rows of H come last.
    """
    a = _int_matrix(matrix)
    n = len(a)
    m = len(a[0]) if n else 0
    U = _identity(n)
    r = 0
    for c in range(m):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if a[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(a[i][c]), i))
            a[r], a[piv] = a[piv], a[r]
            U[r], U[piv] = U[piv], U[r]
            done = True
            for i in range(r + 1, n):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    done = done and a[i][c] == 0
            if done:
                break
        if not any(a[i][c] for i in range(r, n)):
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            U[r] = [-x for x in U[r]]
        p = a[r][c]
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return a, U


def integer_kernel(matrix) -> list[list[int]]:
    """Basis of the left kernel {x in Z^n : x @ A = 0} of an n x m matrix.

    The result is saturated (a kernel of a map of free modules) and returned
    in Hermite normal form.
    """
    a = _int_matrix(matrix)
    n = len(a)
    if n == 0:
        return []
    if not a[0]:
        return _identity(n)
    H, U = hermite_normal_form(a)
    rows = [U[i] for i in range(n) if not any(H[i])]
    if not rows:
        return []
    return hermite_normal_form(rows)[0]


# ---------------------------------------------------------------------------
# constructors

# Cartan matrix of E8 (Bourbaki labelling), positive definite, det 1.
_E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
E8_GRAM = tuple(
    tuple(2 if i == j else (-1 if (i, j) in _E8_EDGES or (j, i) in _E8_EDGES else 0)
          for j in range(8))
    for i in range(8)
)


def twist(lattice: Lattice, n: int) -> Lattice:
    """L(n): the Gram matrix scaled by a nonzero integer."""
    n = _as_int(n)
    if n == 0:
        raise DomainError("twist factor must be nonzero")
    return Lattice([[n * x for x in row] for row in lattice.gram])


def direct_sum(*lattices: Lattice) -> Lattice:
    """Orthogonal direct sum (block diagonal Gram)."""
    size = sum(L.rank for L in lattices)
    g = [[0] * size for _ in range(size)]
    off = 0
    for L in lattices:
        for i, row in enumerate(L.gram):
            g[off + i][off:off + L.rank] = row
        off += L.rank
    return Lattice(g)


def _mukai_ambient(h2: Lattice) -> Lattice:
    # coordinates (r, x_1..x_b, s) with <(r,x,s),(r',x',s')> = x.x' - r s' - r' s
    n = h2.rank + 2
    g = [[0] * n for _ in range(n)]
    for i, row in enumerate(h2.gram):
        g[i + 1][1:n - 1] = row
    g[0][n - 1] = g[n - 1][0] = -1
    return Lattice(g)


def standard_lattice(name: str, n: int | None = None) -> Lattice:
    """Named lattices.

    ``U``, ``E8`` (positive definite), ``A1`` (the rank one lattice <n>),
    ``K3Lattice`` = E8(-1)^2 + U^3, ``TorusH2`` = U^3, and the Mukai lattices
    ``MukaiK3`` (rank 24) / ``MukaiAbelian`` (rank 8).

    The Mukai lattices use coordinates ``(r, x, s)`` so that the Gram matrix
    reproduces the Mukai pairing x.x' - r s' - r' s; the (r, s) block is
    U(-1), which is isometric to U.
    """
    key = name.replace("_", "").lower()
    if key == "u":
        return Lattice([[0, 1], [1, 0]])
    if key == "e8":
        return Lattice(E8_GRAM)
    if key == "a1":
        if n is None or _as_int(n) == 0:
            raise DomainError("A1(n) needs a nonzero integer n")
        return Lattice([[_as_int(n)]])
    if key in ("k3", "k3lattice"):
        e8m = twist(Lattice(E8_GRAM), -1)
        u = standard_lattice("U")
        return direct_sum(e8m, e8m, u, u, u)
    if key in ("torush2", "torus", "abelianh2"):
        u = standard_lattice("U")
        return direct_sum(u, u, u)
    if key in ("mukaik3",):
        return _mukai_ambient(standard_lattice("K3Lattice"))
    if key in ("mukaiabelian",):
        return _mukai_ambient(standard_lattice("TorusH2"))
    raise DomainError(f"unknown standard lattice {name!r}")


# ---------------------------------------------------------------------------
# invariants


def signature(lattice: Lattice) -> Signature:
    """Exact inertia by symmetric congruence diagonalization over Q."""
    a = [[Fraction(x) for x in row] for row in lattice.gram]
    n = len(a)
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                        if a[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # e_i <- e_i + e_j makes the diagonal entry 2 a_ij != 0
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            p = i
        a[k], a[p] = a[p], a[k]
        for row in a:
            row[k], row[p] = row[p], row[k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
        for i in range(k + 1, n):
            a[k][i] = a[i][k] = Fraction(0)
        k += 1
    return Signature(pos, neg, n - pos - neg)


def discriminant_group(lattice: Lattice) -> DiscriminantGroup:
    """Invariant factors of coker(Gram: Z^r -> Z^r); empty if unimodular."""
    lattice.require_nondegenerate()
    if lattice.rank == 0:
        return DiscriminantGroup(())
    _, D, _ = smith_normal_form(lattice.gram)
    diag = [D[i][i] for i in range(lattice.rank)]
    return DiscriminantGroup(tuple(d for d in diag if d > 1))


def orthogonal_complement(lattice: Lattice, vectors) -> tuple[list[list[int]], Lattice]:
    """Saturated sublattice orthogonal to ``vectors``.

    Returns ``(basis, gram)`` where the rows of ``basis`` are coordinates in
    ``lattice`` and ``gram`` is the restricted pairing.
    """
    vs = [_int_vector(v) for v in vectors]
    r = lattice.rank
    for v in vs:
        if len(v) != r:
            raise ValueError(f"vector of length {len(v)} in a rank {r} lattice")
    if not vs:
        basis = _identity(r)
        return basis, lattice
    # column j of B is Gram @ v_j; the complement is the left kernel of B
    B = _matmul([list(row) for row in lattice.gram], _transpose(vs))
    basis = integer_kernel(B)
    G = [list(row) for row in lattice.gram]
    gram = _matmul(_matmul(basis, G), _transpose(basis)) if basis else []
    return basis, Lattice(gram)


def divisibility(lattice: Lattice, v) -> int:
    """gcd of <v, x> over x in the lattice."""
    v = _int_vector(v)
    if not any(v):
        raise DomainError("divisibility of the zero vector")
    lattice.require_nondegenerate()
    out = 0
    for row in lattice.gram:
        out = gcd(out, sum(g * x for g, x in zip(row, v)))
    return out


def primitive_scale(v) -> tuple[int, list[int]]:
    """Write v = d * w with w primitive; returns ``(d, w)``."""
    v = _int_vector(v)
    d = 0
    for x in v:
        d = gcd(d, x)
    if d == 0:
        raise DomainError("the zero vector has no primitive scale")
    return d, [x // d for x in v]


def is_primitive(v) -> bool:
    return primitive_scale(v)[0] == 1
