"""Walls for v-genericity of polarizations.

For v0 > 0 the wall classes are

    W_v = {D in NS : -|v| <= D^2 < 0},   |v| = v0^2/4 (v, v) + v0^(2 + 2 eps)/2,

and H is v-generic when H.D != 0 for all D in W_v. In a hyperbolic rank two
NS lattice W_v can be infinite, but only finitely many classes have D-perp
crossing a given segment [h1, h2] of ample classes. Writing s = D.h1 and
t = D.h2, the Gram matrix of (h1, h2) is M = [[a, b], [b, c]] with
a, c, b > 0 and det M < 0, and

    D^2 = (c s^2 - 2 b s t + a t^2) / det M.

On s t <= 0 the numerator is at least c s^2 + a t^2, so -|v| <= D^2 forces
c s^2 + a t^2 <= |v| |det M|, an ellipse. The search walks the integer lines
D.h1 = s inside that ellipse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .decimal_text import to_decimal
from .errors import DomainError, UnsupportedError
from .lattice import _int_vector
from .mukai import MukaiVector, SurfaceModel, mukai_pairing

__all__ = [
    "WallSource",
    "Wall",
    "AmpleSegment",
    "GenericityStatus",
    "GenericityResult",
    "v_norm_bound",
    "enumerate_walls",
    "is_v_generic",
    "check_wall_inclusion",
    "canonical_sign",
]


class WallSource(enum.Enum):
    POSITIVE_RANK = "positive_rank"
    TORSION_FREE = "torsion_free"


def canonical_sign(d: Sequence[int]) -> tuple[int, ...]:
    """Representative of {d, -d} whose first nonzero coordinate is positive."""
    d = tuple(d)
    for x in d:
        if x:
            return d if x > 0 else tuple(-y for y in d)
    return d


@dataclass(frozen=True, order=True)
class Wall:
    d: tuple[int, ...]
    d_square: int
    source: WallSource = WallSource.POSITIVE_RANK

    def to_json(self) -> dict:
        return {"d": [to_decimal(x) for x in self.d], "d_square": to_decimal(self.d_square),
                "source": self.source.value}


@dataclass(frozen=True)
class AmpleSegment:
    h1: tuple[int, ...]
    h2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h1", tuple(_int_vector(self.h1)))
        object.__setattr__(self, "h2", tuple(_int_vector(self.h2)))

    def validate(self, surface: SurfaceModel) -> None:
        ns = surface.ns
        if len(self.h1) != surface.rho or len(self.h2) != surface.rho:
            raise DomainError("segment endpoints must live in NS")
        if ns.square(self.h1) <= 0 or ns.square(self.h2) <= 0:
            raise DomainError("segment endpoints must have positive square")
        if ns.pair(self.h1, self.h2) <= 0:
            raise DomainError("segment endpoints must lie in the same positive cone")


def v_norm_bound(v: MukaiVector, surface: SurfaceModel) -> Fraction:
    """|v| = v0^2/4 * (v, v) + v0^(2 + 2 eps) / 2, exactly."""
    if v.r <= 0:
        raise DomainError("|v| is defined only for v0 > 0")
    sq = mukai_pairing(v, v, surface)
    return Fraction(v.r ** 2 * sq, 4) + Fraction(v.r ** (2 + 2 * surface.epsilon), 2)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _check_rank(surface: SurfaceModel) -> None:
    if surface.rho > 2:
        raise UnsupportedError(f"wall enumeration needs Picard rank <= 2, got {surface.rho}")


def _dual_form(surface: SurfaceModel, h) -> tuple[int, int]:
    g = surface.ns.gram
    return (g[0][0] * h[0] + g[0][1] * h[1], g[1][0] * h[0] + g[1][1] * h[1])


def _walls_in_segment(surface: SurfaceModel, bound: Fraction, seg: AmpleSegment) -> set[tuple[int, ...]]:
    ns = surface.ns
    h1, h2 = seg.h1, seg.h2
    al, be = _dual_form(surface, h1)  # D.h1 = al * x + be * y
    g, p, q = _ext_gcd(al, be)  # p al + q be = g
    gen = (be // g, -al // g)  # primitive generator of h1-perp
    out = set()

    def keep(d):
        sq = ns.square(d)
        if sq < 0 and -bound <= sq:
            out.add(canonical_sign(d))

    if h1[0] * h2[1] - h1[1] * h2[0] == 0:
        # degenerate segment: only D with D.h1 = 0, i.e. multiples of gen
        gsq = ns.square(gen)
        j = 1
        while j * j * -gsq <= bound:
            keep((j * gen[0], j * gen[1]))
            j += 1
        return out

    a, b, c = ns.square(h1), ns.pair(h1, h2), ns.square(h2)
    delta = a * c - b * b  # < 0 on a hyperbolic plane
    cap = bound * -delta  # c s^2 + a t^2 <= cap
    if cap < 0:
        return out
    smax = isqrt(int(cap / c))
    tau = ns.pair(gen, h2)  # t changes by tau along the line D.h1 = s
    for s in range(-smax, smax + 1):
        if s % g:
            continue
        base = (p * (s // g), q * (s // g))
        t0 = ns.pair(base, h2)
        rest = cap - c * s * s
        tmax = isqrt(int(rest / a))
        lo, hi = -tmax, tmax
        if s > 0:
            hi = 0
        elif s < 0:
            lo = 0
        # t0 + j tau in [lo, hi]
        if tau > 0:
            jlo, jhi = _ceil_div(lo - t0, tau), (hi - t0) // tau
        else:
            jlo, jhi = _ceil_div(hi - t0, tau), (lo - t0) // tau
        for j in range(jlo, jhi + 1):
            d = (base[0] + j * gen[0], base[1] + j * gen[1])
            if d != (0, 0):
                keep(d)
    return out


def enumerate_walls(v: MukaiVector, surface: SurfaceModel, seg: AmpleSegment) -> list[Wall]:
    """All D in W_v, up to sign, whose hyperplane D-perp meets ``seg``.

    Meeting means sign(D.h1) * sign(D.h2) <= 0. The list is sorted by the
    canonical representative (first nonzero coordinate positive).
    """
    if v.r <= 0:
        raise DomainError("wall enumeration requires v0 > 0")
    _check_rank(surface)
    seg.validate(surface)
    if surface.rho == 1:
        return []
    bound = v_norm_bound(v, surface)
    if bound <= 0:
        return []
    ns = surface.ns
    return [Wall(d, ns.square(d)) for d in sorted(_walls_in_segment(surface, bound, seg))]


class GenericityStatus(enum.Enum):
    GENERIC = "generic"
    ON_WALL = "on_wall"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class GenericityResult:
    status: GenericityStatus
    witness: tuple[int, ...] | None = None
    reason: str | None = None

    def __bool__(self):
        return self.status is GenericityStatus.GENERIC


def is_v_generic(h: Sequence[int], v: MukaiVector, surface: SurfaceModel,
                 subsheaf_vectors: Iterable[MukaiVector] | None = None) -> GenericityResult:
    """Test whether the polarization ``h`` avoids every wall of v.

    For v0 > 0 and Picard rank <= 2 this is exact: the walls through h are
    found with the degenerate segment (h, h), and the witness returned is
    the primitive one. For v0 = 0 and Picard rank > 1 the wall set is only
    known through subsheaf vectors u = (0, u1, u2) supplied by the caller,
    each giving D = u2 v1 - v2 u1.
    """
    h = tuple(_int_vector(h))
    if len(h) != surface.rho:
        raise DomainError("polarization must live in NS")
    if surface.ns.square(h) <= 0:
        raise DomainError("polarization is not in the positive cone")
    if v.r > 0:
        if surface.rho > 2:
            return GenericityResult(GenericityStatus.UNSUPPORTED,
                                    reason=f"Picard rank {surface.rho} > 2")
        walls = enumerate_walls(v, surface, AmpleSegment(h, h))
        if not walls:
            return GenericityResult(GenericityStatus.GENERIC)
        # the smallest multiple is the primitive generator of h-perp
        w = min(walls, key=lambda w: -w.d_square)
        return GenericityResult(GenericityStatus.ON_WALL, witness=w.d)
    if v.r < 0:
        raise DomainError("Mukai vectors have v0 >= 0")
    if surface.rho == 1:
        return GenericityResult(GenericityStatus.GENERIC)
    if subsheaf_vectors is None:
        return GenericityResult(
            GenericityStatus.UNSUPPORTED,
            reason="v0 = 0 and Picard rank > 1: wall set needs subsheaf vectors")
    for u in subsheaf_vectors:
        if u.r != 0:
            raise DomainError("subsheaf vectors of a torsion sheaf have u0 = 0")
        d = tuple(u.s * a - v.s * b for a, b in zip(v.c, u.c))
        if any(d) and surface.ns.pair(h, d) == 0:
            return GenericityResult(GenericityStatus.ON_WALL, witness=canonical_sign(d))
    return GenericityResult(GenericityStatus.GENERIC)


def check_wall_inclusion(w: MukaiVector, m: int, p: int, surface: SurfaceModel,
                         seg: AmpleSegment | None = None,
                         subsheaf_vectors: Iterable[MukaiVector] | None = None) -> bool:
    """Check W_{pw} inside W_{mw} for 1 <= p <= m.

    With w0 > 0 both wall sets are enumerated over ``seg`` and compared.
    With w0 = 0 each subsheaf vector u of pw is pushed to u + (m - p) w for
    mw, and the associated divisor must scale by exactly m / p.
    """
    if not 1 <= p <= m:
        raise DomainError("need 1 <= p <= m")
    if not w.is_primitive():
        raise DomainError("w must be primitive")
    if w.r > 0:
        if seg is None:
            raise DomainError("a segment is required when w0 > 0")
        small = {x.d for x in enumerate_walls(w * p, surface, seg)}
        big = {x.d for x in enumerate_walls(w * m, surface, seg)}
        return small <= big
    pw, v = w * p, w * m
    for u in subsheaf_vectors or ():
        d_small = [u.s * a - pw.s * b for a, b in zip(pw.c, u.c)]
        u_big = u + w * (m - p)
        d_big = [u_big.s * a - v.s * b for a, b in zip(v.c, u_big.c)]
        if any(Fraction(m, p) * x != y for x, y in zip(d_small, d_big)):
            return False
    return True
