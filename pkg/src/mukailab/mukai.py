"""Mukai vectors on K3 and Abelian surfaces.

A surface is modelled numerically by its Neron-Severi lattice, an ample class
and the constant epsilon (1 for K3, 0 for Abelian). A Mukai vector is a
triple (r, c, s) with c in NS, paired by

    <(r, c, s), (r', c', s')> = c.c' - r s' - r' s.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .decimal_text import from_decimal, to_decimal
from .errors import DomainError
from .lattice import (
    Lattice,
    _as_int,
    _int_vector,
    _mukai_ambient,
    direct_sum,
    orthogonal_complement,
    primitive_scale,
    signature,
    standard_lattice,
)

__all__ = [
    "SurfaceKind",
    "SurfaceModel",
    "MukaiVector",
    "Positivity",
    "mukai_pairing",
    "mukai_from_chern",
    "is_positive_mukai_vector",
    "vperp_abstract",
    "vperp_explicit",
    "algebraic_vperp",
    "default_embedding",
    "embed_mukai_vector",
    "h2_lattice",
    "mukai_lattice",
]


class SurfaceKind(enum.Enum):
    K3 = "k3"
    ABELIAN = "abelian"

    @property
    def epsilon(self) -> int:
        return 1 if self is SurfaceKind.K3 else 0

    @classmethod
    def coerce(cls, value) -> "SurfaceKind":
        if isinstance(value, cls):
            return value
        if isinstance(value, SurfaceModel):
            return value.kind
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown surface kind {value!r}") from None


def h2_lattice(kind) -> Lattice:
    """H^2(S, Z): the K3 lattice or U^3."""
    kind = SurfaceKind.coerce(kind)
    return standard_lattice("K3Lattice" if kind is SurfaceKind.K3 else "TorusH2")


def mukai_lattice(kind) -> Lattice:
    kind = SurfaceKind.coerce(kind)
    return standard_lattice("MukaiK3" if kind is SurfaceKind.K3 else "MukaiAbelian")


def _parse(x) -> int:
    return from_decimal(x) if isinstance(x, str) else _as_int(x)


@dataclass(frozen=True)
class SurfaceModel:
    """Numerical data of a projective K3 or Abelian surface.

    ``ns`` must be hyperbolic (signature (1, rho - 1)) and ``ample`` must have
    positive square. ``embedding``, if given, is a rho x b2 integer matrix
    whose rows are the images of the NS basis in H^2(S, Z).
    """

    kind: SurfaceKind
    ns: Lattice
    ample: tuple[int, ...]
    embedding: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", SurfaceKind.coerce(self.kind))
        if not isinstance(self.ns, Lattice):
            object.__setattr__(self, "ns", Lattice(self.ns))
        object.__setattr__(self, "ample", tuple(_int_vector(self.ample)))
        rho = self.ns.rank
        if rho < 1:
            raise DomainError("NS lattice must have rank >= 1")
        if len(self.ample) != rho:
            raise DomainError(f"ample class has {len(self.ample)} coordinates, NS has rank {rho}")
        sig = signature(self.ns)
        if sig.as_tuple() != (1, rho - 1, 0):
            raise DomainError(f"NS lattice must have signature (1, {rho - 1}), got {sig.as_tuple()}")
        if self.ns.square(self.ample) <= 0:
            raise DomainError("ample class must have positive square")
        if self.embedding is not None:
            emb = tuple(tuple(_int_vector(row)) for row in self.embedding)
            object.__setattr__(self, "embedding", emb)
            _check_embedding(self.ns, emb, h2_lattice(self.kind))

    @property
    def epsilon(self) -> int:
        return self.kind.epsilon

    @property
    def rho(self) -> int:
        return self.ns.rank

    @classmethod
    def picard_rank_one(cls, kind, degree: int) -> "SurfaceModel":
        """NS = Z h with h^2 = degree (even, positive)."""
        return cls(kind, Lattice([[degree]]), (1,))

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "ns": self.ns.to_json(),
            "ample": [to_decimal(x) for x in self.ample],
        }
        if self.embedding is not None:
            out["embedding"] = [[to_decimal(x) for x in row] for row in self.embedding]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceModel":
        ns = data["ns"]
        if isinstance(ns, dict):
            ns = ns["gram"]
        return cls(data["kind"], Lattice.from_json(ns),
                   tuple(_parse(x) for x in data["ample"]),
                   embedding=data.get("embedding"))


@dataclass(frozen=True)
class MukaiVector:
    """v = (r, c, s): rank part, NS coordinates, degree-four part."""

    r: int
    c: tuple[int, ...]
    s: int

    def __post_init__(self):
        object.__setattr__(self, "r", _as_int(self.r))
        object.__setattr__(self, "c", tuple(_int_vector(self.c)))
        object.__setattr__(self, "s", _as_int(self.s))

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        if len(self.c) != len(other.c):
            raise DomainError("NS dimension mismatch")
        return MukaiVector(self.r + other.r,
                           tuple(a + b for a, b in zip(self.c, other.c)),
                           self.s + other.s)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self * -1

    def __mul__(self, n: int) -> "MukaiVector":
        n = _as_int(n)
        return MukaiVector(n * self.r, tuple(n * x for x in self.c), n * self.s)

    __rmul__ = __mul__

    def coordinates(self) -> list[int]:
        return [self.r, *self.c, self.s]

    def is_zero(self) -> bool:
        return not any(self.coordinates())

    def primitive_scale(self) -> tuple[int, "MukaiVector"]:
        d, w = primitive_scale(self.coordinates())
        return d, MukaiVector(w[0], tuple(w[1:-1]), w[-1])

    def is_primitive(self) -> bool:
        return self.primitive_scale()[0] == 1

    def square(self, surface: SurfaceModel) -> int:
        return mukai_pairing(self, self, surface)

    def to_json(self) -> dict:
        return {"r": self.r, "c": list(self.c), "s": self.s}

    @classmethod
    def from_json(cls, data: dict) -> "MukaiVector":
        return cls(_parse(data["r"]), tuple(_parse(x) for x in data["c"]), _parse(data["s"]))


def mukai_pairing(a: MukaiVector, b: MukaiVector, surface: SurfaceModel) -> int:
    rho = surface.rho
    if len(a.c) != rho or len(b.c) != rho:
        raise DomainError(f"NS dimension mismatch: expected {rho} coordinates")
    return surface.ns.pair(a.c, b.c) - a.r * b.s - a.s * b.r


def mukai_from_chern(rank: int, c1: Sequence[int], ch2: int,
                     surface: SurfaceModel) -> MukaiVector:
    """v(F) = ch(F) sqrt(td S) = (rk, c1, ch2 + epsilon * rk)."""
    rank = _as_int(rank)
    return MukaiVector(rank, tuple(c1), _as_int(ch2) + surface.epsilon * rank)


class Positivity(enum.Enum):
    YES = "yes"
    NO = "no"
    NEEDS_EFFECTIVITY_ORACLE = "needs_effectivity_oracle"


def is_positive_mukai_vector(v: MukaiVector, surface: SurfaceModel,
                             effective: Callable[[tuple[int, ...]], bool] | None = None
                             ) -> Positivity:
    """Decide whether v is a Mukai vector in the positive sense.

    v0 > 0 always qualifies; v0 = 0 needs either v1 effective or v1 = 0 and
    v2 > 0. Effectivity is decided exactly only for Picard rank one (a
    positive multiple of the ample ray); otherwise ``effective`` is consulted.
    """
    if len(v.c) != surface.rho:
        raise DomainError("NS dimension mismatch")
    if v.r > 0:
        return Positivity.YES
    if v.r < 0:
        return Positivity.NO
    if not any(v.c):
        return Positivity.YES if v.s > 0 else Positivity.NO
    if surface.rho == 1:
        return Positivity.YES if surface.ns.pair(v.c, surface.ample) > 0 else Positivity.NO
    if effective is None:
        return Positivity.NEEDS_EFFECTIVITY_ORACLE
    return Positivity.YES if effective(v.c) else Positivity.NO


def vperp_abstract(k: int, kind) -> Lattice:
    """Orthogonal complement of a primitive v with v^2 = 2k, divisibility 1.

    Such a v sits as e + k f in a hyperbolic summand of the (unimodular)
    Mukai lattice; its complement there is spanned by e - k f of square -2k,
    so v-perp = H^2(S, Z) + <-2k>.
    """
    k = _as_int(k)
    if k <= 0:
        raise DomainError("k must be positive")
    return direct_sum(h2_lattice(kind), standard_lattice("A1", -2 * k))


def _blocks(gram):
    """Split a Gram matrix into U blocks and rank-one blocks, or return None."""
    n = len(gram)
    out = []
    i = 0
    while i < n:
        others = [j for j in range(n) if j != i and gram[i][j]]
        if not others:
            out.append((i,))
            i += 1
        elif (others == [i + 1] and gram[i][i] == 0 and gram[i + 1][i + 1] == 0
              and gram[i][i + 1] == 1
              and [j for j in range(n) if j != i + 1 and gram[i + 1][j]] == [i]):
            out.append((i, i + 1))
            i += 2
        else:
            return None
    return out


def default_embedding(surface: SurfaceModel) -> tuple[tuple[int, ...], ...]:
    """Embed NS into H^2 when NS is a sum of U's and even rank-one lattices.

    Each block goes into its own hyperbolic summand (e, f) of H^2: a U block
    maps identically and <2a> maps to e + a f.
    """
    if surface.embedding is not None:
        return surface.embedding
    h2 = h2_lattice(surface.kind)
    first_u = h2.rank - 6  # the three U summands are the last six coordinates
    blocks = _blocks(surface.ns.gram)
    if blocks is None or len(blocks) > 3:
        raise DomainError("no default NS embedding; supply SurfaceModel.embedding")
    rows = [[0] * h2.rank for _ in range(surface.rho)]
    for slot, blk in enumerate(blocks):
        e = first_u + 2 * slot
        if len(blk) == 2:
            rows[blk[0]][e] = 1
            rows[blk[1]][e + 1] = 1
        else:
            d = surface.ns.gram[blk[0]][blk[0]]
            if d % 2:
                raise DomainError("odd NS class cannot embed in an even H^2")
            rows[blk[0]][e] = 1
            rows[blk[0]][e + 1] = d // 2
    emb = tuple(tuple(r) for r in rows)
    _check_embedding(surface.ns, emb, h2)
    return emb


def _check_embedding(ns: Lattice, emb, h2: Lattice) -> None:
    if len(emb) != ns.rank or any(len(row) != h2.rank for row in emb):
        raise DomainError(f"embedding must be a {ns.rank} x {h2.rank} matrix")
    for i in range(ns.rank):
        for j in range(ns.rank):
            if h2.pair(emb[i], emb[j]) != ns.gram[i][j]:
                raise DomainError("embedding does not preserve the NS pairing")


def embed_mukai_vector(v: MukaiVector, surface: SurfaceModel) -> list[int]:
    """Coordinates of v in the full Mukai lattice (r, H^2 coordinates, s)."""
    emb = default_embedding(surface)
    if len(v.c) != surface.rho:
        raise DomainError("NS dimension mismatch")
    b2 = len(emb[0])
    x = [sum(v.c[i] * emb[i][j] for i in range(surface.rho)) for j in range(b2)]
    return [v.r, *x, v.s]


def vperp_explicit(v, surface: SurfaceModel | None = None, *, kind=None) -> Lattice:
    """v-perp computed as an honest kernel inside the full Mukai lattice.

    ``v`` is either a coordinate vector of length 24 (K3) / 8 (Abelian) or a
    :class:`MukaiVector` over ``surface``, embedded via its NS embedding.
    """
    if isinstance(v, MukaiVector):
        if surface is None:
            raise DomainError("a MukaiVector needs its SurfaceModel")
        coords = embed_mukai_vector(v, surface)
        kind = surface.kind
    else:
        coords = _int_vector(v)
        if kind is None and surface is not None:
            kind = surface.kind
        if kind is None:
            kind = {24: SurfaceKind.K3, 8: SurfaceKind.ABELIAN}.get(len(coords))
            if kind is None:
                raise DomainError("coordinate vector must have length 24 or 8")
    L = mukai_lattice(kind)
    if len(coords) != L.rank:
        raise DomainError(f"expected {L.rank} coordinates, got {len(coords)}")
    if not any(coords):
        raise DomainError("v must be nonzero")
    d, _ = primitive_scale(coords)
    if d != 1:
        raise DomainError(f"v is imprimitive (v = {d} * w); pass the primitive part")
    return orthogonal_complement(L, [coords])[1]


def algebraic_vperp(v: MukaiVector, surface: SurfaceModel, return_basis: bool = False):
    """v-perp inside the algebraic Mukai lattice Z + NS + Z."""
    if len(v.c) != surface.rho:
        raise DomainError("NS dimension mismatch")
    if v.is_zero():
        raise DomainError("v must be nonzero")
    basis, gram = orthogonal_complement(_mukai_ambient(surface.ns), [v.coordinates()])
    return (basis, gram) if return_basis else gram
