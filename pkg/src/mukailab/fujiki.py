"""Fujiki constants, covering degrees and strata dimensions.

All arithmetic is on Python integers and :class:`fractions.Fraction`; every
quotient is checked to be integral rather than assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError
from .lattice import _as_int
from .mukai import SurfaceKind

__all__ = [
    "Space",
    "FujikiValue",
    "StratumCase",
    "StratumRow",
    "StratumTable",
    "fujiki_M",
    "fujiki_K",
    "fujiki_known",
    "psi_degree",
    "lambda_scaling",
    "strata_dimensions",
]


class Space(enum.Enum):
    M = "m"
    K = "k"

    @classmethod
    def coerce(cls, value) -> "Space":
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        key = {"mv": "m", "kv": "k"}.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown moduli space {value!r}") from None


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return factorial(n)


def _exact(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return q.numerator


@dataclass(frozen=True)
class FujikiValue:
    value: int
    space: Space
    m: int
    k: int
    note: str | None = field(default=None, compare=False)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, FujikiValue):
            return (self.value, self.space, self.m, self.k) == (other.value, other.space, other.m, other.k)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.space, self.m, self.k))


def _check_mk(m, k):
    m, k = _as_int(m), _as_int(k)
    if m < 1 or k < 1:
        raise DomainError("m and k must be positive")
    return m, k


def fujiki_M(m: int, k: int) -> FujikiValue:
    """(2 m^2 k + 2)! / ((m^2 k + 1)! 2^(m^2 k + 1))."""
    m, k = _check_mk(m, k)
    n = m * m * k + 1
    value = _exact(Fraction(_fact(2 * n), _fact(n) * 2 ** n))
    return FujikiValue(value, Space.M, m, k)


def fujiki_K(m: int, k: int) -> FujikiValue:
    """(2 m^2 k - 2)! m^2 k / ((m^2 k - 1)! 2^(m^2 k - 1)).

    Undefined for (1, 1), where K_v is a point. At (1, 2) the formula is
    evaluated (giving 2, the Kum^1 value) but K_v is a K3 surface whose
    intersection form has Fujiki constant 1; the result carries a note.
    """
    m, k = _check_mk(m, k)
    if (m, k) == (1, 1):
        raise DomainError("(m, k) = (1, 1): K_v is a point")
    n = m * m * k - 1
    value = _exact(Fraction(_fact(2 * n) * (n + 1), _fact(n) * 2 ** n))
    note = None
    if (m, k) == (1, 2):
        note = ("K_v is a K3 surface here; its own Fujiki constant is 1, the value "
                "is the formula evaluation")
    return FujikiValue(value, Space.K, m, k, note)


def fujiki_known(family: str, n: int) -> int:
    """Fujiki constants of Hilb^n of a K3 and of the generalized Kummer Kum^n.

    Hilb^n: (2n)! / (n! 2^n);  Kum^n: (2n)! (n + 1) / (n! 2^n).
    """
    n = _as_int(n)
    if n < 1:
        raise DomainError("n must be positive")
    key = family.lower().replace("_", "")
    base = Fraction(_fact(2 * n), _fact(n) * 2 ** n)
    if key in ("hilb", "hilbn"):
        return _exact(base)
    if key in ("kum", "kumn"):
        return _exact(base * (n + 1))
    raise DomainError(f"unknown family {family!r}")


def psi_degree(m: int, k: int, kind) -> int:
    """Degree of the tensor-power map between relative Jacobians.

    With g = k m^2 + 1 this is (g - 1)^(2g) on a K3 surface and
    (g - 1)^(2g - 4) on an Abelian surface.
    """
    m, k = _check_mk(m, k)
    kind = SurfaceKind.coerce(kind)
    g = k * m * m + 1
    return (g - 1) ** (2 * g if kind is SurfaceKind.K3 else 2 * g - 4)


def lambda_scaling(m: int, k: int) -> int:
    """The factor k m^2 (= g - 1) relating the two pulled-back classes."""
    m, k = _check_mk(m, k)
    g = k * m * m + 1
    factor = k * m * m
    assert factor == g - 1
    return factor


class StratumCase(enum.Enum):
    V1 = "v1"  # trivial extensions
    V2 = "v2"  # non-split, Q not a summand of K
    V3 = "v3"  # non-split, Q a summand of K (dimension is an upper bound)


@dataclass(frozen=True)
class StratumRow:
    i: int
    case: StratumCase
    dim: int
    codim: int
    upper_bound: bool

    def to_json(self) -> dict:
        return {"i": str(self.i), "case": self.case.value, "dim": str(self.dim),
                "codim": str(self.codim), "upper_bound": self.upper_bound}


@dataclass(frozen=True)
class StratumTable:
    m: int
    k: int
    dim_moduli: int
    rows: tuple[StratumRow, ...]

    @property
    def max_dim(self) -> int:
        return max(r.dim for r in self.rows)

    @property
    def min_codim(self) -> int:
        return min(r.codim for r in self.rows)

    @property
    def bound_applies(self) -> bool:
        return (self.m, self.k) != (2, 1)

    def satisfies_bound(self) -> bool:
        """max dim <= dim M_v - 3."""
        return self.max_dim <= self.dim_moduli - 3

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "k": str(self.k),
            "dim_moduli": str(self.dim_moduli),
            "max_dim": str(self.max_dim),
            "min_codim": str(self.min_codim),
            "bound_applies": self.bound_applies,
            "satisfies_bound": self.satisfies_bound(),
            "rows": [r.to_json() for r in self.rows],
        }


def strata_dimensions(m: int, k: int) -> StratumTable:
    """Dimensions of the loci of strictly semistable sheaves with vector m w.

    For each split Q (vector i w) of K (vector (m - i) w):

        V1 = 2k(m-i)^2 + 2 + 2k i^2 + 2
        V2 = V1 + 2k(m-i)i - 1
        V3 <= 2k(m-i)^2 + 2 + 2k i(m-i) + 2(m-i) - 1

    measured against dim M_v = 2 m^2 k + 2. For (m, k) != (2, 1) every row
    must have codimension at least 3; (2, 1) is tabulated without the check.
    """
    m, k = _as_int(m), _as_int(k)
    if m < 2:
        raise DomainError("strata are defined for m >= 2")
    if k < 1:
        raise DomainError("k must be positive")
    dim_m = 2 * m * m * k + 2
    rows = []
    for i in range(1, m):
        j = m - i
        v1 = 2 * k * j * j + 2 + 2 * k * i * i + 2
        v2 = v1 + 2 * k * j * i - 1
        v3 = 2 * k * j * j + 2 + 2 * k * i * j + 2 * j - 1
        rows.append(StratumRow(i, StratumCase.V1, v1, dim_m - v1, False))
        rows.append(StratumRow(i, StratumCase.V2, v2, dim_m - v2, False))
        rows.append(StratumRow(i, StratumCase.V3, v3, dim_m - v3, True))
    table = StratumTable(m, k, dim_m, tuple(rows))
    if table.bound_applies and not table.satisfies_bound():
        raise ArithmeticError(f"codimension bound fails at (m, k) = ({m}, {k})")
    return table
