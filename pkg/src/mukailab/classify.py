"""Case analysis of the moduli spaces M_v and K_v attached to (m, k).

Here v = m w with w primitive and w^2 = 2k. The result depends only on the
surface kind, the space and (m, k); the surface itself is never consulted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .decimal_text import to_decimal
from .errors import DomainError
from .fujiki import Space, fujiki_K, fujiki_M, fujiki_known
from .lattice import (
    Lattice,
    _as_int,
    direct_sum,
    discriminant_group,
    signature,
    standard_lattice,
)
from .mukai import SurfaceKind, h2_lattice, vperp_abstract

__all__ = [
    "ModuliClass",
    "DeformationClass",
    "Singularities",
    "Factoriality",
    "ModuliReport",
    "classify",
    "moduli_dim",
    "beauville_lattice",
]


class ModuliClass(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    K3_SURFACE = "k3_surface"
    ABELIAN_SURFACE = "abelian_surface"
    ABELIAN_SURFACE_TIMES_DUAL = "abelian_surface_times_dual"
    SYMMETRIC_PRODUCT_NAMIKAWA = "symmetric_product_namikawa"
    SYMMETRIC_PRODUCT = "symmetric_product"
    IHS_MANIFOLD = "ihs_manifold"
    IS_VARIETY_WITH_RESOLUTION = "is_variety_with_resolution"
    IS_VARIETY_TERMINAL_LOCALLY_FACTORIAL = "is_variety_terminal_locally_factorial"
    ALBANESE_FIBRATION = "albanese_fibration"


# classes that carry a Beauville(-Namikawa) form computed from v-perp
_SYMPLECTIC = {
    ModuliClass.IHS_MANIFOLD,
    ModuliClass.IS_VARIETY_WITH_RESOLUTION,
    ModuliClass.IS_VARIETY_TERMINAL_LOCALLY_FACTORIAL,
}


@dataclass(frozen=True)
class DeformationClass:
    family: str  # "hilb", "kum", "og10", "og6" or "none"
    n: int | None = None

    @property
    def tag(self) -> str:
        return f"{self.family}_{self.n}" if self.n is not None else self.family


NO_DEFORMATION_CLASS = DeformationClass("none")


class Singularities(enum.Enum):
    SMOOTH = "smooth"
    CANONICAL_NON_TERMINAL = "canonical_non_terminal"
    TERMINAL = "terminal"


class Factoriality(enum.Enum):
    LOCALLY_FACTORIAL = "locally_factorial"
    TWO_FACTORIAL_OR_LOCALLY_FACTORIAL = "two_factorial_or_locally_factorial"
    TWO_FACTORIAL = "two_factorial"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class ModuliReport:
    kind: SurfaceKind
    space: Space
    m: int
    k: int
    moduli_class: ModuliClass
    deformation_class: DeformationClass
    dim: int
    b2: int | None
    singularities: Singularities
    factoriality: Factoriality
    beauville_gram: Lattice | None = None
    fujiki: int | None = None
    notes: tuple[str, ...] = field(default=())

    def to_json(self, include_gram: bool = True) -> dict:
        out = {
            "kind": self.kind.value,
            "space": self.space.value,
            "m": str(self.m),
            "k": str(self.k),
            "class": self.moduli_class.value,
            "deformation_class": self.deformation_class.tag,
            "dim": str(self.dim),
            "b2": None if self.b2 is None else str(self.b2),
            "singularities": self.singularities.value,
            "factoriality": self.factoriality.value,
            "beauville": None,
            "fujiki": None if self.fujiki is None else to_decimal(self.fujiki),
            "notes": list(self.notes),
        }
        if self.beauville_gram is not None:
            L = self.beauville_gram
            out["beauville"] = {
                "rank": str(L.rank),
                "signature": [str(x) for x in signature(L)],
                "discriminant": [str(d) for d in discriminant_group(L).invariant_factors],
            }
            if include_gram:
                out["beauville"]["gram"] = L.to_json()
        return out


def _report(kind, space, m, k, cls, dim, b2, sing=Singularities.SMOOTH,
            fact=Factoriality.NOT_APPLICABLE, defo=NO_DEFORMATION_CLASS,
            fujiki=None, notes=()):
    gram = None
    if cls in _SYMPLECTIC and (kind, space) in ((SurfaceKind.K3, Space.M),
                                                (SurfaceKind.ABELIAN, Space.K)):
        gram = vperp_abstract(k, kind)
    return ModuliReport(kind, space, m, k, cls, defo, dim, b2, sing, fact,
                        gram, fujiki, tuple(notes))


_B2_K3_1_1_NOTE = ("b2 = 23 as for Hilb^2; a rank 22 / signature (3,19) value "
                   "sometimes quoted for k = 1 is inconsistent with that deformation class")


def _classify_k3(m, k):
    K3, M = SurfaceKind.K3, Space.M
    if k < -1:
        return _report(K3, M, m, k, ModuliClass.EMPTY, 0, 0)
    if k == -1:
        return _report(K3, M, m, k, ModuliClass.POINT, 0, 0)
    if k == 0:
        if m == 1:
            return _report(K3, M, m, k, ModuliClass.K3_SURFACE, 2, 22,
                           fact=Factoriality.LOCALLY_FACTORIAL, fujiki=fujiki_known("hilb", 1))
        return _report(K3, M, m, k, ModuliClass.SYMMETRIC_PRODUCT_NAMIKAWA, 2 * m, 22,
                       sing=Singularities.CANONICAL_NON_TERMINAL)
    dim = 2 * m * m * k + 2
    fuj = fujiki_M(m, k).value
    if m == 1:
        notes = (_B2_K3_1_1_NOTE,) if k == 1 else ()
        return _report(K3, M, m, k, ModuliClass.IHS_MANIFOLD, dim, 23,
                       fact=Factoriality.LOCALLY_FACTORIAL,
                       defo=DeformationClass("hilb", k + 1), fujiki=fuj, notes=notes)
    if (m, k) == (2, 1):
        return _report(K3, M, m, k, ModuliClass.IS_VARIETY_WITH_RESOLUTION, dim, 23,
                       sing=Singularities.CANONICAL_NON_TERMINAL,
                       fact=Factoriality.TWO_FACTORIAL_OR_LOCALLY_FACTORIAL,
                       defo=DeformationClass("og10"), fujiki=fuj)
    return _report(K3, M, m, k, ModuliClass.IS_VARIETY_TERMINAL_LOCALLY_FACTORIAL, dim, 23,
                   sing=Singularities.TERMINAL, fact=Factoriality.LOCALLY_FACTORIAL,
                   fujiki=fuj)


def _classify_abelian_k(m, k):
    A, K = SurfaceKind.ABELIAN, Space.K
    if k < 0:
        return _report(A, K, m, k, ModuliClass.EMPTY, 0, 0)
    if k == 0:
        if m == 1:
            return _report(A, K, m, k, ModuliClass.POINT, 0, 0)
        return _report(A, K, m, k, ModuliClass.SYMMETRIC_PRODUCT_NAMIKAWA, 2 * m - 2, 6,
                       sing=Singularities.CANONICAL_NON_TERMINAL)
    dim = 2 * m * m * k - 2
    if (m, k) == (1, 1):
        return _report(A, K, m, k, ModuliClass.POINT, 0, 0)
    if (m, k) == (1, 2):
        return _report(A, K, m, k, ModuliClass.K3_SURFACE, 2, 22,
                       fact=Factoriality.LOCALLY_FACTORIAL, fujiki=fujiki_known("hilb", 1),
                       notes=("Kummer K3 surface; v-perp embeds saturated in H^2 "
                              "with corank 15",))
    fuj = fujiki_K(m, k).value
    if m == 1:
        return _report(A, K, m, k, ModuliClass.IHS_MANIFOLD, dim, 7,
                       fact=Factoriality.LOCALLY_FACTORIAL,
                       defo=DeformationClass("kum", k - 1), fujiki=fuj)
    if (m, k) == (2, 1):
        return _report(A, K, m, k, ModuliClass.IS_VARIETY_WITH_RESOLUTION, dim, 7,
                       sing=Singularities.CANONICAL_NON_TERMINAL,
                       fact=Factoriality.TWO_FACTORIAL,
                       defo=DeformationClass("og6"), fujiki=fuj)
    return _report(A, K, m, k, ModuliClass.IS_VARIETY_TERMINAL_LOCALLY_FACTORIAL, dim, 7,
                   sing=Singularities.TERMINAL, fact=Factoriality.LOCALLY_FACTORIAL,
                   fujiki=fuj)


def _classify_abelian_m(m, k):
    A, M = SurfaceKind.ABELIAN, Space.M
    if k < 0:
        return _report(A, M, m, k, ModuliClass.EMPTY, 0, 0)
    if k == 0:
        if m == 1:
            return _report(A, M, m, k, ModuliClass.ABELIAN_SURFACE, 2, 6)
        return _report(A, M, m, k, ModuliClass.SYMMETRIC_PRODUCT, 2 * m, None,
                       sing=Singularities.CANONICAL_NON_TERMINAL)
    dim = 2 * m * m * k + 2
    if (m, k) == (1, 1):
        return _report(A, M, m, k, ModuliClass.ABELIAN_SURFACE_TIMES_DUAL, dim, 28)
    if m == 1:
        sing = Singularities.SMOOTH
    elif (m, k) == (2, 1):
        sing = Singularities.CANONICAL_NON_TERMINAL
    else:
        sing = Singularities.TERMINAL
    notes = ()
    if (m, k) == (1, 2):
        notes = ("b2 = 7 + 28 assumes H^2(M_v) = v-perp + H^2(S x S^); the fibre "
                 "K_v is a Kummer K3 here",)
    return _report(A, M, m, k, ModuliClass.ALBANESE_FIBRATION, dim, 7 + 28,
                   sing=sing, notes=notes)


def classify(kind, space, m: int, k: int) -> ModuliReport:
    """Classify M_v or K_v for v = m w, w primitive, w^2 = 2k.

    K_v exists only over Abelian surfaces.
    """
    kind = SurfaceKind.coerce(kind)
    space = Space.coerce(space)
    m, k = _as_int(m), _as_int(k)
    if m < 1:
        raise DomainError("m must be >= 1")
    if kind is SurfaceKind.K3:
        if space is Space.K:
            raise DomainError("K_v is defined only for Abelian surfaces")
        return _classify_k3(m, k)
    if space is Space.K:
        return _classify_abelian_k(m, k)
    return _classify_abelian_m(m, k)


def moduli_dim(kind, space, m: int, k: int) -> int:
    """2 m^2 k + 2 for M_v, 2 m^2 k - 2 for K_v (nonempty cases)."""
    report = classify(kind, space, m, k)
    if report.moduli_class is ModuliClass.EMPTY:
        raise DomainError("the moduli space is empty")
    return report.dim


def beauville_lattice(report: ModuliReport, surface=None) -> Lattice:
    """The lattice H^2 with its Beauville(-Namikawa) form, as v-perp.

    For Hilb^n and Kum^n reports the result is also compared, invariant by
    invariant, with H^2(S) + <delta>, delta^2 = 2 - 2n (Hilb) or -2 - 2n (Kum).
    """
    if surface is not None and SurfaceKind.coerce(surface) is not report.kind:
        raise DomainError("surface kind does not match the report")
    if report.beauville_gram is None:
        raise DomainError(f"{report.moduli_class.value} carries no Beauville form here")
    L = report.beauville_gram
    defo = report.deformation_class
    if defo.family in ("hilb", "kum"):
        n = defo.n
        delta_sq = 2 - 2 * n if defo.family == "hilb" else -2 - 2 * n
        model = direct_sum(h2_lattice(report.kind), standard_lattice("A1", delta_sq))
        if (L.rank, signature(L), discriminant_group(L)) != (
                model.rank, signature(model), discriminant_group(model)):
            raise ArithmeticError("v-perp invariants disagree with the H^2 + <delta> model")
    return L
