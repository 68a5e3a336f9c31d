import pytest
from hypothesis import given
from hypothesis import strategies as st

from mukailab import (
    DomainError,
    Factoriality,
    ModuliClass,
    Singularities,
    SurfaceModel,
    beauville_lattice,
    classify,
    discriminant_group,
    moduli_dim,
    signature,
)

SYMPLECTIC = {ModuliClass.IHS_MANIFOLD, ModuliClass.IS_VARIETY_WITH_RESOLUTION,
              ModuliClass.IS_VARIETY_TERMINAL_LOCALLY_FACTORIAL}
LEGAL = [("k3", "m"), ("abelian", "m"), ("abelian", "k")]


def test_og10():
    r = classify("k3", "m", 2, 1)
    assert r.moduli_class is ModuliClass.IS_VARIETY_WITH_RESOLUTION
    assert r.deformation_class.tag == "og10"
    assert (r.dim, r.b2, r.fujiki) == (10, 23, 945)
    assert r.singularities is Singularities.CANONICAL_NON_TERMINAL
    assert r.factoriality is Factoriality.TWO_FACTORIAL_OR_LOCALLY_FACTORIAL


def test_og6():
    r = classify("abelian", "k", 2, 1)
    assert r.moduli_class is ModuliClass.IS_VARIETY_WITH_RESOLUTION
    assert r.deformation_class.tag == "og6"
    assert (r.dim, r.b2, r.fujiki) == (6, 7, 60)
    assert r.factoriality is Factoriality.TWO_FACTORIAL


def test_small_cases():
    r = classify("abelian", "k", 1, 2)
    assert (r.moduli_class, r.b2, r.dim) == (ModuliClass.K3_SURFACE, 22, 2)
    r = classify("abelian", "k", 1, 1)
    assert (r.moduli_class, r.dim) == (ModuliClass.POINT, 0)
    r = classify("k3", "m", 3, 0)
    assert (r.moduli_class, r.b2) == (ModuliClass.SYMMETRIC_PRODUCT_NAMIKAWA, 22)
    assert r.beauville_gram is None and r.fujiki is None
    r = classify("abelian", "k", 3, 0)
    assert (r.moduli_class, r.b2) == (ModuliClass.SYMMETRIC_PRODUCT_NAMIKAWA, 6)
    r = classify("k3", "m", 1, 0)
    assert (r.moduli_class, r.b2) == (ModuliClass.K3_SURFACE, 22)
    assert classify("k3", "m", 4, -1).moduli_class is ModuliClass.POINT
    assert classify("k3", "m", 4, -2).moduli_class is ModuliClass.EMPTY
    assert classify("abelian", "k", 4, -1).moduli_class is ModuliClass.EMPTY
    r = classify("abelian", "m", 1, 1)
    assert (r.moduli_class, r.dim) == (ModuliClass.ABELIAN_SURFACE_TIMES_DUAL, 4)
    r = classify("abelian", "m", 3, 2)
    assert (r.dim, r.b2) == (2 * 9 * 2 + 2, 35)


def test_hilb_and_kum():
    for k in range(1, 8):
        r = classify("k3", "m", 1, k)
        assert r.moduli_class is ModuliClass.IHS_MANIFOLD
        assert r.deformation_class.tag == f"hilb_{k + 1}"
        assert (r.dim, r.b2) == (2 * k + 2, 23)
    assert classify("k3", "m", 1, 1).notes  # b2 discrepancy is flagged
    for k in range(3, 8):
        r = classify("abelian", "k", 1, k)
        assert r.deformation_class.tag == f"kum_{k - 1}"
        assert (r.dim, r.b2) == (2 * k - 2, 7)


def test_terminal_cases():
    r = classify("k3", "m", 3, 2)
    assert r.moduli_class is ModuliClass.IS_VARIETY_TERMINAL_LOCALLY_FACTORIAL
    assert (r.dim, r.b2) == (38, 23)
    assert r.singularities is Singularities.TERMINAL
    r = classify("abelian", "k", 2, 2)
    assert (r.dim, r.b2) == (14, 7)


def test_moduli_dim():
    assert moduli_dim("k3", "m", 2, 1) == 10
    assert moduli_dim("abelian", "k", 2, 1) == 6
    for k in range(1, 6):
        assert moduli_dim("k3", "m", 1, k) == 2 * k + 2
    with pytest.raises(DomainError):
        moduli_dim("k3", "m", 1, -5)


def test_errors():
    with pytest.raises(DomainError):
        classify("k3", "k", 1, 1)
    with pytest.raises(DomainError):
        classify("k3", "m", 0, 1)
    with pytest.raises(DomainError):
        classify("enriques", "m", 1, 1)


@pytest.mark.parametrize("kind, space", LEGAL)
def test_totality_and_invariants(kind, space):
    for m in range(1, 21):
        for k in range(-3, 21):
            r = classify(kind, space, m, k)
            assert r.dim >= 0 and r.dim % 2 == 0
            if r.moduli_class is ModuliClass.IHS_MANIFOLD:
                assert r.singularities is Singularities.SMOOTH
            L = r.beauville_gram
            if r.moduli_class in SYMPLECTIC and (kind, space) != ("abelian", "m"):
                assert L is not None
                assert r.b2 == L.rank
                assert signature(L).as_tuple() == (3, r.b2 - 3, 0)
                assert discriminant_group(L).as_list() == [2 * k]
                assert r.fujiki is not None and r.fujiki > 0
            else:
                assert L is None


@given(st.sampled_from(LEGAL), st.integers(1, 20), st.integers(-3, 20),
       st.integers(1, 5), st.integers(-3, 3))
def test_report_independent_of_surface(pair, m, k, a, b):
    """The report is a function of (kind, space, m, k) alone."""
    kind, space = pair
    S1 = SurfaceModel.picard_rank_one(kind, 2 * a)
    S2 = SurfaceModel(kind, [[0, 1], [1, 0]], (1, a))
    r1 = classify(S1, space, m, k)
    r2 = classify(S2, space, m, k)
    assert r1 == r2
    assert r1.to_json() == classify(kind, space, m, k).to_json()


def test_beauville_lattice():
    L = beauville_lattice(classify("k3", "m", 1, 1), "k3")
    assert (L.rank, discriminant_group(L).as_list()) == (23, [2])
    L = beauville_lattice(classify("abelian", "k", 1, 3), "abelian")
    assert (L.rank, signature(L).as_tuple(), discriminant_group(L).as_list()) == (7, (3, 4, 0), [6])
    L = beauville_lattice(classify("k3", "m", 2, 1))
    assert (L.rank, discriminant_group(L).as_list()) == (23, [2])
    for k in range(1, 10):
        beauville_lattice(classify("k3", "m", 1, k))  # Hilb comparison passes
    for k in range(3, 10):
        beauville_lattice(classify("abelian", "k", 1, k))  # Kum comparison passes
    for args in (("k3", "m", 1, -3), ("k3", "m", 1, -1), ("k3", "m", 3, 0)):
        with pytest.raises(DomainError):
            beauville_lattice(classify(*args))
    with pytest.raises(DomainError):
        beauville_lattice(classify("k3", "m", 1, 1), "abelian")


def test_beauville_forms_are_even():
    for k in range(1, 8):
        assert beauville_lattice(classify("k3", "m", 2, k)).is_even()
        assert beauville_lattice(classify("abelian", "k", 2, k)).is_even()


def test_report_json():
    js = classify("k3", "m", 2, 1).to_json()
    assert js["fujiki"] == "945" and js["b2"] == "23" and js["deformation_class"] == "og10"
    assert js["beauville"]["signature"] == ["3", "20", "0"]
    assert list(js) == ["kind", "space", "m", "k", "class", "deformation_class", "dim", "b2",
                        "singularities", "factoriality", "beauville", "fujiki", "notes"]
    assert classify("abelian", "m", 3, 0).to_json()["b2"] is None
