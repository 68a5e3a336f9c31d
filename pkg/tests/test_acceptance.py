"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed live) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import os
import random
import sys
import time
from math import factorial, gcd

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mukailab import (  # noqa: E402
    AmpleSegment,
    Factoriality,
    Lattice,
    ModuliClass,
    MukaiVector,
    SurfaceModel,
    beauville_lattice,
    check_wall_inclusion,
    classify,
    determinant,
    direct_sum,
    discriminant_group,
    enumerate_walls,
    fujiki_K,
    fujiki_M,
    moduli_dim,
    orthogonal_complement,
    psi_degree,
    signature,
    smith_normal_form,
    standard_lattice,
    strata_dimensions,
    v_norm_bound,
    vperp_abstract,
    vperp_explicit,
)
from mukailab.fujiki import _fact  # noqa: E402
from mukailab.lattice import _matmul  # noqa: E402
from oracles import (  # noqa: E402
    WALL_LATTICES,
    brute_force_walls,
    congruent,
    float_signature,
    invariant_factors,
    random_unimodular,
    small_mukai_vectors,
)


def invariants(L):
    return L.rank, signature(L).as_tuple(), discriminant_group(L).as_list()


def crit_1():
    _fact.cache_clear()
    t0 = time.perf_counter()
    m = fujiki_M(2, 1)
    t1 = time.perf_counter()
    k = fujiki_K(2, 1)
    t2 = time.perf_counter()
    ok = m == 945 and k == 60 and (t1 - t0) < 1e-3 and (t2 - t1) < 1e-3
    return ok, (f"fujiki_M(2,1)={m.value} in {1e6 * (t1 - t0):.0f}us, "
                f"fujiki_K(2,1)={k.value} in {1e6 * (t2 - t1):.0f}us")


def crit_2():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for m, k in itertools.product(range(1, 7), repeat=2):
        n = m * m * k + 1
        num, den = factorial(2 * n), factorial(n) * 2 ** n
        if num % den or fujiki_M(m, k) != num // den:
            bad.append(("M", m, k))
        checked += 1
        if (m, k) == (1, 1):
            continue
        n = m * m * k - 1
        num, den = factorial(2 * n) * (n + 1), factorial(n) * 2 ** n
        if num % den or fujiki_K(m, k) != num // den:
            bad.append(("K", m, k))
        checked += 1
    dt = time.perf_counter() - t0
    return not bad and dt < 1.0, (f"{checked} exact comparisons, mismatches={bad}, "
                                  f"{dt * 1e3:.1f}ms")


def crit_3():
    t0 = time.perf_counter()
    bad = []
    for k in range(1, 13):
        if invariants(vperp_abstract(k, "k3")) != (23, (3, 20, 0), [2 * k]):
            bad.append(("k3", k))
        if invariants(vperp_abstract(k, "abelian")) != (7, (3, 4, 0), [2 * k]):
            bad.append(("abelian", k))
    dt = time.perf_counter() - t0
    return not bad and dt < 1.0, f"k=1..12 both kinds, mismatches={bad}, {dt * 1e3:.1f}ms"


def crit_4():
    bad = []
    for n in range(2, 7):
        v = [1] + [0] * 22 + [1 - n]
        ref = direct_sum(standard_lattice("K3Lattice"), standard_lattice("A1", 2 - 2 * n))
        if invariants(vperp_explicit(v, kind="k3")) != invariants(ref):
            bad.append(n)
    return not bad, f"n=2..6, mismatches={bad}"


def crit_5():
    checks = []

    def check(label, cond):
        checks.append((label, bool(cond)))

    r = classify("k3", "m", 2, 1)
    check("K3 M (2,1) og10", (r.moduli_class, r.deformation_class.tag, r.dim, r.b2, r.fujiki)
          == (ModuliClass.IS_VARIETY_WITH_RESOLUTION, "og10", 10, 23, 945))
    r = classify("abelian", "k", 1, 2)
    check("Ab K (1,2) K3 surface", (r.moduli_class, r.b2) == (ModuliClass.K3_SURFACE, 22))
    r = classify("abelian", "k", 1, 1)
    check("Ab K (1,1) point", (r.moduli_class, r.dim) == (ModuliClass.POINT, 0))
    r = classify("k3", "m", 3, 0)
    check("K3 M (3,0) sym product", (r.moduli_class, r.b2)
          == (ModuliClass.SYMMETRIC_PRODUCT_NAMIKAWA, 22))
    check("dim K3 M (2,1)", moduli_dim("k3", "m", 2, 1) == 10)
    check("dim Ab K (2,1)", moduli_dim("abelian", "k", 2, 1) == 6)
    check("dim K3 M (1,k)", all(moduli_dim("k3", "m", 1, k) == 2 * k + 2 for k in range(1, 13)))
    L = beauville_lattice(classify("k3", "m", 1, 1), "k3")
    ref = direct_sum(standard_lattice("K3Lattice"), standard_lattice("A1", -2))
    check("Beauville K3 (1,1)", invariants(L) == invariants(ref))
    L = beauville_lattice(classify("abelian", "k", 1, 3), "abelian")
    check("Beauville Ab K (1,3)", invariants(L) == (7, (3, 4, 0), [6]))
    L = beauville_lattice(classify("k3", "m", 2, 1), "k3")
    check("Beauville K3 (2,1)", (L.rank, discriminant_group(L).as_list()) == (23, [2]))
    # design-decision cases
    r = classify("k3", "m", 1, 1)
    check("K3 M (1,1) b2=23 flagged", r.b2 == 23 and bool(r.notes))
    r = classify("abelian", "k", 4, 0)
    check("Ab K (4,0) sym product b2=6", (r.moduli_class, r.b2)
          == (ModuliClass.SYMMETRIC_PRODUCT_NAMIKAWA, 6))
    check("K3 (2,1) factoriality", classify("k3", "m", 2, 1).factoriality
          is Factoriality.TWO_FACTORIAL_OR_LOCALLY_FACTORIAL)

    total = 0
    errors = []
    for kind, space in (("k3", "m"), ("abelian", "m"), ("abelian", "k")):
        for m in range(1, 21):
            for k in range(-3, 21):
                try:
                    classify(kind, space, m, k)
                    total += 1
                except Exception as exc:  # totality means nothing may escape
                    errors.append((kind, space, m, k, repr(exc)))
    failed = [label for label, ok in checks if not ok]
    ok = not failed and not errors
    return ok, (f"{len(checks) - len(failed)}/{len(checks)} spot checks, failed={failed}; "
                f"totality {total} cases, {len(errors)} raised")


def crit_6():
    t0 = time.perf_counter()
    compared = 0
    mismatches = []
    for name, (gram, segments) in WALL_LATTICES.items():
        for kind in ("k3", "abelian"):
            S, vs = small_mukai_vectors(gram, kind)
            reps = {}
            for v, b in vs:
                reps.setdefault(b, v)
            for b, v in reps.items():
                for h1, h2 in segments:
                    got = [w.d for w in enumerate_walls(v, S, AmpleSegment(h1, h2))]
                    if got != brute_force_walls(gram, b, h1, h2):
                        mismatches.append((name, kind, str(b), h1, h2))
                    compared += 1
    S = SurfaceModel("k3", [[0, 1], [1, 0]], (1, 1))
    v = MukaiVector(2, (0, 0), -1)
    n14 = len(enumerate_walls(v, S, AmpleSegment((1, 12), (12, 1))))
    dt = time.perf_counter() - t0
    ok = not mismatches and n14 == 14 and v_norm_bound(v, S) == 12 and dt < 5.0
    return ok, (f"{compared} (lattice, |v|, segment) instances vs box scan, "
                f"mismatches={len(mismatches)}; U |v|=12 gives {n14} classes; {dt:.2f}s")


RANK2 = [[[0, 1], [1, 0]], [[2, 0], [0, -2]], [[2, 0], [0, -4]], [[2, 1], [1, -2]],
         [[4, 0], [0, -2]], [[2, 3], [3, 2]], [[0, 3], [3, 2]]]


def _random_segment(gram, rng):
    L = Lattice(gram)
    pts = [p for p in itertools.product(range(-6, 7), repeat=2) if L.square(p) > 0]
    while True:
        h1, h2 = rng.choice(pts), rng.choice(pts)
        if L.pair(h1, h2) > 0:
            return h1, h2


def crit_7():
    rng = random.Random(20260)
    counterexamples = []
    nonempty = strict = 0
    for _ in range(100):
        gram = rng.choice(RANK2)
        h1, h2 = _random_segment(gram, rng)
        S = SurfaceModel(rng.choice(["k3", "abelian"]), gram, h1)
        while True:
            w = MukaiVector(rng.randint(1, 2), (rng.randint(-3, 3), rng.randint(-3, 3)),
                            rng.randint(-3, 3))
            if w.is_primitive():
                break
        m = rng.randint(1, 3)
        p = rng.randint(1, m)
        seg = AmpleSegment(h1, h2)
        if not check_wall_inclusion(w, m, p, S, seg):
            counterexamples.append((gram, h1, h2, w, m, p))
        small = enumerate_walls(w * p, S, seg)
        big = enumerate_walls(w * m, S, seg)
        nonempty += bool(small)
        strict += len(big) > len(small)
    return not counterexamples, (f"100 instances, counterexamples={len(counterexamples)}, "
                                 f"{nonempty} with nonempty W_pw, {strict} strict")


def crit_8():
    bad = []
    for m in range(2, 7):
        for k in range(1, 6):
            if (m, k) == (2, 1):
                continue
            t = strata_dimensions(m, k)
            if t.max_dim > t.dim_moduli - 3:
                bad.append((m, k))
    t = strata_dimensions(2, 1)
    ok = not bad and t.min_codim == 1 and not t.bound_applies
    return ok, f"bound holds on 29 cases (failures={bad}); (2,1) min codim {t.min_codim}"


def crit_9():
    a = psi_degree(2, 1, "k3")
    b = psi_degree(2, 1, "abelian")
    bad = [(m, k) for m in range(1, 7) for k in range(1, 6)
           if psi_degree(m, k, "abelian") * (k * m * m) ** 4 != psi_degree(m, k, "k3")]
    ok = a == 1048576 and b == 4096 and not bad
    return ok, f"K3 (2,1)={a}, Abelian (2,1)={b}, gap identity failures on 6x5 grid={bad}"


_UU = direct_sum(standard_lattice("U"), standard_lattice("U"))
_BOX = np.array(list(itertools.product(range(-10, 11), repeat=4)), dtype=np.int64)


def _snf_ok(M):
    U, D, V = smith_normal_form(M)
    if abs(determinant(U)) != 1 or abs(determinant(V)) != 1:
        return False
    if _matmul(_matmul(U, M), V) != D:
        return False
    n, m = len(M), len(M[0])
    if any(D[i][j] for i in range(n) for j in range(m) if i != j):
        return False
    nz = [D[i][i] for i in range(min(n, m)) if D[i][i]]
    chain = all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return chain and nz == invariant_factors(M)


def _signature_ok(gram, rng):
    sig = signature(Lattice(gram))
    if sig.as_tuple() != float_signature(gram):
        return False
    return all(signature(Lattice(congruent(gram, random_unimodular(len(gram), rng)))) == sig
               for _ in range(50))


def _complement_ok(v):
    basis, _ = orthogonal_complement(_UU, [v])
    B = np.array(basis, dtype=np.int64)
    sols = _BOX[_BOX @ (np.array(_UU.gram) @ np.array(v)) == 0]
    for cols in itertools.combinations(range(4), 3):
        sub = B[:, list(cols)].astype(float)
        if abs(np.linalg.det(sub)) > 0.5:
            break
    coef = sols[:, list(cols)].astype(float) @ np.linalg.inv(sub)
    rounded = np.rint(coef).astype(np.int64)
    return bool(np.abs(coef - rounded).max() < 1e-6 and (rounded @ B == sols).all())


def crit_10():
    rng = random.Random(42)
    t0 = time.perf_counter()
    fails = {"snf": 0, "signature": 0, "complement": 0}
    for _ in range(80):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        fails["snf"] += not _snf_ok(M)
    for _ in range(70):
        n = rng.randint(1, 6)
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                g[i][j] = g[j][i] = rng.randint(-5, 5)
        fails["signature"] += not _signature_ok(g, rng)
    for _ in range(50):
        v = [0, 0, 0, 0]
        while not any(v):
            v = [rng.randint(-6, 6) for _ in range(4)]
        v = [x // gcd(*v) for x in v]
        fails["complement"] += not _complement_ok(v)
    dt = time.perf_counter() - t0
    ok = not any(fails.values()) and dt < 30
    return ok, f"200 instances (80 SNF, 70 signature x50 congruences, 50 complements), failures={fails}, {dt:.1f}s"


CRITERIA = {1: crit_1, 2: crit_2, 3: crit_3, 4: crit_4, 5: crit_5,
            6: crit_6, 7: crit_7, 8: crit_8, 9: crit_9, 10: crit_10}


def report(n):
    ok, detail = CRITERIA[n]()
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = report(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
