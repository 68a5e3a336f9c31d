"""
Fujiki constants, covering degrees and strata
=============================================

Exact big-integer evaluation, so the numbers below are never rounded.
"""

from mukailab import (
    fujiki_K,
    fujiki_known,
    fujiki_M,
    psi_degree,
    strata_dimensions,
)

print("C(M_v) at (2,1):", fujiki_M(2, 1).value)
print("C(K_v) at (2,1):", fujiki_K(2, 1).value)

# The constant depends only on the dimension
for m, k in [(1, 4), (2, 1), (3, 2)]:
    n = m * m * k + 1
    print(f"(m,k)=({m},{k}): M_v {fujiki_M(m, k).value} = Hilb^{n} {fujiki_known('hilb', n)}")

big = fujiki_M(6, 5).value
print("fujiki_M(6,5) has", len(str(big)), "digits")

# Degrees of the tensor-power maps differ by (g-1)^4
for kind in ("k3", "abelian"):
    print(f"psi degree (2,1) on {kind}:", psi_degree(2, 1, kind))

# Strictly semistable loci: codimension >= 3 except at (2,1)
for m, k in [(2, 1), (2, 2), (3, 1)]:
    t = strata_dimensions(m, k)
    print(f"\n(m,k)=({m},{k}) dim M = {t.dim_moduli}, min codim {t.min_codim}")
    for row in t.rows:
        mark = "<=" if row.upper_bound else "= "
        print(f"  i={row.i} {row.case.value}: dim {mark}{row.dim:3d}  codim {row.codim}")
