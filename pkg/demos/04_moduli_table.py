"""
The moduli table
================

Moduli spaces of sheaves with Mukai vector v = m w, w primitive with
w^2 = 2k, sorted by (m, k).
"""

from mukailab import beauville_lattice, classify, discriminant_group, signature

header = f"{'kind':8} {'space':5} {'m':>2} {'k':>3}  {'class':40} {'defo':8} {'dim':>4} {'b2':>4}"
print(header)
print("-" * len(header))
for kind, space in [("k3", "m"), ("abelian", "k"), ("abelian", "m")]:
    for m, k in [(1, -1), (1, 0), (3, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]:
        r = classify(kind, space, m, k)
        b2 = "?" if r.b2 is None else r.b2
        print(f"{kind:8} {space:5} {m:>2} {k:>3}  {r.moduli_class.value:40} "
              f"{r.deformation_class.tag:8} {r.dim:>4} {b2:>4}")

# O'Grady's ten dimensional example
r = classify("k3", "m", 2, 1)
L = beauville_lattice(r)
print("\nOG10 case:", r.singularities.value, "/", r.factoriality.value)
print("  H^2 lattice: rank", L.rank, "signature", signature(L).as_tuple(),
      "disc", discriminant_group(L).as_list(), " Fujiki constant", r.fujiki)

# Notes travel with the report
print("\nnotes for (k3, m, 1, 1):", classify("k3", "m", 1, 1).notes)
