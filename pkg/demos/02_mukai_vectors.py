"""
Mukai vectors and their orthogonal lattices
===========================================

A Mukai vector v = (r, c, s) lives in the even cohomology of a K3 or Abelian
surface. Its orthogonal complement carries the lattice that later shows up
as the second cohomology of the moduli space.
"""

from mukailab import (
    MukaiVector,
    SurfaceModel,
    direct_sum,
    discriminant_group,
    mukai_from_chern,
    signature,
    standard_lattice,
    vperp_abstract,
    vperp_explicit,
)


def describe(L):
    return f"rank {L.rank}, signature {signature(L).as_tuple()}, disc {discriminant_group(L).as_list()}"


# A K3 surface of Picard rank one with h^2 = 6
S = SurfaceModel.picard_rank_one("k3", 6)

# The structure sheaf has Mukai vector (1, 0, 1) and square -2
O = mukai_from_chern(1, (0,), 0, S)
print("v(O_S) =", O, " square", O.square(S))

# Ideal sheaves of n points: v = (1, 0, 1 - n), v^2 = 2n - 2
for n in range(2, 5):
    v = mukai_from_chern(1, (0,), -n, S)
    print(f"n={n}: v={v.coordinates()}, v^2={v.square(S)}")

# Abstract model of v-perp for v^2 = 2k
for k in (1, 2, 5):
    print(f"k={k}  K3:", describe(vperp_abstract(k, "k3")))
    print(f"k={k}  Abelian:", describe(vperp_abstract(k, "abelian")))

# The explicit complement of (1, 0, ..., 0, 1 - n) agrees with H^2 + <2 - 2n>
n = 3
v = [1] + [0] * 22 + [1 - n]
ref = direct_sum(standard_lattice("K3Lattice"), standard_lattice("A1", 2 - 2 * n))
print("explicit :", describe(vperp_explicit(v, kind="k3")))
print("reference:", describe(ref))

# With a rank two NS lattice the embedding into H^2 is chosen automatically
S2 = SurfaceModel("k3", [[0, 1], [1, 0]], (1, 1))
w = MukaiVector(2, (1, 1), -1)
print("w^2 =", w.square(S2), "->", describe(vperp_explicit(w, S2)))
