"""
Integral lattices
=================

Gram matrices, signatures, Smith forms and orthogonal complements, all in
exact integer arithmetic.
"""

from mukailab import (
    direct_sum,
    discriminant_group,
    orthogonal_complement,
    signature,
    smith_normal_form,
    standard_lattice,
    twist,
)

# The hyperbolic plane and the (positive definite) E8 lattice
U = standard_lattice("U")
E8 = standard_lattice("E8")
print("U  :", U.gram, "det", U.det())
print("E8 : det", E8.det(), "signature", signature(E8).as_tuple())

# The K3 lattice uses E8 with its sign flipped
K3 = standard_lattice("K3Lattice")
print("K3 lattice: rank", K3.rank, "signature", signature(K3).as_tuple())
print("twisted E8 signature:", signature(twist(E8, -1)).as_tuple())

# Smith normal form: U @ M @ V = D
M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
Ut, D, V = smith_normal_form(M)
print("SNF diagonal:", [D[i][i] for i in range(3)])

# Discriminant groups come from the Smith form of the Gram matrix
L = direct_sum(U, standard_lattice("A1", -4))
print("disc(U + <-4>):", discriminant_group(L).as_list())

# Orthogonal complements are saturated: the complement of (1, k) in U is <-2k>
for k in range(1, 5):
    basis, C = orthogonal_complement(U, [(1, k)])
    print(f"(1,{k})-perp in U: basis {basis}, gram {C.gram}")
