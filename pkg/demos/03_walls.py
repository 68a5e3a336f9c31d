"""
Walls and generic polarizations
===============================

For v with positive rank the classes D with -|v| <= D^2 < 0 cut the ample
cone into chambers. A polarization on none of those walls is v-generic.
"""

from mukailab import (
    AmpleSegment,
    MukaiVector,
    SurfaceModel,
    check_wall_inclusion,
    enumerate_walls,
    is_v_generic,
    v_norm_bound,
)

# NS = U, v = (2, 0, -1): |v| = 4 + 16/2 = 12
S = SurfaceModel("k3", [[0, 1], [1, 0]], (1, 1))
v = MukaiVector(2, (0, 0), -1)
print("|v| =", v_norm_bound(v, S))

walls = enumerate_walls(v, S, AmpleSegment((1, 12), (12, 1)))
print(len(walls), "walls cross the segment from (1,12) to (12,1):")
for w in walls:
    print("  D =", w.d, " D^2 =", w.d_square)

# (7, 1) avoids every wall, (1, 1) sits on D = (1, -1)
for h in [(7, 1), (1, 1)]:
    res = is_v_generic(h, v, S)
    print(f"h={h}: {res.status.value}", res.witness or "")

# On an Abelian surface with NS = diag(2, -4) the walls come from a Pell equation
A = SurfaceModel("abelian", [[2, 0], [0, -4]], (2, 1))
print("Abelian |v| =", v_norm_bound(v, A), "->", is_v_generic((2, 1), v, A))

# Walls for p w are walls for m w, so m w-generic implies p w-generic
w = MukaiVector(2, (1, -1), 0)
seg = AmpleSegment((1, 12), (12, 1))
for p in (1, 2, 3):
    print(f"#W({p}w) on seg =", len(enumerate_walls(w * p, S, seg)))
print("W(w) inside W(3w):", check_wall_inclusion(w, 3, 1, S, seg))
