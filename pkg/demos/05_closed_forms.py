"""Closed-form resistances and the tower decomposition identity.

Run:  python3 demos/05_closed_forms.py
"""

from fractions import Fraction

from resnet import (
    LADDER,
    block_tower,
    block_tower_decomposition,
    complete_bipartite,
    cone,
    cone_resistance,
    hypercube_diameter,
    join_resistance,
    kmn_resistance,
    ladder,
    ladder_endpoint_resistance,
    ladder_gap,
    path,
    path_spectrum,
    resistance_exact,
)

print("== complete bipartite, no matrix needed ==")
print("K_{3,4} across the split:", kmn_resistance(3, 4, "x", "y"))
print("K_{3,4} within the larger side:", kmn_resistance(3, 4, "y", "y"))
net = complete_bipartite(3, 4)
print("check against a solve:", resistance_exact(net, 0, 3), "and",
      resistance_exact(net, 3, 4))

print()
print("== joins and cones from factor spectra alone ==")
sp = path_spectrum(3)
print("path(3) joined with path(3), endpoints of one side:",
      join_resistance(sp, sp, 0, 2))
print("cone over path(3) with a double apex, base to apex:",
      cone_resistance(sp, 2, 0, 3))
cn = cone(path(3), 2)
print("same quantity by exact solve:", resistance_exact(cn, 0, 3))

print()
print("== ladder corner resistances ==")
a = LADDER.a
print("growth constant a = 2 + sqrt(3) =", a)
for n in (2, 3, 5, 8):
    diag = ladder_endpoint_resistance(n)
    lg = ladder_gap(n)
    exact = resistance_exact(ladder(n), 0, 2 * n - 1)
    print(f"  n={n}: diagonal corners {diag:.12f}  (exact {float(exact):.12f})"
          f"  gap over same rail {lg:.3e}")
print("the gap decays like 1/a^n; each extra rung adds a bit over 1/2.")

print()
print("== hypercube resistance diameter, exactly ==")
for k in range(1, 7):
    print(f"  k={k}: {hypercube_diameter(k)}")
print("more dimensions mean more parallel routes, so the diameter shrinks.")

print()
print("== tower corners split into a ladder part and a fan part ==")
for n in range(2, 7):
    rep = block_tower_decomposition(n)
    assert rep.residual == 0
    print(f"  n={n}: corner-to-opposite-corner {rep.lhs} "
          f"= ladder {rep.ladder_part} + ({rep.fan_part})/4 - {Fraction(n - 1, 4)}")
print("the identity is exact: residual is 0 as a rational number, not just small.")

print()
print("== sanity: the smallest tower is the cube ==")
t2 = block_tower(2)
print("tower n=2 far corners:", resistance_exact(t2, 0, 6), "(the cube's 5/6)")
