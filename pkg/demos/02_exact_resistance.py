"""Exact resistance queries over rational arithmetic.

Run:  python3 demos/02_exact_resistance.py
"""

from resnet import (
    cycle,
    hypercube,
    path,
    resistance_exact,
    resistance_matrix_exact,
)

print("== single pairs, exact fractions ==")
c4 = cycle(4)
print("square, adjacent corners:   ", resistance_exact(c4, 0, 1))
print("square, opposite corners:   ", resistance_exact(c4, 0, 2))
q3 = hypercube(3)
print("cube, adjacent corners:     ", resistance_exact(q3, 0, 1))
print("cube, antipodal corners:    ", resistance_exact(q3, 0, 7))

print()
print("== the ground choice never matters ==")
vals = {g: resistance_exact(q3, 0, 7, ground=g) for g in (1, 3, 6)}
for g, v in vals.items():
    print(f"  grounding vertex {g}: {v}")

print()
print("== whole tables from one factorization ==")
table = resistance_matrix_exact(path(5))
print("path(5) end to end:", table[0, 4])
print("row from vertex 0: ", [str(table[0, v]) for v in range(5)])

print()
print("== a conservation check ==")
# summing R[u,v] / r_uv over the edges of any connected network gives
# exactly n - 1; a wrong solver has essentially no chance of passing this
net = hypercube(4)
table = resistance_matrix_exact(net)
total = sum(table[e.u, e.v] / e.r for e in net.edges)
print(f"hypercube(4): sum over edges = {total} (vertices minus one = {net.n - 1})")
