"""Watching tower resistances converge, level by level.

Run:  python3 demos/06_convergence_scan.py
"""

from resnet import (
    conjecture_scan,
    diameter_delta_scan,
    fan_bounds,
    scan_to_csv,
)

print("== corner resistance of the k=2 tower as it grows ==")
rep = conjecture_scan(k=2, n_max=12)
print(f"pair {rep.pair}, per-level limit {rep.limit}")
for row in rep.rows:
    if row.diff is None:
        print(f"  n={row.n:2d}  R={float(row.value):.12f}   (baseline)")
    else:
        print(f"  n={row.n:2d}  R={float(row.value):.12f}   "
              f"diff={float(row.diff):.12f}   off-limit={float(row.deviation):.3e}")
print("each new level adds almost exactly 1/4, and the error only shrinks.")

print()
print("== the same table as CSV, ready for a plotting tool ==")
small = conjecture_scan(k=2, n_max=5)
print(scan_to_csv(small))

print()
print("== the diameter tracks the fixed corner pair ==")
drep = diameter_delta_scan(n_max=6)
for row in drep.rows:
    d = "-" if row.delta is None else f"{float(row.delta):.10f}"
    print(f"  n={row.n}: D_r = {row.diameter}   delta = {d}")
print("every diameter above equals the corner value from the scan:",
      drep.endpoint_match)

print()
print("== fan bounds that drive the convergence rate ==")
for n in (3, 6, 9):
    fb = fan_bounds(n, 4)
    print(f"  n={n}: endpoint step {float(fb.endpoint_step):.3e} < {2 / 4 ** n:.3e}; "
          f"apex step {float(fb.apex_step):.3e} < {1 / 4 ** n:.3e}; all hold: {fb.all_hold}")
print("the geometric envelopes 2/m^n and 1/m^n pin the tail of the scan.")
