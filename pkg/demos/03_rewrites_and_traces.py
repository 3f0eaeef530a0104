"""Terminal-preserving rewrites: series, parallel, triangle-to-star, the
negative-edge bipartite gadget, and the fan chain pipeline.

Run:  python3 demos/03_rewrites_and_traces.py
"""

from fractions import Fraction

from resnet import (
    ResistorNetwork,
    apply_step,
    complete_bipartite,
    delta_y,
    fan,
    fan_chain_reduce,
    greedy_reduce,
    resistance_exact,
    substitute_bipartite_star,
    trace_to_text,
)

print("== triangle to star ==")
tri = ResistorNetwork.build(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
step = delta_y(tri, (0, 1, 2))
star = apply_step(tri, step)
center = step.added_vertices[0]
print("triangle sides 1, 2, 3 become arms:",
      ", ".join(str(e.r) for e in star.incident(center)))
print("corner pair (0,1) before:", resistance_exact(tri, 0, 1),
      " after:", resistance_exact(star, 0, 1))

print()
print("== complete bipartite gadget ==")
k23 = complete_bipartite(2, 3)
sub = apply_step(k23, substitute_bipartite_star(k23, (0, 1), (2, 3, 4)))
print("six unit edges replaced by", len(sub.edges) - len(k23.edges) + 6,
      "edges, one of them negative:")
for e in sub.edges:
    flag = "  <- gadget" if e.gadget else ""
    print(f"  [{e.u}, {e.v}]  r = {e.r}{flag}")
print("cross pair before:", resistance_exact(k23, 0, 2),
      " after:", resistance_exact(sub, 0, 2))

print()
print("== greedy reduction with a trace ==")
f = fan(5, 2)
trace = greedy_reduce(f, terminals={0, 4}, use_delta_y=True, certify=True)
print(trace_to_text(trace))
print("certificates all equal:",
      len(set(map(str, trace.certificates))) == 1)
print("surviving edge:", trace.final.edges[0].r,
      "= direct solve:", resistance_exact(f, 0, 4))

print()
print("== the fan chain pipeline ==")
fc = fan_chain_reduce(5, 2)
print("fan over a 6-vertex path collapses to a chain through star centers")
print("chain links:", ", ".join(str(x) for x in fc.chain_links))
print("apex arms:  ", ", ".join(str(x) for x in fc.apex_arms))
print(f"second-to-last apex arm {fc.tail_apex_arm} sits below "
      f"1/2^5 = {Fraction(1, 32)}")
print("chain total", fc.endpoint_resistance,
      "= fan end-to-end", resistance_exact(fan(6, 2), 0, 5))
