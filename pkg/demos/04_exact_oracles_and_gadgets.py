"""Exact desk-scale baselines and the hardness-gadget fixtures.

The combined optimum trades scan count against tour length: sweeping the
scan cost c moves the optimum along a small Pareto set.  The gadget
fixtures reproduce the two combinatorial facts the reduction rests on.
"""

from mwpdv import (
    CostModel,
    Polyomino,
    exact_min_cover,
    exact_mwpdv,
    gen_gadget,
)
from mwpdv.oracle import enumerate_min_covers

cost = CostModel(c=1.0, r=1.0, scan_metric="linf", tour_metric="l1")

print("=== the scan/travel trade-off on a 4x4 square ===")
P = Polyomino.rectangle(4, 4)
opt = exact_mwpdv(P, cost)
print(f"  Pareto set (scans, tour length): {opt.pareto}")
for c in (0.0, 0.5, 1.0, 5.0):
    best = min(c * k + length for k, length in opt.pareto)
    print(f"  c = {c}: optimal cost {best}")

print("\n=== variable gadget: exactly two optimal placements ===")
var = gen_gadget("variable")
covers = enumerate_min_covers(var.polyomino(), var.cost)
print(f"  minimum covers ({len(covers)}):")
for cover in covers:
    print(f"    {list(cover)}")

print("\n=== clause gadget: three scans if satisfied, four otherwise ===")
sat = gen_gadget("clause_sat").polyomino()
unsat = gen_gadget("clause_unsat").polyomino()
print(f"  satisfied corridor:   {exact_min_cover(sat, cost)[0]} scans")
print(f"  unsatisfied corridor: {exact_min_cover(unsat, cost)[0]} scans")
