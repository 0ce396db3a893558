"""Generate a small instance suite, run the ratio benchmark, and print the
certified approximation ratios."""

import json
import tempfile
from pathlib import Path

from mwpdv import CostModel, InstanceFile, gen_gadget, write_instance
from mwpdv.bench import run_suite
from mwpdv.instances import gen_fat_polyomino, gen_random_polyomino

suite = Path(tempfile.mkdtemp(prefix="mwpdv-suite-"))
cost = CostModel(c=1.0, r=1.0, scan_metric="linf", tour_metric="l1")

for seed in range(1, 6):
    P = gen_fat_polyomino(seed, 2 + seed, 0.3)
    write_instance(
        InstanceFile(name=f"fat-{seed}", kind="polyomino",
                     pixels=tuple(sorted(P.pixels)), cost=cost),
        suite / f"fat-{seed}.json",
    )
for seed in range(1, 4):
    P = gen_random_polyomino(seed, 9, 0.6)
    write_instance(
        InstanceFile(name=f"thin-{seed}", kind="polyomino",
                     pixels=tuple(sorted(P.pixels)), cost=cost),
        suite / f"thin-{seed}.json",
    )
write_instance(gen_gadget("variable"), suite / "variable.json")

report = run_suite(suite)
print(f"suite: {suite}")
print(f"all bounds ok: {report['all_bounds_ok']}\n")
for row in report["instances"]:
    ratio = row.get("ratio_scans")
    extra = f"  scans/s_min = {ratio:.2f}" if ratio else ""
    cost_ratio = row.get("ratio_cost")
    extra += f"  cost/optimal = {cost_ratio:.2f}" if cost_ratio else ""
    print(f"  {row['name']:>12}: scans {row['scan_count']:>2},"
          f" tour {row['tour_length']:>5.1f}{extra}")

out = suite / "report.json"
out.write_text(json.dumps(report, sort_keys=True, indent=2) + "\n", encoding="utf-8")
print(f"\nwrote {out}")
