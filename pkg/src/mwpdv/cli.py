"""Command line entry points.

Subcommands: solve (run an approximation algorithm on an instance file),
oracle (exact baseline), gen (instances: seeded random polyominoes and
gadget fixtures), bench (run a suite directory and write a ratio report).
Exit codes: 0 success, 1 bound violation in bench, 2 validation error,
3 instance too large for an exact solver.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as bench_mod
from .errors import InstanceTooLarge, MwpdvError
from .geometry import CostModel, coverage_check
from .instances import (
    GADGET_KINDS,
    InstanceFile,
    gen_gadget,
    gen_random_polyomino,
    read_instance,
    solution_to_dict,
    write_instance,
    write_solution,
)
from .svg import render_svg


def _error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}) + "\n")


def _cost_override(inst: InstanceFile, args) -> CostModel:
    c = inst.cost.c if args.c is None else args.c
    return CostModel(
        c=c,
        r=inst.cost.r,
        scan_metric=inst.cost.scan_metric,
        tour_metric=inst.cost.tour_metric,
    )


def solve_instance(inst: InstanceFile, alg: str, mode: str | None = None):
    """Dispatch to the algorithm the instance calls for; returns
    (solution, certificate dict)."""
    mode = mode or inst.mode
    if alg == "rect":
        from .milling import mwpdv_rect_solve

        P = inst.polyomino()
        sol = mwpdv_rect_solve(P, inst.cost, mode)
        cert = coverage_check(P, sol.scans, inst.cost, mode)
        certificate = {
            "covered": cert.covered,
            "scans_inside": cert.scans_inside,
            "checks": {
                k: sol.meta[k]
                for k in ("L_deltaB", "L_str", "L_M")
                if k in sol.meta
            },
        }
        return sol, certificate
    if alg == "circ1":
        from .circular import circular_grid_tour, lemma3_certificate

        P = inst.polyomino()
        sol = circular_grid_tour(P, inst.cost)
        cert = coverage_check(P, sol.scans, inst.cost, mode)
        lemma = lemma3_certificate(P, sol)
        certificate = {
            "covered": cert.covered,
            "scans_inside": cert.scans_inside,
            "checks": {
                "scan_bound_n_plus_1": sol.scan_count <= P.n_pixels + 1,
                "L_bound": lemma.l_bound,
                "L_strips": lemma.l_strips,
                "L_delta1": lemma.l_delta1,
                "lemma_ok": lemma.ok,
            },
        }
        return sol, certificate
    if alg == "circ-r":
        from .circular_general import circular_general_solve, coverage_sample_check

        R = inst.rect_polygon()
        sol = circular_general_solve(R, inst.cost)
        report = coverage_sample_check(R, sol.scans, inst.cost.r)
        sol.meta.pop("chains", None)
        certificate = {
            "covered": report.covered,
            "scans_inside": True,
            "checks": {
                "samples": report.n_samples,
                "uncovered": report.n_uncovered,
                "parts": sol.meta["parts"],
                "offset_identity_ok": sol.meta["identity_ok"],
            },
        }
        return sol, certificate
    raise ValueError(f"unknown algorithm {alg!r}")


def _cmd_solve(args) -> int:
    inst = read_instance(args.input)
    if args.c is not None:
        inst = InstanceFile(
            name=inst.name,
            kind=inst.kind,
            pixels=inst.pixels,
            vertices=inst.vertices,
            cost=_cost_override(inst, args),
            mode=inst.mode,
            annotations=inst.annotations,
        )
    sol, certificate = solve_instance(inst, args.alg, args.mode)
    doc = solution_to_dict(inst, sol, f"{args.alg}", certificate)
    if args.out:
        write_solution(doc, args.out)
    else:
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    if args.svg:
        Path(args.svg).write_text(render_svg(inst, sol), encoding="utf-8")
    return 0


def _cmd_oracle(args) -> int:
    from .oracle import Budget, exact_min_cover, exact_mwpdv

    inst = read_instance(args.input)
    if inst.kind != "polyomino":
        raise ValueError("the exact oracle handles polyomino instances")
    cost = _cost_override(inst, args)
    P = inst.polyomino()
    budget = Budget(args.budget) if args.budget else Budget()
    s_min, witness = exact_min_cover(P, cost, budget)
    opt = exact_mwpdv(P, cost, inst.mode, budget)
    doc = {
        "instance": inst.name,
        "s_min": s_min,
        "min_cover": [list(p) for p in witness],
        "t_star": opt.total_cost,
        "optimal_scans": [list(p) for p in opt.scans],
        "optimal_tour_length": opt.tour_length,
        "pareto": [[k, length] for k, length in opt.pareto],
    }
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "random":
        P = gen_random_polyomino(args.seed, args.pixels, args.bias)
        inst = InstanceFile(
            name=args.name or f"random-s{args.seed}-n{args.pixels}",
            kind="polyomino",
            pixels=tuple(sorted(P.pixels)),
            cost=CostModel(c=args.c if args.c is not None else 1.0),
            mode="milling",
        )
    else:
        inst = gen_gadget(args.name or "variable")
    out = args.out or f"{inst.name}.json"
    write_instance(inst, out)
    sys.stdout.write(out + "\n")
    return 0


def _cmd_bench(args) -> int:
    report = bench_mod.run_suite(Path(args.suite), budget=args.budget)
    Path(args.report).write_text(
        json.dumps(report, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    if not report["all_bounds_ok"]:
        _error("BoundViolation", "an instance exceeded its proven bound")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mwpdv", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run an approximation algorithm")
    s.add_argument("--alg", required=True, choices=["rect", "circ1", "circ-r"])
    s.add_argument("--input", required=True)
    s.add_argument("--c", type=float, default=None, help="override scan time")
    s.add_argument("--mode", choices=["milling", "lawnmowing"], default=None)
    s.add_argument("--out", default=None)
    s.add_argument("--svg", default=None)
    s.set_defaults(func=_cmd_solve)

    o = sub.add_parser("oracle", help="exact baseline for a polyomino instance")
    o.add_argument("--input", required=True)
    o.add_argument("--c", type=float, default=None)
    o.add_argument("--budget", type=int, default=None)
    o.add_argument("--out", default=None)
    o.set_defaults(func=_cmd_oracle)

    g = sub.add_parser("gen", help="generate instances and fixtures")
    g.add_argument("--kind", required=True, choices=["random", "gadget"])
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--pixels", type=int, default=12)
    g.add_argument("--bias", type=float, default=0.35)
    g.add_argument("--c", type=float, default=None)
    g.add_argument(
        "--name", default=None, help=f"gadget kind ({', '.join(GADGET_KINDS)}) or instance name"
    )
    g.add_argument("--out", default=None)
    g.set_defaults(func=_cmd_gen)

    b = sub.add_parser("bench", help="run a suite directory, write a ratio report")
    b.add_argument("--suite", required=True)
    b.add_argument("--report", required=True)
    b.add_argument("--budget", type=int, default=None)
    b.set_defaults(func=_cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as e:
        _error("InstanceTooLarge", str(e))
        return 3
    except (MwpdvError, ValueError, FileNotFoundError, KeyError) as e:
        _error(type(e).__name__, str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
