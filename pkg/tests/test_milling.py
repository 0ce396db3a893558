"""The boundary/strip/matching skeleton and the full rectangular solver."""

import math

import pytest

from mwpdv.errors import Disconnected, EmptyOffset, NarrowCorridor
from mwpdv.geometry import CostModel, Polyomino, coverage_check, walk_length
from mwpdv.instances import gen_fat_polyomino, gen_random_polyomino
from mwpdv.milling import afm_tour, mwpdv_rect_solve
from mwpdv.oracle import exact_min_cover, exact_mwpdv
from mwpdv.errors import InstanceTooLarge

COST = CostModel(c=1.0, r=1.0, scan_metric="linf", tour_metric="l1")


def test_afm_2x2_degenerate_point_tour():
    walk, decomp = afm_tour(Polyomino.rectangle(2, 2))
    assert walk == [(1, 1)]
    assert (decomp.l_delta_b, decomp.l_str, decomp.l_m) == (0, 0, 0)


def test_afm_4x4_boundary_only():
    walk, decomp = afm_tour(Polyomino.rectangle(4, 4))
    assert walk_length(walk) == 8
    assert (decomp.l_delta_b, decomp.l_str, decomp.l_m) == (8, 0, 0)
    assert not decomp.strips


def test_afm_6x6_strips_and_matching():
    walk, decomp = afm_tour(Polyomino.rectangle(6, 6))
    assert decomp.l_delta_b == 16
    assert walk_length(walk) == decomp.l_delta_b + decomp.l_str + decomp.l_m
    assert walk_length(walk) <= decomp.l_delta_b + 1.5 * decomp.l_str
    # cutter containment and full sweep
    from mwpdv.geometry import offset_centers, sweep_covers

    centers = offset_centers(Polyomino.rectangle(6, 6))
    assert set(walk) <= centers
    assert sweep_covers(Polyomino.rectangle(6, 6), set(walk)) is None


def test_afm_rejects_infeasible():
    with pytest.raises(EmptyOffset):
        afm_tour(Polyomino.rectangle(3, 1))
    with pytest.raises(Disconnected):
        afm_tour(Polyomino.from_pixels([(0, 0), (3, 3)]))
    # a 4x4 block with a unit antenna the cutter cannot reach
    antenna = Polyomino.from_pixels(
        [(x, y) for x in range(4) for y in range(4)] + [(1, 4)]
    )
    with pytest.raises(NarrowCorridor):
        afm_tour(antenna)


def test_afm_junction_degrees(random_suite):
    for name, P in random_suite:
        try:
            walk, decomp = afm_tour(P)
        except (EmptyOffset, NarrowCorridor, Disconnected):
            continue
        if decomp.strips:
            assert decomp.junctions_degree4, name


def test_solve_2x2():
    sol = mwpdv_rect_solve(Polyomino.rectangle(2, 2), COST)
    assert sol.scan_count == 1 and sol.tour_length == 0
    assert sol.total_cost == 1.0


def test_solve_4x4_matches_expected_cost():
    sol = mwpdv_rect_solve(Polyomino.rectangle(4, 4), COST)
    assert sol.scan_count == 5
    assert sol.tour_length == 8.0
    assert sol.total_cost == 13.0
    # the lone interior quadruple scan is attached to its nearest vertex
    assert sol.meta["off_tour_scans"] == [(2, 2)]
    opt = exact_mwpdv(Polyomino.rectangle(4, 4), COST)
    assert opt.total_cost == 12.0
    assert sol.total_cost <= 2.5 * opt.total_cost


def test_solve_4x4_zero_scan_cost():
    cost0 = CostModel(c=0.0, r=1.0, scan_metric="linf", tour_metric="l1")
    sol = mwpdv_rect_solve(Polyomino.rectangle(4, 4), cost0)
    assert sol.total_cost == sol.tour_length == 8.0


def test_solve_6x6_all_scans_on_tour():
    sol = mwpdv_rect_solve(Polyomino.rectangle(6, 6), COST)
    verts = set(sol.tour)
    assert all(s in verts for s in sol.scans)
    assert sol.meta["off_tour_scans"] == []
    assert sol.tour_length == sol.meta["L_deltaB"] + sol.meta["L_str"] + sol.meta["L_M"]


def test_reroute_swaps_one_corner_and_preserves_length():
    from mwpdv.milling import _reroute_through

    walk = [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (1, 3), (1, 2), (1, 1)]
    out = _reroute_through(walk, (2, 2), set())
    assert out is not None and (2, 2) in out
    assert walk_length(out) == walk_length(walk)
    # corners hosting scans are left alone
    assert _reroute_through(walk, (2, 2), {(1, 1), (3, 1), (3, 3), (1, 3)}) is None


def test_solve_applies_reroute_organically():
    # this seeded fat shape has a scan off the raw skeleton that a reflex
    # reroute brings onto the tour without changing the length
    P = gen_fat_polyomino(5098, 10, 0.5)
    walk0, decomp = afm_tour(P, phase=0)
    sol = mwpdv_rect_solve(P, COST)
    assert sol.meta["algorithm"] == "rect-afm"
    assert set(sol.tour) != set(walk0)
    assert sol.tour_length == walk_length(walk0)
    assert sol.tour_length == sol.meta["L_deltaB"] + sol.meta["L_str"] + sol.meta["L_M"]


def test_solve_thin_instances_use_fallbacks():
    sol = mwpdv_rect_solve(Polyomino.rectangle(4, 1), COST)
    assert sol.meta["algorithm"] == "rect-heldkarp"
    assert sol.total_cost == 6.0
    snake = gen_random_polyomino(23, 39, 0.8)
    sol = mwpdv_rect_solve(snake, COST)
    assert sol.meta["algorithm"] in ("rect-heldkarp", "rect-structural")
    cert = coverage_check(snake, sol.scans, COST, "milling")
    assert cert.covered and cert.scans_inside


def test_solve_tour_stays_inside_region(random_suite):
    from mwpdv.geometry import lattice_adjacency

    for name, P in random_suite[:40]:
        sol = mwpdv_rect_solve(P, COST)
        lat = P.lattice_points
        assert all(v in lat for v in sol.tour), name
        adj = lattice_adjacency(P)
        for a, b in zip(sol.tour, sol.tour[1:]):
            assert b in adj[a], (name, a, b)


def test_solve_ratio_bounds_on_small_instances():
    checked = 0
    shapes = [Polyomino.rectangle(w, h) for w in (2, 3, 4) for h in (2, 3, 4)]
    shapes += [gen_fat_polyomino(600 + i, 1 + i % 3, 0.3) for i in range(12)]
    for P in shapes:
        if len(P.lattice_points) > 15:
            continue
        sol = mwpdv_rect_solve(P, COST)
        try:
            s_min, _ = exact_min_cover(P, COST)
            opt = exact_mwpdv(P, COST)
        except InstanceTooLarge:
            continue
        assert sol.scan_count <= math.ceil(2.5 * s_min)
        if sol.meta["algorithm"] == "rect-afm":
            l_star = min(length for _, length in opt.pareto)
            assert sol.tour_length <= 2.5 * l_star or l_star == 0
        checked += 1
    assert checked >= 10
