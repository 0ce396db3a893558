"""Exact desk-scale baselines: minimum scan covers, optimal tours, and the
optimal combined cost.  Every approximation ratio in the test suite is
certified against these.

The L-infinity oracle is exact.  The L2 oracle restricts scan candidates to
lattice points of the closed region ("lattice-optimal"): optimal circular
guard points need not be lattice points in general, so its value is used
only where the algorithms themselves are lattice-restricted.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Optional

from .errors import InstanceTooLarge
from .geometry import (
    CostModel,
    Pixel,
    Point,
    Polyomino,
    lattice_adjacency,
    lattice_distances,
    linf_covered_pixels,
    pixel_worst_point,
)

MAX_CANDIDATES = 400
HELD_KARP_MAX = 15
DEFAULT_BUDGET = 2_000_000


def default_budget() -> int:
    try:
        return int(os.environ.get("MWPDV_ORACLE_BUDGET", DEFAULT_BUDGET))
    except ValueError:
        return DEFAULT_BUDGET


class Budget:
    """Cooperative node-count budget for the exact searches."""

    def __init__(self, nodes: Optional[int] = None):
        self.limit = nodes if nodes is not None else default_budget()
        self.used = 0

    def tick(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise InstanceTooLarge(f"oracle budget of {self.limit} nodes exceeded")


# ---------------------------------------------------------------------------
# exact set cover


def _greedy_cover(n_elems: int, masks: list[int]) -> list[int]:
    full = (1 << n_elems) - 1
    got = 0
    chosen = []
    while got != full:
        best, best_gain = -1, 0
        for i, m in enumerate(masks):
            gain = bin(m & ~got).count("1")
            if gain > best_gain:
                best, best_gain = i, gain
        if best < 0:
            return []
        chosen.append(best)
        got |= masks[best]
    return chosen


def _exact_set_cover(
    n_elems: int, masks: list[int], budget: Budget
) -> Optional[list[int]]:
    """Minimum-cardinality cover of elements 0..n_elems-1 by the given
    bitmask sets; None when infeasible.  Branch and bound on the element
    with the fewest remaining covering sets, pruned by a coverage-size
    lower bound."""
    full = (1 << n_elems) - 1
    union = 0
    for m in masks:
        union |= m
    if union != full:
        return None
    max_size = max(bin(m).count("1") for m in masks)
    covers: list[list[int]] = [[] for _ in range(n_elems)]
    for i, m in enumerate(masks):
        mm = m
        while mm:
            b = mm & -mm
            mm ^= b
            covers[b.bit_length() - 1].append(i)
    greedy = _greedy_cover(n_elems, masks)
    best: list[int] = greedy
    best_size = len(greedy) if greedy else n_elems + 1

    chosen: list[int] = []

    def rec(got: int):
        nonlocal best, best_size
        budget.tick()
        if got == full:
            if len(chosen) < best_size:
                best, best_size = list(chosen), len(chosen)
            return
        uncovered = bin(full & ~got).count("1")
        if len(chosen) + math.ceil(uncovered / max_size) >= best_size:
            return
        # branch on the uncovered element with fewest covering sets
        pick, pick_opts = -1, None
        mm = full & ~got
        while mm:
            b = mm & -mm
            mm ^= b
            e = b.bit_length() - 1
            opts = [i for i in covers[e] if masks[i] & ~got]
            if pick_opts is None or len(opts) < len(pick_opts):
                pick, pick_opts = e, opts
                if len(opts) <= 1:
                    break
        if not pick_opts:
            return
        pick_opts.sort(key=lambda i: (-bin(masks[i] & ~got).count("1"), i))
        for i in pick_opts:
            chosen.append(i)
            rec(got | masks[i])
            chosen.pop()

    rec(0)
    return best if best else None


# ---------------------------------------------------------------------------
# scan candidates and coverage sets


def scan_candidates(P: Polyomino) -> list[Point]:
    """Grid points of the closed region; exterior candidates are dominated."""
    cands = sorted(P.lattice_points)
    if len(cands) > MAX_CANDIDATES:
        raise InstanceTooLarge(
            f"{len(cands)} candidate scan points exceed the cap of {MAX_CANDIDATES}"
        )
    return cands


def exact_min_cover(
    P: Polyomino, cost: CostModel, budget: Optional[Budget] = None
) -> tuple[int, list[Point]]:
    """Exact minimum scan cover (s_min, witness).  For L2 the witness is
    certified by the exact union-coverage test via lazy witness points."""
    budget = budget or Budget()
    cands = scan_candidates(P)
    pixels = sorted(P.pixels)
    if cost.scan_metric == "linf":
        r = int(round(cost.r))
        pidx = {p: i for i, p in enumerate(pixels)}
        masks = []
        for g in cands:
            m = 0
            for p in linf_covered_pixels(P, g, r):
                m |= 1 << pidx[p]
            masks.append(m)
        sol = _exact_set_cover(len(pixels), masks, budget)
        if sol is None:
            raise InstanceTooLarge("no covering scan set exists from candidates")
        witness = sorted(cands[i] for i in sol)
        return len(sol), witness
    return _exact_min_cover_l2(P, cost, cands, budget)


from functools import lru_cache


@lru_cache(maxsize=1 << 18)
def _worst_cached(pixel: Pixel, near: tuple) -> tuple[float, tuple[float, float]]:
    return pixel_worst_point(pixel, [(float(a), float(b)) for a, b in near])


def _pixel_union_covered(P: Polyomino, scans: list[Point], r: float):
    """First uncovered pixel and its worst point under union-of-disks
    coverage, or None."""
    for pixel in sorted(P.pixels):
        near = tuple(
            s
            for s in scans
            if math.hypot(
                max(pixel[0] - s[0], 0, s[0] - pixel[0] - 1),
                max(pixel[1] - s[1], 0, s[1] - pixel[1] - 1),
            )
            <= r + 1e-6
        )
        d, worst = _worst_cached(pixel, near)
        if d > r + 1e-9:
            return pixel, worst
    return None


def _exact_min_cover_l2(P, cost, cands, budget) -> tuple[int, list[Point]]:
    """Lazy-constraint loop: solve a witness-point set cover, then check the
    candidate solution with the exact union test and add the violating worst
    point as a new witness until the optimum is feasible.  The final value is
    the exact lattice-restricted minimum."""
    r = cost.r
    witness_pts: list[tuple[float, float]] = []
    for x, y in sorted(P.pixels):
        witness_pts.extend(
            [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1), (x + 0.5, y + 0.5)]
        )
    witness_pts = sorted(set(witness_pts))
    for _ in range(200):
        masks = []
        for g in cands:
            m = 0
            for i, w in enumerate(witness_pts):
                if math.hypot(w[0] - g[0], w[1] - g[1]) <= r + 1e-9:
                    m |= 1 << i
            masks.append(m)
        sol = _exact_set_cover(len(witness_pts), masks, budget)
        if sol is None:
            raise InstanceTooLarge("no covering scan set exists from lattice candidates")
        scans = sorted(cands[i] for i in sol)
        bad = _pixel_union_covered(P, scans, r)
        if bad is None:
            return len(scans), scans
        witness_pts.append(bad[1])
    raise InstanceTooLarge("L2 cover refinement did not converge")


def enumerate_min_covers(
    P: Polyomino,
    cost: CostModel,
    budget: Optional[Budget] = None,
    cap: int = 50_000,
) -> list[tuple[Point, ...]]:
    """All minimum-cardinality covers (L-infinity only), for fixture
    verification such as the two-optima property of the variable gadget."""
    if cost.scan_metric != "linf":
        raise ValueError("minimum-cover enumeration is defined for linf only")
    budget = budget or Budget()
    s_min, _ = exact_min_cover(P, cost, budget)
    cands = scan_candidates(P)
    pixels = sorted(P.pixels)
    pidx = {p: i for i, p in enumerate(pixels)}
    r = int(round(cost.r))
    masks = []
    for g in cands:
        m = 0
        for p in linf_covered_pixels(P, g, r):
            m |= 1 << pidx[p]
        masks.append(m)
    full = (1 << len(pixels)) - 1
    out: list[tuple[Point, ...]] = []
    chosen: list[int] = []

    def rec(got: int, start: int):
        budget.tick()
        if len(out) >= cap:
            return
        if got == full:
            out.append(tuple(sorted(cands[i] for i in chosen)))
            return
        if len(chosen) == s_min:
            return
        # branch on the first uncovered pixel; only candidates covering it
        e = (full & ~got & -(full & ~got)).bit_length() - 1
        for i in range(len(cands)):
            if masks[i] >> e & 1:
                chosen.append(i)
                rec(got | masks[i], i + 1)
                chosen.pop()

    rec(0, 0)
    return sorted(set(out))


# ---------------------------------------------------------------------------
# exact tours


def exact_tour(
    points: list,
    metric: str = "l1",
    containment: Optional[Polyomino] = None,
    budget: Optional[Budget] = None,
) -> float:
    """Optimal closed-tour length over at most 15 points (Held-Karp).  With
    `containment`, distances are shortest lattice paths inside the region."""
    pts = [tuple(p) for p in points]
    n = len(pts)
    if n > HELD_KARP_MAX:
        raise InstanceTooLarge(f"{n} points exceed the Held-Karp cap of {HELD_KARP_MAX}")
    if n <= 1:
        return 0.0
    if containment is not None:
        adj = lattice_adjacency(containment)
        dmat = []
        for a in pts:
            dist = lattice_distances(containment, a, adj)
            row = []
            for b in pts:
                if b not in dist:
                    raise InstanceTooLarge("points not mutually reachable inside region")
                row.append(float(dist[b]))
            dmat.append(row)
    else:
        def d(a, b):
            if metric == "l1":
                return float(abs(a[0] - b[0]) + abs(a[1] - b[1]))
            return math.hypot(a[0] - b[0], a[1] - b[1])

        dmat = [[d(a, b) for b in pts] for a in pts]
    if n == 2:
        return 2.0 * dmat[0][1]
    size = 1 << (n - 1)  # vertex n-1 is the fixed endpoint
    INF = math.inf
    dp = [[INF] * (n - 1) for _ in range(size)]
    for k in range(n - 1):
        dp[1 << k][k] = dmat[n - 1][k]
    for mask in range(size):
        row = dp[mask]
        for last in range(n - 1):
            cur = row[last]
            if cur == INF or not (mask >> last & 1):
                continue
            dlast = dmat[last]
            for nxt in range(n - 1):
                if mask >> nxt & 1:
                    continue
                nm = mask | (1 << nxt)
                val = cur + dlast[nxt]
                if val < dp[nm][nxt]:
                    dp[nm][nxt] = val
    best = INF
    for last in range(n - 1):
        v = dp[size - 1][last]
        if v < INF:
            best = min(best, v + dmat[last][n - 1])
    return best


def exact_tour_order(
    points: list,
    metric: str = "l1",
    containment: Optional[Polyomino] = None,
    budget: Optional[Budget] = None,
) -> tuple[float, list]:
    """Like exact_tour but also returns an optimal visiting order."""
    pts = [tuple(p) for p in points]
    n = len(pts)
    if n > HELD_KARP_MAX:
        raise InstanceTooLarge(f"{n} points exceed the Held-Karp cap of {HELD_KARP_MAX}")
    if n == 0:
        return 0.0, []
    if n == 1:
        return 0.0, pts
    if containment is not None:
        adj = lattice_adjacency(containment)
        dmat = []
        for a in pts:
            dist = lattice_distances(containment, a, adj)
            row = []
            for b in pts:
                if b not in dist:
                    raise InstanceTooLarge("points not mutually reachable inside region")
                row.append(float(dist[b]))
            dmat.append(row)
    else:
        def d(a, b):
            if metric == "l1":
                return float(abs(a[0] - b[0]) + abs(a[1] - b[1]))
            return math.hypot(a[0] - b[0], a[1] - b[1])

        dmat = [[d(a, b) for b in pts] for a in pts]
    if n == 2:
        return 2.0 * dmat[0][1], pts
    size = 1 << (n - 1)
    INF = math.inf
    dp = [[INF] * (n - 1) for _ in range(size)]
    parent = [[-1] * (n - 1) for _ in range(size)]
    for k in range(n - 1):
        dp[1 << k][k] = dmat[n - 1][k]
    for mask in range(size):
        row = dp[mask]
        for last in range(n - 1):
            cur = row[last]
            if cur == INF or not (mask >> last & 1):
                continue
            dlast = dmat[last]
            for nxt in range(n - 1):
                if mask >> nxt & 1:
                    continue
                nm = mask | (1 << nxt)
                val = cur + dlast[nxt]
                if val < dp[nm][nxt]:
                    dp[nm][nxt] = val
                    parent[nm][nxt] = last
    best, best_last = INF, -1
    for last in range(n - 1):
        v = dp[size - 1][last]
        if v < INF and v + dmat[last][n - 1] < best:
            best, best_last = v + dmat[last][n - 1], last
    order = []
    mask, last = size - 1, best_last
    while last != -1:
        order.append(pts[last])
        nmask = mask ^ (1 << last)
        last = parent[mask][last]
        mask = nmask
    order.reverse()
    return best, [pts[n - 1]] + order


# ---------------------------------------------------------------------------
# exact combined optimum


@dataclass
class MwpdvOptimum:
    total_cost: float
    scans: tuple[Point, ...]
    tour_length: float
    # Pareto points (scan_count, tour_length) over all minimal covers:
    # the optimum for any other c is min over these of c*k + length.
    pareto: list[tuple[int, float]] = field(default_factory=list)

    def cost_at(self, c: float) -> float:
        return min(c * k + length for k, length in self.pareto)


def exact_mwpdv(
    P: Polyomino,
    cost: CostModel,
    mode: str = "milling",
    budget: Optional[Budget] = None,
) -> MwpdvOptimum:
    """Exact minimum of c * |S| + L(tour through S) over covering scan sets.

    Superset covers never beat their minimal subsets (tours over fewer
    points are no longer), so enumeration over minimal covers is exact.
    Milling mode confines tours to the closed region.
    """
    budget = budget or Budget()
    cands = scan_candidates(P)
    pixels = sorted(P.pixels)
    pidx = {p: i for i, p in enumerate(pixels)}
    if cost.scan_metric == "linf":
        r = int(round(cost.r))
        masks = [0] * len(cands)
        for i, g in enumerate(cands):
            for p in linf_covered_pixels(P, g, r):
                masks[i] |= 1 << pidx[p]
    else:
        masks = None  # L2 handled by cover enumeration with union checks

    containment = P if mode == "milling" else None
    metric = cost.tour_metric
    tour_cache: dict[tuple, float] = {}

    def tour_len(scans: tuple[Point, ...]) -> float:
        if scans not in tour_cache:
            tour_cache[scans] = exact_tour(list(scans), metric, containment, budget)
        return tour_cache[scans]

    best_by_size: dict[int, float] = {}
    best_overall: list = [math.inf, None, None]

    if masks is not None:
        full = (1 << len(pixels)) - 1
        chosen: list[int] = []

        def minimal(sel: list[int]) -> bool:
            for skip in range(len(sel)):
                got = 0
                for j, i in enumerate(sel):
                    if j != skip:
                        got |= masks[i]
                if got == full:
                    return False
            return True

        def rec(got: int):
            budget.tick()
            if len(chosen) > HELD_KARP_MAX:
                return
            if got == full:
                if not minimal(chosen):
                    return
                scans = tuple(sorted(cands[i] for i in chosen))
                length = tour_len(scans)
                k = len(scans)
                if length < best_by_size.get(k, math.inf):
                    best_by_size[k] = length
                t = cost.c * k + length
                if t < best_overall[0]:
                    best_overall[:] = [t, scans, length]
                return
            e = (full & ~got & -(full & ~got)).bit_length() - 1
            for i in range(len(cands)):
                if masks[i] >> e & 1 and masks[i] & ~got:
                    chosen.append(i)
                    rec(got | masks[i])
                    chosen.pop()

        rec(0)
    else:
        _enumerate_l2_covers(P, cost, cands, budget, best_by_size, best_overall, tour_len)

    if best_overall[1] is None:
        raise InstanceTooLarge("no feasible cover within the enumeration caps")
    pareto = sorted(best_by_size.items())
    return MwpdvOptimum(
        total_cost=best_overall[0],
        scans=best_overall[1],
        tour_length=best_overall[2],
        pareto=pareto,
    )


def _enumerate_l2_covers(P, cost, cands, budget, best_by_size, best_overall, tour_len):
    """Minimal-cover enumeration over a witness-point relaxation, with every
    leaf verified by the exact union-coverage test.  Every minimal true cover
    of size <= the Held-Karp cap is visited."""
    r = cost.r
    witness: list[tuple[float, float]] = []
    for x, y in sorted(P.pixels):
        witness.extend(
            [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1), (x + 0.5, y + 0.5)]
        )
    witness = sorted(set(witness))
    masks = []
    for g in cands:
        m = 0
        for i, w in enumerate(witness):
            if math.hypot(w[0] - g[0], w[1] - g[1]) <= r + 1e-9:
                m |= 1 << i
        masks.append(m)
    full = (1 << len(witness)) - 1
    chosen: list[int] = []

    def rec(got: int):
        budget.tick()
        if len(chosen) > HELD_KARP_MAX:
            return
        if got == full:
            scans = [cands[i] for i in chosen]
            if _pixel_union_covered(P, scans, r) is not None:
                return
            # non-minimal covers are enumerated too; they are feasible, so
            # they never spoil the minima taken below
            scans_t = tuple(sorted(scans))
            length = tour_len(scans_t)
            k = len(scans_t)
            if length < best_by_size.get(k, math.inf):
                best_by_size[k] = length
            t = cost.c * k + length
            if t < best_overall[0]:
                best_overall[:] = [t, scans_t, length]
            return
        e = (full & ~got & -(full & ~got)).bit_length() - 1
        for i in range(len(cands)):
            if masks[i] >> e & 1 and masks[i] & ~got:
                chosen.append(i)
                rec(got | masks[i])
                chosen.pop()

    rec(0)


# ---------------------------------------------------------------------------
# milling lower bounds


def milling_lower_bounds(P: Polyomino) -> dict:
    """L_deltaB and L_str packaged for ratio tests (both lower-bound the
    optimal milling tour length)."""
    from .milling import afm_tour  # local import to avoid a cycle

    _, decomp = afm_tour(P)
    return {"L_deltaB": decomp.l_delta_b, "L_str": decomp.l_str}
