"""Milling tours for polyominoes: the boundary/strip/matching skeleton and
the full scan-visiting solver with its 2.5-factor certificates.

The skeleton is the classic three-part milling tour: trace the boundary of
the cutter-offset region, cover the remaining deep interior with horizontal
strips two rows apart, and close the strip endpoints with the shorter
alternating boundary arcs.  An Euler tour of the union is the route;
its length is exactly L_deltaB + L_str + L_M.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import Disconnected, EmptyOffset, InstanceTooLarge, NarrowCorridor
from .geometry import (
    CostModel,
    Pixel,
    Point,
    Polyomino,
    Solution,
    Strip,
    coverage_check,
    euler_tour,
    matching_parts,
    offset_boundary_length,
    offset_centers,
    strip_decomposition,
    sweep_covers,
    trace_offset_boundary,
)
from .scan_cover import ScanCoverTrace, scan_cover


@dataclass
class MillingDecomposition:
    """Reusable tour skeleton and lower-bound carrier."""

    centers: frozenset[Point]
    loops: list[list[Point]]
    strips: list[Strip]
    matching_arcs: list[list[Point]]
    l_delta_b: int
    l_str: int
    l_m: int
    phase: int
    junctions_degree4: bool = True
    meta: dict = field(default_factory=dict)


def _centers_connected(centers: frozenset[Point]) -> bool:
    start = min(centers)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            q = (x + dx, y + dy)
            if q in centers and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(centers)


def _swept_pixels(P: Polyomino, loops: list[list[Point]]) -> set[Pixel]:
    verts = {v for walk in loops for v in walk}
    swept = set()
    for x, y in P.pixels:
        if any(
            c in verts for c in ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))
        ):
            swept.add((x, y))
    return swept


def needed_strips(
    P: Polyomino, centers: frozenset[Point], loops: list[list[Point]], phase: int
) -> tuple[list[Strip], int]:
    """Strips (spacing 2, given phase) restricted to the chords that carry a
    covering center for some deep-interior pixel.  A chord's sweep covers the
    two pixel rows of its band."""
    p_int = P.pixels - _swept_pixels(P, loops)
    if not p_int:
        return [], 0
    chords, _ = strip_decomposition(centers, 2, phase)
    by_row: dict[int, list[Strip]] = {}
    for s in chords:
        by_row.setdefault(s.y, []).append(s)
    needed: set[Strip] = set()
    for x, y in sorted(p_int):
        y0 = y if (y - phase) % 2 == 0 else y + 1
        hit = None
        for cx in (x, x + 1):
            if (cx, y0) in centers:
                for s in by_row.get(y0, []):
                    if s.x1 <= cx <= s.x2:
                        hit = s
                        break
            if hit:
                break
        if hit is None:
            raise NarrowCorridor(
                f"deep pixel {(x, y)} has no feasible strip placement"
            )
        needed.add(hit)
    strips = sorted(needed, key=lambda s: (s.y, s.x1))
    return strips, sum(s.length for s in strips)


def _skeleton_edges(loops, strips, arcs):
    edges: list[tuple[Point, Point]] = []
    for walk in loops:
        edges.extend(zip(walk, walk[1:]))
    for s in strips:
        edges.extend(((x, s.y), (x + 1, s.y)) for x in range(s.x1, s.x2))
    for arc in arcs:
        edges.extend(zip(arc, arc[1:]))
    return edges


def afm_tour(
    P: Polyomino, phase: int | None = None
) -> tuple[list[Point], MillingDecomposition]:
    """2.5-approximate milling tour skeleton for a 2x2 cutter.

    With `phase` unset the strip phase (0 or 1) minimizing the tour length is
    chosen, preferring a phase whose matching part is within half the strip
    length.  Raises EmptyOffset / Disconnected / NarrowCorridor when no
    milling tour exists.
    """
    loops = trace_offset_boundary(P, 1)
    centers = offset_centers(P, 1)
    if not _centers_connected(centers):
        raise Disconnected("cutter-offset region is disconnected")
    missing = sweep_covers(P, {v for w in loops for v in w} | centers)
    if missing is not None:
        raise NarrowCorridor(f"pixel {missing} is not reachable by the cutter")
    l_delta_b = offset_boundary_length(loops)

    candidates = []
    for ph in ((phase,) if phase is not None else (0, 1)):
        strips, l_str = needed_strips(P, centers, loops, ph)
        arcs, l_m = matching_parts(strips, loops)
        candidates.append((l_str + l_m, 0 if 2 * l_m <= l_str else 1, ph, strips, l_str, arcs, l_m))
    candidates.sort(key=lambda t: t[:3])
    _, _, ph, strips, l_str, arcs, l_m = candidates[0]

    edges = _skeleton_edges(loops, strips, arcs)
    if not edges:
        # degenerate boundary: the offset region is a single point
        walk = [min(min(w) for w in loops)]
    else:
        walk, total = euler_tour(edges)
        assert total == l_delta_b + l_str + l_m
        missing = sweep_covers(P, set(walk))
        if missing is not None:
            raise NarrowCorridor(f"pixel {missing} is not swept by the skeleton")
    junction_ok = True
    if strips:
        from collections import Counter

        deg: Counter = Counter()
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        for s in strips:
            for e in s.endpoints:
                if deg[e] != 4:
                    junction_ok = False
    decomp = MillingDecomposition(
        centers=centers,
        loops=loops,
        strips=strips,
        matching_arcs=arcs,
        l_delta_b=l_delta_b,
        l_str=l_str,
        l_m=l_m,
        phase=ph,
        junctions_degree4=junction_ok,
    )
    return walk, decomp


# ---------------------------------------------------------------------------
# the full solver


def _recenter_scans(trace: ScanCoverTrace, tour_vertices: set[Point], P: Polyomino):
    """Move double/single scan centers onto the tour when an equivalent
    center covers the same pixels.  Returns the scan list in class order."""
    scans: list[Point] = list(trace.s4e + trace.s4o + trace.s3)
    k = len(scans)
    sets = trace.covered_sets
    lat = P.lattice_points
    for idx in range(k, len(sets)):
        pixels = sets[idx]
        if len(pixels) == 2:
            a, b = pixels
            ca = {(a[0], a[1]), (a[0] + 1, a[1]), (a[0], a[1] + 1), (a[0] + 1, a[1] + 1)}
            cb = {(b[0], b[1]), (b[0] + 1, b[1]), (b[0], b[1] + 1), (b[0] + 1, b[1] + 1)}
            options = sorted((ca & cb) & lat)
        else:
            (p,) = pixels
            options = sorted(
                c
                for c in ((p[0], p[1]), (p[0] + 1, p[1]), (p[0], p[1] + 1), (p[0] + 1, p[1] + 1))
                if c in lat
            )
        on_tour = [c for c in options if c in tour_vertices]
        scans.append(on_tour[0] if on_tour else options[0])
    return scans


def _reroute_through(walk: list[Point], scan: Point, hosted: set[Point]):
    """Replace one convex corner of the walk by the diagonal reflex vertex
    `scan` when that preserves length; the classic reflex-vertex reroute."""
    n = len(walk)
    for i in range(1, n - 1):
        a, c, b = walk[i - 1], walk[i], walk[i + 1]
        if c in hosted:
            continue
        if (a[0] + b[0] - c[0], a[1] + b[1] - c[1]) == scan:
            return walk[:i] + [scan] + walk[i + 1 :]
    if n >= 3:
        a, c, b = walk[-2], walk[0], walk[1]
        if c not in hosted and (a[0] + b[0] - c[0], a[1] + b[1] - c[1]) == scan:
            return [scan] + walk[1:-1] + [scan]
    return None


def _attach_indices(walk: list[Point], scans: list[Point]) -> list[int]:
    first: dict[Point, int] = {}
    for i, v in enumerate(walk):
        first.setdefault(v, i)
    out = []
    for s in scans:
        if s in first:
            out.append(first[s])
        else:
            out.append(
                min(
                    range(len(walk)),
                    key=lambda i: (
                        abs(walk[i][0] - s[0]) + abs(walk[i][1] - s[1]),
                        walk[i],
                    ),
                )
            )
    return out


def mwpdv_rect_solve(
    P: Polyomino, cost: CostModel, mode: str = "milling"
) -> Solution:
    """Scan cover plus tour for unit rectangular vision.

    When the 2x2-cutter skeleton exists the tour is the even-phase milling
    skeleton: scans are re-centered or rerouted onto it where possible, and
    the tour length equals L_deltaB + L_str + L_M exactly.  When the cutter
    does not fit anywhere (thin instances), small instances get an optimal
    tour through the constructed scans and large ones a structural tour
    visiting every grid point of the region.
    """
    if cost.scan_metric != "linf" or int(round(cost.r)) != 1:
        raise ValueError("the rectangular solver requires linf vision with r = 1")
    if cost.tour_metric != "l1":
        raise ValueError("the rectangular solver measures tours in L1")
    if not P.is_connected:
        if mode == "milling":
            raise Disconnected("milling requires a connected polyomino")
        trace = scan_cover(P)
        sol = _lawnmowing_tour(P, cost, trace)
        cert = coverage_check(P, sol.scans, cost, mode)
        assert cert.covered
        sol.meta["coverage_ok"] = True
        return sol
    trace = scan_cover(P)

    try:
        walk, decomp = afm_tour(P, phase=0)
        vertices = set(walk)
        scans = _recenter_scans(trace, vertices, P)
        hosted = set(scans)
        for s in sorted(set(scans) - vertices):
            rerouted = _reroute_through(walk, s, hosted)
            if rerouted is not None:
                walk = rerouted
                vertices = set(walk)
        meta = {
            "algorithm": "rect-afm",
            "phase": decomp.phase,
            "L_deltaB": decomp.l_delta_b,
            "L_str": decomp.l_str,
            "L_M": decomp.l_m,
            "scan_classes": {k: len(v) for k, v in trace.classes().items()},
            "off_tour_scans": sorted(set(scans) - vertices),
        }
        sol = Solution.build(walk, scans, _attach_indices(walk, scans), cost, meta)
    except (EmptyOffset, NarrowCorridor, Disconnected):
        sol = _thin_instance_solve(P, cost, trace)
    cert = coverage_check(P, sol.scans, cost, mode)
    assert cert.covered, f"solver produced an uncovered pixel: {cert.witness_pixel}"
    sol.meta["coverage_ok"] = True
    return sol


def _lawnmowing_tour(P: Polyomino, cost: CostModel, trace: ScanCoverTrace) -> Solution:
    """Free-travel tour through the scans: optimal for at most 15 of them,
    nearest-neighbor otherwise.  Guarantee-free (disconnected regions have
    no milling baseline)."""
    scans = list(trace.all_scans)
    pts = sorted(set(scans))
    if len(pts) <= 15:
        from .oracle import Budget, exact_tour_order

        _, order = exact_tour_order(pts, "l1", containment=None, budget=Budget())
    else:
        order = [pts[0]]
        left = set(pts[1:])
        while left:
            cur = order[-1]
            nxt = min(left, key=lambda q: (abs(q[0] - cur[0]) + abs(q[1] - cur[1]), q))
            order.append(nxt)
            left.remove(nxt)
    walk = order + [order[0]] if len(order) > 1 else order
    meta = {"algorithm": "rect-lawnmowing"}
    return Solution.build(walk, scans, _attach_indices(walk, scans), cost, meta)


def _thin_instance_solve(P: Polyomino, cost: CostModel, trace: ScanCoverTrace) -> Solution:
    scans = list(trace.all_scans)
    if len(set(scans)) <= 15:
        from .oracle import Budget, exact_tour_order

        try:
            length, order = exact_tour_order(
                sorted(set(scans)), "l1", containment=P, budget=Budget()
            )
            walk = _grid_tour_polyline(P, order)
            meta = {"algorithm": "rect-heldkarp"}
            return Solution.build(walk, scans, _attach_indices(walk, scans), cost, meta)
        except InstanceTooLarge:
            pass
    from .circular import lattice_visit_tour

    walk, _ = lattice_visit_tour(P, visit="all")
    meta = {"algorithm": "rect-structural"}
    return Solution.build(walk, scans, _attach_indices(walk, scans), cost, meta)


def _grid_tour_polyline(P: Polyomino, order: list[Point]) -> list[Point]:
    from .geometry import lattice_adjacency, lattice_path

    if len(order) == 1:
        return [order[0]]
    adj = lattice_adjacency(P)
    walk = [order[0]]
    for a, b in zip(order, order[1:] + [order[0]]):
        seg = lattice_path(P, a, {b}, adj)
        walk.extend(seg[1:])
    return walk
