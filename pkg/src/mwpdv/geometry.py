"""Exact lattice geometry for polyomino scanning and milling.

A pixel is the closed unit square [x, x+1] x [y, y+1], addressed by its
lower-left corner (x, y).  Everything in this module is exact integer
arithmetic except the L2 coverage test, which carries an explicit 1e-9
tolerance.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import (
    Disconnected,
    DisconnectedGraph,
    EmptyOffset,
    OddDegree,
    ParityViolation,
)

Pixel = tuple[int, int]
Point = tuple[int, int]

EDGE_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))

TOL = 1e-9


# ---------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class Polyomino:
    """A finite set of integer unit pixels.  Holes and disconnected sets are
    representable; algorithms that need connectivity check it explicitly."""

    pixels: frozenset[Pixel]

    def __post_init__(self):
        if not self.pixels:
            raise ValueError("polyomino must contain at least one pixel")
        for p in self.pixels:
            if not (isinstance(p[0], int) and isinstance(p[1], int)):
                raise ValueError(f"pixel coordinates must be integers: {p!r}")

    @classmethod
    def from_pixels(cls, pixels: Iterable[Pixel]) -> "Polyomino":
        return cls(frozenset((int(x), int(y)) for x, y in pixels))

    @classmethod
    def rectangle(cls, width: int, height: int, x0: int = 0, y0: int = 0) -> "Polyomino":
        return cls.from_pixels(
            (x0 + i, y0 + j) for i in range(width) for j in range(height)
        )

    @classmethod
    def from_ascii(cls, text: str, full: str = "#") -> "Polyomino":
        """Rows are listed top to bottom, so the last text row is y = 0.
        Common leading whitespace is ignored."""
        import textwrap

        rows = [r for r in textwrap.dedent(text).splitlines() if r.strip()]
        pixels = set()
        for j, row in enumerate(reversed(rows)):
            for i, ch in enumerate(row):
                if ch == full:
                    pixels.add((i, j))
        return cls.from_pixels(pixels)

    @property
    def n_pixels(self) -> int:
        return len(self.pixels)

    @cached_property
    def bounds(self) -> tuple[int, int, int, int]:
        """(xmin, ymin, xmax, ymax) over pixel lower-left corners."""
        xs = [p[0] for p in self.pixels]
        ys = [p[1] for p in self.pixels]
        return min(xs), min(ys), max(xs), max(ys)

    def __contains__(self, pixel: Pixel) -> bool:
        return pixel in self.pixels

    @cached_property
    def is_connected(self) -> bool:
        """4-connectivity; diagonal contact does not connect."""
        start = min(self.pixels)
        seen = {start}
        queue = deque([start])
        while queue:
            x, y = queue.popleft()
            for dx, dy in EDGE_STEPS:
                q = (x + dx, y + dy)
                if q in self.pixels and q not in seen:
                    seen.add(q)
                    queue.append(q)
        return len(seen) == len(self.pixels)

    @cached_property
    def lattice_points(self) -> frozenset[Point]:
        """All integer points of the closed region (pixel corners)."""
        pts = set()
        for x, y in self.pixels:
            pts.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
        return frozenset(pts)

    @cached_property
    def interior_lattice_points(self) -> frozenset[Point]:
        """Lattice points with all four incident pixels present."""
        return frozenset(
            g for g in self.lattice_points if len(self.incident_pixels(g)) == 4
        )

    def incident_pixels(self, point: Point) -> tuple[Pixel, ...]:
        """The pixels of this polyomino touching `point` (at most four)."""
        x, y = point
        cand = ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y))
        return tuple(p for p in cand if p in self.pixels)

    def translated(self, dx: int, dy: int) -> "Polyomino":
        return Polyomino.from_pixels((x + dx, y + dy) for x, y in self.pixels)


@dataclass(frozen=True)
class CostModel:
    """Scan time c, visibility radius r, and the two metrics in play."""

    c: float
    r: float = 1.0
    scan_metric: str = "linf"  # "linf" | "l2"
    tour_metric: str = "l1"  # "l1" | "l2"

    def __post_init__(self):
        if not math.isfinite(self.c) or self.c < 0:
            raise ValueError("scan time c must be finite and nonnegative")
        if self.r <= 0:
            raise ValueError("visibility radius r must be positive")
        if self.scan_metric not in ("linf", "l2"):
            raise ValueError(f"unknown scan metric {self.scan_metric!r}")
        if self.tour_metric not in ("l1", "l2"):
            raise ValueError(f"unknown tour metric {self.tour_metric!r}")


def polyline_length(points, metric: str = "l1") -> float:
    total = 0.0
    for a, b in zip(points, points[1:]):
        dx = b[0] - a[0]
        dy = b[1] - a[1]
        if metric == "l1":
            total += abs(dx) + abs(dy)
        else:
            total += math.hypot(dx, dy)
    return total


@dataclass
class Solution:
    """A closed tour plus the scan points taken along it.

    `scan_attach[i]` is the index of the tour vertex at (or, for the rare
    unreachable interior scans of the rectilinear solver, nearest to) scan i.
    """

    tour: list[tuple[float, float]]
    scans: list[tuple[float, float]]
    scan_attach: list[int]
    cost: CostModel
    tour_length: float
    scan_count: int
    total_cost: float
    meta: dict = field(default_factory=dict)

    @classmethod
    def build(cls, tour, scans, attach, cost: CostModel, meta=None) -> "Solution":
        tour = [tuple(v) for v in tour]
        scans = [tuple(s) for s in scans]
        if len(tour) > 1 and tour[0] != tour[-1]:
            raise ValueError("tour must be closed (first vertex = last vertex)")
        if len(attach) != len(scans):
            raise ValueError("one attach index per scan required")
        length = polyline_length(tour, cost.tour_metric)
        return cls(
            tour=tour,
            scans=scans,
            scan_attach=list(attach),
            cost=cost,
            tour_length=length,
            scan_count=len(scans),
            total_cost=cost.c * len(scans) + length,
            meta=dict(meta or {}),
        )


# ---------------------------------------------------------------------------
# cutter offsets


def offset_centers(P: Polyomino, half_width: int = 1) -> frozenset[Point]:
    """Integer points where a (2h x 2h) cutter centered there fits inside P."""
    h = half_width
    if not (isinstance(h, int) and h >= 1):
        raise ValueError("cutter half-width must be a positive integer")
    centers = set()
    for g in P.lattice_points:
        x, y = g
        if all(
            (x + i, y + j) in P.pixels for i in range(-h, h) for j in range(-h, h)
        ):
            centers.add(g)
    return frozenset(centers)


def _center_cells(centers: frozenset[Point]) -> set[Point]:
    """Unit cells of the offset region: all four corners feasible."""
    return {
        (x, y)
        for (x, y) in centers
        if (x + 1, y) in centers and (x, y + 1) in centers and (x + 1, y + 1) in centers
    }


def _boundary_multigraph(centers: frozenset[Point]) -> tuple[Counter, list[Point]]:
    """Edges of the traced offset boundary with multiplicities, plus isolated
    point pieces.  Degenerate corridor edges (no incident 2D cell) count twice."""
    cells = _center_cells(centers)
    edges: Counter = Counter()
    for x, y in centers:
        if (x + 1, y) in centers:
            n = ((x, y) in cells) + ((x, y - 1) in cells)
            if n < 2:
                edges[((x, y), (x + 1, y))] = 2 if n == 0 else 1
        if (x, y + 1) in centers:
            n = ((x, y) in cells) + ((x - 1, y) in cells)
            if n < 2:
                edges[((x, y), (x, y + 1))] = 2 if n == 0 else 1
    touched = {v for e in edges for v in e}
    isolated = sorted(
        g
        for g in centers
        if g not in touched
        and not any((g[0] + dx, g[1] + dy) in centers for dx, dy in EDGE_STEPS)
    )
    return edges, isolated


def euler_circuit(edges: Counter, start: Point) -> list[Point]:
    """Deterministic Hierholzer circuit over an even-degree multigraph.
    Edges are unordered vertex pairs with multiplicities."""
    adj: dict[Point, Counter] = {}
    for (a, b), m in edges.items():
        adj.setdefault(a, Counter())[b] += m
        adj.setdefault(b, Counter())[a] += m
    stack = [start]
    path: list[Point] = []
    while stack:
        v = stack[-1]
        nbrs = adj.get(v)
        nxt = min((u for u, m in nbrs.items() if m > 0), default=None) if nbrs else None
        if nxt is None:
            path.append(stack.pop())
        else:
            adj[v][nxt] -= 1
            adj[nxt][v] -= 1
            stack.append(nxt)
    path.reverse()
    return path


def walk_length(walk) -> int:
    return sum(
        abs(b[0] - a[0]) + abs(b[1] - a[1]) for a, b in zip(walk, walk[1:])
    )


def trace_offset_boundary(P: Polyomino, cutter_half_width: int = 1) -> list[list[Point]]:
    """Closed walks tracing the boundary of the cutter-offset region.

    Degenerate pieces appear as out-and-back walks (a point piece is a
    single-vertex walk of length zero).  Walks are returned sorted by their
    lexicographically smallest vertex.
    """
    if not P.is_connected:
        raise Disconnected("offset tracing requires a connected polyomino")
    centers = offset_centers(P, cutter_half_width)
    if not centers:
        raise EmptyOffset(
            f"no {2 * cutter_half_width}x{2 * cutter_half_width} cutter placement fits"
        )
    edges, isolated = _boundary_multigraph(centers)
    comp_edges: dict[Point, Counter] = {}
    seen: set[Point] = set()
    adj: dict[Point, set[Point]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    loops: list[list[Point]] = [[g] for g in isolated]
    for root in sorted(adj):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        sub = Counter({e: m for e, m in edges.items() if e[0] in comp})
        loops.append(euler_circuit(sub, min(comp)))
    loops.sort(key=lambda w: min(w))
    return loops


def offset_boundary_length(loops: list[list[Point]]) -> int:
    return sum(walk_length(w) for w in loops)


# ---------------------------------------------------------------------------
# strips and matching parts


@dataclass(frozen=True)
class Strip:
    """A horizontal chord of the offset region: the segment (x1,y)-(x2,y)."""

    y: int
    x1: int
    x2: int

    @property
    def length(self) -> int:
        return self.x2 - self.x1

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return (self.x1, self.y), (self.x2, self.y)


def strip_decomposition(
    centers: frozenset[Point], spacing: int, phase: int
) -> tuple[list[Strip], int]:
    """Maximal horizontal chords of the offset region on rows y = phase (mod
    spacing).  Empty input gives an empty decomposition."""
    if spacing <= 0:
        raise ValueError("spacing must be positive")
    strips: list[Strip] = []
    by_row: dict[int, list[int]] = {}
    for x, y in centers:
        if (y - phase) % spacing == 0:
            by_row.setdefault(y, []).append(x)
    for y in sorted(by_row):
        xs = sorted(by_row[y])
        x1 = xs[0]
        prev = xs[0]
        for x in xs[1:] + [None]:
            if x is None or x != prev + 1:
                strips.append(Strip(y, x1, prev))
                if x is not None:
                    x1 = x
            prev = x if x is not None else prev
    return strips, sum(s.length for s in strips)


def _walk_positions(walk: list[Point]) -> dict[Point, int]:
    pos: dict[Point, int] = {}
    for i, v in enumerate(walk[:-1] if len(walk) > 1 else walk):
        pos.setdefault(v, i)
    return pos


def matching_parts(
    strips: list[Strip], loops: list[list[Point]]
) -> tuple[list[list[Point]], int]:
    """For each boundary loop, the shorter of the two alternating arc sets
    between consecutive strip endpoints.  Ties go to the portion containing
    the lexicographically smallest vertex.
    """
    endpoint_list: list[Point] = []
    for s in strips:
        endpoint_list.extend(s.endpoints)
    arcs: list[list[Point]] = []
    total = 0
    remaining = Counter(endpoint_list)
    for walk in loops:
        if len(walk) <= 1:
            continue
        pos = _walk_positions(walk)
        # endpoints hitting a loop an even number of times need no arc
        here = sorted(p for p in remaining if remaining[p] % 2 == 1 and p in pos)
        for p in list(remaining):
            if p in pos:
                del remaining[p]
        if not here:
            continue
        if len(here) % 2 != 0:
            raise ParityViolation(
                f"loop starting at {walk[0]} carries {len(here)} strip endpoints"
            )
        idxs = sorted(pos[p] for p in here)
        n = len(walk) - 1
        classes: list[list[tuple[int, int]]] = [[], []]
        for k in range(len(idxs)):
            a = idxs[k]
            b = idxs[(k + 1) % len(idxs)]
            classes[k % 2].append((a, b))
        def arc_vertices(a, b):
            if b <= a:
                b += n
            return [walk[i % n] for i in range(a, b + 1)]
        def cls_len(cls):
            return sum((b - a) % n for a, b in cls)
        def cls_min_vertex(cls):
            return min(min(arc_vertices(a, b)) for a, b in cls)
        l0, l1 = cls_len(classes[0]), cls_len(classes[1])
        if l0 != l1:
            chosen = classes[0] if l0 < l1 else classes[1]
        else:
            chosen = min(classes, key=cls_min_vertex)
        for a, b in chosen:
            arc = arc_vertices(a, b)
            arcs.append(arc)
            total += (b - a) % n
    leftover = sorted(p for p in remaining if remaining[p] > 0)
    if leftover:
        raise ParityViolation(f"strip endpoints not on any loop: {leftover}")
    return arcs, total


# ---------------------------------------------------------------------------
# Euler tours over explicit segment multigraphs


def euler_tour(edges: Iterable[tuple[Point, Point]]) -> tuple[list[Point], int]:
    """Closed tour traversing every listed segment exactly once.

    Segments are axis-parallel vertex pairs; repeated pairs are parallel
    edges.  Raises OddDegree / DisconnectedGraph when no circuit exists.
    """
    counter: Counter = Counter()
    total = 0
    for a, b in edges:
        a, b = (a, b) if a <= b else (b, a)
        counter[(a, b)] += 1
        total += abs(b[0] - a[0]) + abs(b[1] - a[1])
    if not counter:
        raise DisconnectedGraph("no edges")
    deg: Counter = Counter()
    for (a, b), m in counter.items():
        deg[a] += m
        deg[b] += m
    odd = sorted(v for v, d in deg.items() if d % 2)
    if odd:
        raise OddDegree(f"odd-degree vertices: {odd[:4]}")
    verts = sorted(deg)
    adj: dict[Point, set[Point]] = {}
    for a, b in counter:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != len(verts):
        raise DisconnectedGraph("edge multigraph is not connected")
    walk = euler_circuit(counter, verts[0])
    return walk, total


# ---------------------------------------------------------------------------
# boundary tracing of the polyomino itself


def boundary_cycles(P: Polyomino) -> tuple[list[Point], list[list[Point]]]:
    """(outer cycle, hole cycles) as closed unit-step walks.

    The outer cycle runs counterclockwise starting at the lexicographically
    smallest boundary point; hole cycles come out clockwise.  Requires a
    connected polyomino.
    """
    if not P.is_connected:
        raise Disconnected("boundary tracing requires a connected polyomino")
    succ: dict[Point, list[Point]] = {}

    def add(a: Point, b: Point):
        succ.setdefault(a, []).append(b)

    for x, y in P.pixels:
        if (x, y - 1) not in P.pixels:  # bottom edge, P above: walk +x
            add((x, y), (x + 1, y))
        if (x, y + 1) not in P.pixels:  # top edge, P below: walk -x
            add((x + 1, y + 1), (x, y + 1))
        if (x - 1, y) not in P.pixels:  # left edge, P right: walk -y
            add((x, y + 1), (x, y))
        if (x + 1, y) not in P.pixels:  # right edge, P left: walk +y
            add((x + 1, y), (x + 1, y + 1))

    LEFT = {(1, 0): (0, 1), (0, 1): (-1, 0), (-1, 0): (0, -1), (0, -1): (1, 0)}
    used: set[tuple[Point, Point]] = set()
    cycles: list[list[Point]] = []
    for start in sorted(succ):
        for first in sorted(succ[start]):
            if (start, first) in used:
                continue
            walk = [start, first]
            used.add((start, first))
            while walk[-1] != start or len(walk) == 2:
                v = walk[-1]
                d = (v[0] - walk[-2][0], v[1] - walk[-2][1])
                # prefer the sharpest left turn to keep the traced face simple
                order = [LEFT[d], d, LEFT[LEFT[LEFT[d]]], LEFT[LEFT[d]]]
                for nd in order:
                    cand = (v[0] + nd[0], v[1] + nd[1])
                    if cand in succ.get(v, []) and (v, cand) not in used:
                        used.add((v, cand))
                        walk.append(cand)
                        break
                else:
                    if v == start:
                        break
                    raise AssertionError("boundary walk got stuck")
            cycles.append(walk)
    cycles.sort(key=lambda w: min(w))
    outer = cycles[0]
    assert signed_area(outer) > 0, "outer boundary should be counterclockwise"
    return outer, cycles[1:]


def signed_area(walk: list[Point]) -> float:
    s = 0
    for a, b in zip(walk, walk[1:]):
        s += a[0] * b[1] - b[0] * a[1]
    return s / 2.0


def perimeter(P: Polyomino) -> int:
    outer, holes = boundary_cycles(P)
    return walk_length(outer) + sum(walk_length(h) for h in holes)


def turn_counts(walk: list[Point]) -> tuple[int, int]:
    """(convex, reflex) turn counts of a simple closed rectilinear walk,
    oriented so that convex means turning toward the enclosed side."""
    ccw = signed_area(walk) > 0
    steps = [
        (b[0] - a[0], b[1] - a[1]) for a, b in zip(walk, walk[1:])
    ]
    convex = reflex = 0
    for d1, d2 in zip(steps, steps[1:] + steps[:1]):
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross == 0:
            continue
        if (cross > 0) == ccw:
            convex += 1
        else:
            reflex += 1
    return convex, reflex


# ---------------------------------------------------------------------------
# lattice graph of the closed region (point-robot moves)


def lattice_adjacency(P: Polyomino) -> dict[Point, list[Point]]:
    """Unit moves along segments of the closed region: a segment is valid
    when at least one flanking pixel belongs to P."""
    adj: dict[Point, list[Point]] = {g: [] for g in P.lattice_points}
    for x, y in P.lattice_points:
        if (x + 1, y) in adj and ((x, y) in P.pixels or (x, y - 1) in P.pixels):
            adj[(x, y)].append((x + 1, y))
            adj[(x + 1, y)].append((x, y))
        if (x, y + 1) in adj and ((x, y) in P.pixels or (x - 1, y) in P.pixels):
            adj[(x, y)].append((x, y + 1))
            adj[(x, y + 1)].append((x, y))
    for v in adj:
        adj[v].sort()
    return adj


def lattice_distances(P: Polyomino, source: Point, adj=None) -> dict[Point, int]:
    adj = adj or lattice_adjacency(P)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def lattice_path(P: Polyomino, source: Point, targets: set[Point], adj=None):
    """Shortest unit-step path from source to the nearest target (BFS with
    deterministic neighbor order); None if unreachable."""
    adj = adj or lattice_adjacency(P)
    if source in targets:
        return [source]
    prev: dict[Point, Point] = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u in prev:
                continue
            prev[u] = v
            if u in targets:
                path = [u]
                while path[-1] != source:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            queue.append(u)
    return None


# ---------------------------------------------------------------------------
# coverage certificates


@dataclass(frozen=True)
class CoverageCertificate:
    covered: bool
    witness_pixel: Optional[Pixel] = None
    witness_point: Optional[tuple[float, float]] = None
    scans_inside: bool = True


def linf_covered_pixels(P: Polyomino, scan: Point, r: int = 1) -> list[Pixel]:
    """Pixels of P fully inside the L-infinity square of radius r at an
    integer scan point.  For r = 1 these are the incident pixels; sight lines
    within a covered pixel are never blocked, so no visibility test is
    needed."""
    x, y = scan
    out = []
    for px in range(x - r, x + r):
        for py in range(y - r, y + r):
            if (px, py) in P.pixels:
                out.append((px, py))
    return out


def pixel_worst_point(
    pixel: Pixel, scans: list[tuple[float, float]]
) -> tuple[float, tuple[float, float]]:
    """Max over the pixel of the distance to the nearest scan, and a point
    attaining it.  Exact up to floating point: the maximum is attained at a
    pixel corner, at a bisector/edge crossing, or at a circumcenter."""
    x, y = pixel
    corners = [(float(x), float(y)), (x + 1.0, y), (x, y + 1.0), (x + 1.0, y + 1.0)]
    if not scans:
        return math.inf, (x + 0.5, y + 0.5)
    cands = list(corners)
    n = len(scans)
    edges = [
        ((x, y), (x + 1, y)),
        ((x, y + 1), (x + 1, y + 1)),
        ((x, y), (x, y + 1)),
        ((x + 1, y), (x + 1, y + 1)),
    ]
    for i in range(n):
        for j in range(i + 1, n):
            (ax, ay), (bx, by) = scans[i], scans[j]
            mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
            dx, dy = bx - ax, by - ay
            # bisector: dx*(px-mx) + dy*(py-my) = 0
            for (ex1, ey1), (ex2, ey2) in edges:
                if ey1 == ey2:  # horizontal edge: solve for px
                    if abs(dx) < TOL:
                        continue
                    px = mx - dy * (ey1 - my) / dx
                    if x - TOL <= px <= x + 1 + TOL:
                        cands.append((px, float(ey1)))
                else:
                    if abs(dy) < TOL:
                        continue
                    py = my - dx * (ex1 - mx) / dy
                    if y - TOL <= py <= y + 1 + TOL:
                        cands.append((float(ex1), py))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                (ax, ay), (bx, by), (cx, cy) = scans[i], scans[j], scans[k]
                d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
                if abs(d) < TOL:
                    continue
                ux = (
                    (ax * ax + ay * ay) * (by - cy)
                    + (bx * bx + by * by) * (cy - ay)
                    + (cx * cx + cy * cy) * (ay - by)
                ) / d
                uy = (
                    (ax * ax + ay * ay) * (cx - bx)
                    + (bx * bx + by * by) * (ax - cx)
                    + (cx * cx + cy * cy) * (bx - ax)
                ) / d
                if x - TOL <= ux <= x + 1 + TOL and y - TOL <= uy <= y + 1 + TOL:
                    cands.append((ux, uy))
    best_d, best_p = -1.0, corners[0]
    for px, py in cands:
        d = min(math.hypot(px - sx, py - sy) for sx, sy in scans)
        if d > best_d:
            best_d, best_p = d, (px, py)
    return best_d, best_p


def coverage_check(
    P: Polyomino,
    scans,
    cost: CostModel,
    mode: str = "milling",
) -> CoverageCertificate:
    """Exact per-pixel coverage certificate.

    L-infinity: a pixel is covered when it lies fully inside some scan
    square (integer radius, integer scan points).  L2: a pixel is covered
    when it lies inside the union of scan disks, decided by the worst-point
    distance with a 1e-9 tolerance.  In milling mode all scan points must be
    in the closed region; the flag is reported, not raised.
    """
    scans = [tuple(s) for s in scans]
    inside = True
    if mode == "milling":
        lat = P.lattice_points
        for s in scans:
            si = (int(round(s[0])), int(round(s[1])))
            if (
                abs(s[0] - si[0]) < TOL
                and abs(s[1] - si[1]) < TOL
                and si in lat
            ):
                continue
            if not _point_in_closed_region(P, s):
                inside = False
                break
    if cost.scan_metric == "linf":
        r = int(round(cost.r))
        covered: set[Pixel] = set()
        for s in scans:
            si = (int(round(s[0])), int(round(s[1])))
            covered.update(linf_covered_pixels(P, si, r))
        missing = sorted(P.pixels - covered)
        if missing:
            m = missing[0]
            return CoverageCertificate(False, m, (m[0] + 0.5, m[1] + 0.5), inside)
        return CoverageCertificate(True, None, None, inside)
    # L2: union-of-disks containment per pixel
    r = cost.r
    for pixel in sorted(P.pixels):
        px, py = pixel
        near = [
            s
            for s in scans
            if _dist_point_rect(s, px, py) <= r + 1e-6
        ]
        d, worst = pixel_worst_point(pixel, near)
        if d > r + TOL:
            return CoverageCertificate(False, pixel, worst, inside)
    return CoverageCertificate(True, None, None, inside)


def _dist_point_rect(s, px, py) -> float:
    dx = max(px - s[0], 0.0, s[0] - (px + 1))
    dy = max(py - s[1], 0.0, s[1] - (py + 1))
    return math.hypot(dx, dy)


def _point_in_closed_region(P: Polyomino, s) -> bool:
    fx, fy = math.floor(s[0]), math.floor(s[1])
    for px in (fx - 1, fx):
        for py in (fy - 1, fy):
            if (px, py) in P.pixels:
                if px - TOL <= s[0] <= px + 1 + TOL and py - TOL <= s[1] <= py + 1 + TOL:
                    return True
    return False


def sweep_covers(P: Polyomino, skeleton_vertices: set[Point]) -> Optional[Pixel]:
    """First pixel (lex order) not swept by a 2x2 cutter whose center visits
    the given integer vertices; None when everything is swept."""
    for pixel in sorted(P.pixels):
        x, y = pixel
        if not any(
            c in skeleton_vertices
            for c in ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))
        ):
            return pixel
    return None
