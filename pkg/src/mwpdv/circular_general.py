"""Circular scanning of simple rectilinear polygons with radius r and
feature size a (minimum edge length).

Construction: two boundary tours at inward square-offsets r/2 and 3r/2, two
shifted horizontal strip families at spacing 2r (phases 0 and r) on the
depth-r region, scans every sqrt(3)*r along each carrier with scans at all
corners, and one closed tour gluing everything with shorter matching arcs
on the outer boundary tour.  Coverage is certified by a dense sampler at
resolution min(a, r)/64.

Offsets use mitred (square) erosion, so all corners stay sharp and the
length identity  L_TR1 + L_TR2 = 2 * L_deltaB  holds exactly whenever the
three offsets are topologically identical.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
import shapely
from scipy.spatial import cKDTree
from shapely.geometry import LineString, MultiPolygon, Polygon as ShPolygon
from shapely.geometry.polygon import orient

from .errors import OffsetCollapse, TopologyChange
from .geometry import CostModel, Polyomino, Solution, boundary_cycles

TOL = 1e-9
SQRT3 = math.sqrt(3.0)

FPoint = tuple[float, float]


@dataclass(frozen=True)
class RectPolygon:
    """Simple rectilinear polygon, counterclockwise, no holes."""

    vertices: tuple[FPoint, ...]

    def __post_init__(self):
        v = self.vertices
        if len(v) < 4:
            raise ValueError("a rectilinear polygon needs at least 4 vertices")
        if v[0] == v[-1]:
            raise ValueError("do not repeat the first vertex")
        n = len(v)
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            if not (abs(a[0] - b[0]) < TOL or abs(a[1] - b[1]) < TOL):
                raise ValueError(f"edge {a}-{b} is not axis-parallel")
            if abs(a[0] - b[0]) < TOL and abs(a[1] - b[1]) < TOL:
                raise ValueError("zero-length edge")
        poly = ShPolygon(v)
        if not poly.is_valid:
            raise ValueError("polygon is not simple")
        if poly.exterior.is_ccw is False:
            raise ValueError("vertices must be counterclockwise")

    @classmethod
    def from_polyomino(cls, P: Polyomino) -> "RectPolygon":
        outer, holes = boundary_cycles(P)
        if holes:
            raise ValueError("polyomino has holes")
        pts = outer[:-1]
        out = []
        n = len(pts)
        for i in range(n):
            a, b, c = pts[(i - 1) % n], pts[i], pts[(i + 1) % n]
            if (b[0] - a[0]) * (c[1] - b[1]) != (b[1] - a[1]) * (c[0] - b[0]):
                out.append((float(b[0]), float(b[1])))
        return cls(tuple(out))

    @property
    def feature_size(self) -> float:
        v = self.vertices
        n = len(v)
        return min(
            abs(v[i][0] - v[(i + 1) % n][0]) + abs(v[i][1] - v[(i + 1) % n][1])
            for i in range(n)
        )

    @property
    def perimeter(self) -> float:
        v = self.vertices
        n = len(v)
        return sum(
            abs(v[i][0] - v[(i + 1) % n][0]) + abs(v[i][1] - v[(i + 1) % n][1])
            for i in range(n)
        )

    def shapely(self) -> ShPolygon:
        return ShPolygon(self.vertices)


def _inward_offset(poly: ShPolygon, depth: float):
    """Square (mitred) inward offset; None when the region vanishes."""
    res = poly.buffer(-depth, join_style=2, mitre_limit=16.0)
    if res.is_empty:
        return None
    if isinstance(res, MultiPolygon):
        raise TopologyChange(f"offset at depth {depth} splits into {len(res.geoms)} pieces")
    if list(res.interiors):
        raise TopologyChange(f"offset at depth {depth} develops holes")
    return res


def _ring(poly: ShPolygon) -> list[FPoint]:
    """Closed ccw vertex list of the exterior ring."""
    ring = list(orient(poly, sign=1.0).exterior.coords)
    return [(float(x), float(y)) for x, y in ring]


def _ring_length(ring: list[FPoint]) -> float:
    return sum(
        abs(b[0] - a[0]) + abs(b[1] - a[1]) for a, b in zip(ring, ring[1:])
    )


@dataclass
class BoundaryTours:
    tr1: list[FPoint]
    tr2: list[FPoint] | None
    l_tr1: float
    l_tr2: float
    l_delta_b: float
    identity_applicable: bool
    identity_ok: bool


def boundary_tours(P: RectPolygon, r: float) -> BoundaryTours:
    """Offset loops at depths r/2 and 3r/2, with the depth-r loop length.

    Raises OffsetCollapse when even the shallow tour vanishes; deeper
    offsets are allowed to collapse (degenerate instances), in which case
    the length identity is reported as not applicable.
    """
    poly = P.shapely()
    o1 = _inward_offset(poly, r / 2.0)
    if o1 is None:
        raise OffsetCollapse(f"offset at depth r/2 = {r / 2} is empty")
    ob = _inward_offset(poly, r)
    o2 = _inward_offset(poly, 1.5 * r)
    tr1 = _ring(o1)
    l_tr1 = _ring_length(tr1)
    tr2 = _ring(o2) if o2 is not None else None
    l_tr2 = _ring_length(tr2) if tr2 else 0.0
    l_db = _ring_length(_ring(ob)) if ob is not None else 0.0
    applicable = ob is not None and o2 is not None
    if applicable and not (
        len(tr1) == len(tr2) == len(_ring(ob))
    ):
        raise TopologyChange("offset loops lost or gained corners between depths")
    identity_ok = applicable and abs(l_tr1 + l_tr2 - 2.0 * l_db) <= 1e-9 * max(1.0, l_db)
    return BoundaryTours(
        tr1=tr1,
        tr2=tr2,
        l_tr1=l_tr1,
        l_tr2=l_tr2,
        l_delta_b=l_db,
        identity_applicable=applicable,
        identity_ok=identity_ok,
    )


@dataclass(frozen=True)
class FStrip:
    y: float
    x1: float
    x2: float

    @property
    def length(self) -> float:
        return self.x2 - self.x1


def _chords_at(poly: ShPolygon, y: float) -> list[tuple[float, float]]:
    minx, _, maxx, _ = poly.bounds
    line = LineString([(minx - 1.0, y), (maxx + 1.0, y)])
    inter = poly.intersection(line)
    segs = []
    if inter.is_empty:
        return segs
    geoms = getattr(inter, "geoms", [inter])
    for g in geoms:
        if g.geom_type == "LineString":
            xs = [c[0] for c in g.coords]
            segs.append((min(xs), max(xs)))
        elif g.geom_type == "Point":
            segs.append((g.x, g.x))
    segs.sort()
    merged: list[tuple[float, float]] = []
    for x1, x2 in segs:
        if merged and x1 <= merged[-1][1] + 1e-9:
            merged[-1] = (merged[-1][0], max(merged[-1][1], x2))
        else:
            merged.append((x1, x2))
    return merged


def shifted_strips(P: RectPolygon, r: float) -> tuple[list[FStrip], list[FStrip]]:
    """Two horizontal strip families at spacing 2r (absolute phases 0 and r)
    carried by the depth-r region; empty when nothing lies deeper than 2r."""
    poly = P.shapely()
    deep = _offset_or_none(poly, 2.0 * r)
    if deep is None:
        return [], []
    band = _offset_or_none(poly, r)
    assert band is not None
    _, miny, _, maxy = band.bounds
    out: tuple[list[FStrip], list[FStrip]] = ([], [])
    for fam, phase in enumerate((0.0, r)):
        k0 = math.ceil((miny - phase) / (2.0 * r) - TOL)
        k1 = math.floor((maxy - phase) / (2.0 * r) + TOL)
        for k in range(k0, k1 + 1):
            y = phase + 2.0 * r * k
            for x1, x2 in _chords_at(band, y):
                out[fam].append(FStrip(y, x1, x2))
    return out


def _offset_or_none(poly, depth):
    res = poly.buffer(-depth, join_style=2, mitre_limit=16.0)
    if res.is_empty:
        return None
    if isinstance(res, MultiPolygon):
        # strips only need the pieces; keep the multipolygon
        return res
    return res


def _chain_points(p1: FPoint, p2: FPoint, r: float) -> list[FPoint]:
    """Evenly spaced scan chain from p1 to p2 with gaps at most sqrt(3)*r."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    length = abs(dx) + abs(dy)
    n = max(1, math.ceil(length / (SQRT3 * r) - TOL))
    return [
        (p1[0] + dx * i / n, p1[1] + dy * i / n) for i in range(n + 1)
    ]


def place_circular_scans(
    tours: BoundaryTours, strips: tuple[list[FStrip], list[FStrip]], r: float, a: float
) -> tuple[list[FPoint], list[list[FPoint]]]:
    """Scans along every carrier polyline: one at every corner/endpoint and
    interior points so consecutive scans are at most sqrt(3)*r apart.
    Returns (deduplicated scans, per-carrier chains)."""
    chains: list[list[FPoint]] = []
    for ring in ([tours.tr1] + ([tours.tr2] if tours.tr2 else [])):
        chain: list[FPoint] = []
        for p1, p2 in zip(ring, ring[1:]):
            pts = _chain_points(p1, p2, r)
            chain.extend(pts if not chain else pts[1:])
        chains.append(chain)
    for fam in strips:
        for s in fam:
            chains.append(_chain_points((s.x1, s.y), (s.x2, s.y), r))
    seen: dict[tuple[float, float], FPoint] = {}
    for chain in chains:
        for p in chain:
            seen.setdefault((round(p[0], 9), round(p[1], 9)), p)
    scans = sorted(seen.values())
    return scans, chains


# ---------------------------------------------------------------------------
# tour assembly


def _key(p) -> tuple[float, float]:
    return (round(p[0], 9) + 0.0, round(p[1], 9) + 0.0)


class _SegmentSoup:
    """Axis-parallel segments glued into an even multigraph via splitting at
    crossings and marked points."""

    def __init__(self):
        self.segments: list[tuple[FPoint, FPoint, int]] = []  # (a, b, multiplicity)
        self.marks: list[FPoint] = []

    def add(self, a: FPoint, b: FPoint, mult: int = 1):
        if _key(a) == _key(b):
            return
        self.segments.append((a, b, mult))

    def add_polyline(self, pts: list[FPoint], mult: int = 1):
        for a, b in zip(pts, pts[1:]):
            self.add(a, b, mult)

    def mark(self, p: FPoint):
        self.marks.append(p)

    def _on_segment(self, p, a, b) -> bool:
        if abs(a[1] - b[1]) < TOL:  # horizontal
            y = a[1]
            x1, x2 = min(a[0], b[0]), max(a[0], b[0])
            return abs(p[1] - y) < 1e-9 and x1 - 1e-9 <= p[0] <= x2 + 1e-9
        x = a[0]
        y1, y2 = min(a[1], b[1]), max(a[1], b[1])
        return abs(p[0] - x) < 1e-9 and y1 - 1e-9 <= p[1] <= y2 + 1e-9

    def build(self) -> tuple[Counter, float]:
        cuts: list[set] = [set((_key(a), _key(b))) for a, b, _ in self.segments]
        # crossings between perpendicular segments
        for i, (a1, b1, _) in enumerate(self.segments):
            h1 = abs(a1[1] - b1[1]) < TOL
            for j in range(i + 1, len(self.segments)):
                a2, b2, _ = self.segments[j]
                h2 = abs(a2[1] - b2[1]) < TOL
                if h1 == h2:
                    continue
                (ha, hb) = (a1, b1) if h1 else (a2, b2)
                (va, vb) = (a2, b2) if h1 else (a1, b1)
                p = (va[0], ha[1])
                if self._on_segment(p, ha, hb) and self._on_segment(p, va, vb):
                    cuts[i].add(_key(p))
                    cuts[j].add(_key(p))
        for p in self.marks:
            kp = _key(p)
            for i, (a, b, _) in enumerate(self.segments):
                if self._on_segment(p, a, b):
                    cuts[i].add(kp)
        edges: Counter = Counter()
        total = 0.0
        for (a, b, mult), cut in zip(self.segments, cuts):
            horizontal = abs(a[1] - b[1]) < TOL
            pts = sorted(cut, key=lambda q: q[0] if horizontal else q[1])
            lo, hi = _key(a), _key(b)
            if (lo[0] if horizontal else lo[1]) > (hi[0] if horizontal else hi[1]):
                lo, hi = hi, lo
            pts = [q for q in pts if (lo <= q <= hi) or self._on_segment(q, a, b)]
            for p1, p2 in zip(pts, pts[1:]):
                if p1 == p2:
                    continue
                e = (p1, p2) if p1 <= p2 else (p2, p1)
                edges[e] += mult
                total += mult * (abs(p2[0] - p1[0]) + abs(p2[1] - p1[1]))
        return edges, total


def _ring_positions(ring: list[FPoint], points: list[FPoint]) -> list[tuple[float, FPoint]]:
    """Arc-length position of each point along the closed ring."""
    out = []
    for p in points:
        acc = 0.0
        found = None
        for a, b in zip(ring, ring[1:]):
            seg = abs(b[0] - a[0]) + abs(b[1] - a[1])
            if abs(a[1] - b[1]) < TOL and abs(p[1] - a[1]) < 1e-9:
                x1, x2 = min(a[0], b[0]), max(a[0], b[0])
                if x1 - 1e-9 <= p[0] <= x2 + 1e-9:
                    found = acc + abs(p[0] - a[0])
                    break
            elif abs(a[0] - b[0]) < TOL and abs(p[0] - a[0]) < 1e-9:
                y1, y2 = min(a[1], b[1]), max(a[1], b[1])
                if y1 - 1e-9 <= p[1] <= y2 + 1e-9:
                    found = acc + abs(p[1] - a[1])
                    break
            acc += seg
        if found is None:
            raise AssertionError(f"point {p} is not on the ring")
        out.append((found, p))
    return out


def _ring_arc(ring: list[FPoint], s: float, t: float) -> list[FPoint]:
    """Sub-polyline of the closed ring from arc position s forward to t."""
    total = _ring_length(ring)
    t_adj = t if t > s + TOL else t + total

    def point_at(pos: float) -> FPoint:
        pos %= total
        acc = 0.0
        for a, b in zip(ring, ring[1:]):
            seg = abs(b[0] - a[0]) + abs(b[1] - a[1])
            if acc + seg >= pos - 1e-12:
                f = 0.0 if seg == 0 else (pos - acc) / seg
                return (a[0] + (b[0] - a[0]) * f, a[1] + (b[1] - a[1]) * f)
            acc += seg
        return ring[-1]

    pts = [point_at(s)]
    acc = 0.0
    unrolled = []
    for a, b in zip(ring, ring[1:]):
        seg = abs(b[0] - a[0]) + abs(b[1] - a[1])
        acc += seg
        unrolled.append((acc, b))
    for lap in (0.0, total):
        for pos, v in unrolled:
            q = pos + lap
            if s + TOL < q < t_adj - TOL:
                pts.append(v)
    pts.append(point_at(t_adj))
    return pts


def _matching_arcs_on_ring(
    ring: list[FPoint], endpoints: list[FPoint]
) -> tuple[list[list[FPoint]], float]:
    """Shorter alternating arc class between consecutive endpoint positions;
    ties go to the class containing the lexicographically smallest vertex."""
    if not endpoints:
        return [], 0.0
    pos = sorted(_ring_positions(ring, endpoints))
    total = _ring_length(ring)
    n = len(pos)
    assert n % 2 == 0, "strip endpoints on a closed loop must be even"
    classes: list[list[tuple[float, float]]] = [[], []]
    for k in range(n):
        s = pos[k][0]
        t = pos[(k + 1) % n][0]
        classes[k % 2].append((s, t))

    def cls_len(cls):
        return sum((t - s) % total for s, t in cls)

    l0, l1 = cls_len(classes[0]), cls_len(classes[1])
    if abs(l0 - l1) > TOL:
        chosen = classes[0] if l0 < l1 else classes[1]
        chosen_len = min(l0, l1)
    else:
        arcs0 = [min(_ring_arc(ring, s, t)) for s, t in classes[0]]
        arcs1 = [min(_ring_arc(ring, s, t)) for s, t in classes[1]]
        chosen = classes[0] if min(arcs0) <= min(arcs1) else classes[1]
        chosen_len = l0
    return [_ring_arc(ring, s, t) for s, t in chosen], chosen_len


def circular_general_solve(P: RectPolygon, cost: CostModel) -> Solution:
    """Closed tour plus circular scans covering the polygon.

    Tour parts: both boundary tours, every strip extended to touch the outer
    boundary tour, the shorter matching arcs between the strip junctions,
    plus doubled connector bridges when a part would otherwise be stranded.
    Tour length is the exact sum of the parts.
    """
    if cost.scan_metric != "l2":
        raise ValueError("this solver places circular (L2) scans")
    r = cost.r
    a = P.feature_size
    tours = boundary_tours(P, r)
    strips = shifted_strips(P, r)
    scans, chains = place_circular_scans(tours, strips, r, a)

    poly = P.shapely()
    tr1_region = _inward_offset(poly, r / 2.0)
    tr1_ring = tours.tr1

    soup = _SegmentSoup()
    soup.add_polyline(tours.tr1)
    l_parts = {"tr1": tours.l_tr1, "tr2": tours.l_tr2}
    if tours.tr2:
        soup.add_polyline(tours.tr2)
    extended_len = 0.0
    junctions: list[FPoint] = []
    seen_ext: set = set()
    for fam in strips:
        for s in fam:
            cands = _chords_at(tr1_region, s.y)
            ext = None
            for x1, x2 in cands:
                if x1 - 1e-9 <= s.x1 and s.x2 <= x2 + 1e-9:
                    ext = (x1, x2)
                    break
            assert ext is not None, "strip must extend inside the shallow offset"
            ekey = (round(s.y, 9), round(ext[0], 9), round(ext[1], 9))
            if ekey in seen_ext:
                continue
            seen_ext.add(ekey)
            soup.add((ext[0], s.y), (ext[1], s.y))
            extended_len += ext[1] - ext[0]
            junctions.extend([(ext[0], s.y), (ext[1], s.y)])
    junctions = sorted({(_key(p)) for p in junctions})
    l_parts["strips_extended"] = extended_len
    arcs, l_m1 = _matching_arcs_on_ring(tr1_ring, junctions)
    for arc in arcs:
        soup.add_polyline(arc)
    l_parts["matching"] = l_m1
    for p in scans:
        soup.mark(p)

    edges, total = soup.build()
    # connect stranded components with doubled vertical bridges
    bridge_len = 0.0
    for _ in range(8):
        comps = _components(edges)
        if len(comps) <= 1:
            break
        comps.sort(key=lambda c: min(c))
        main = max(comps, key=len)
        other = min((c for c in comps if c is not main), key=lambda c: min(c))
        v = min(other)
        best = None
        for (p1, p2), _m in edges.items():
            if abs(p1[1] - p2[1]) < TOL and (p1 in main or p2 in main):
                x1, x2 = min(p1[0], p2[0]), max(p1[0], p2[0])
                if x1 - 1e-9 <= v[0] <= x2 + 1e-9 and p1[1] > v[1] + TOL:
                    if best is None or p1[1] < best:
                        best = p1[1]
        assert best is not None, "no bridge target above a stranded component"
        soup.add((v[0], v[1]), (v[0], best), 2)
        bridge_len += 2.0 * (best - v[1])
        edges, total = soup.build()
    l_parts["bridges"] = bridge_len

    walk = _euler_float(edges)
    sol_scans = [s for s in scans]
    first: dict[tuple[float, float], int] = {}
    for i, v in enumerate(walk):
        first.setdefault(_key(v), i)
    attach = []
    for s in sol_scans:
        k = _key(s)
        assert k in first, f"scan {s} not on the tour"
        attach.append(first[k])
    expected = (
        l_parts["tr1"]
        + l_parts["tr2"]
        + l_parts["strips_extended"]
        + l_parts["matching"]
        + l_parts["bridges"]
    )
    meta = {
        "algorithm": "circ-r-offset",
        "parts": l_parts,
        "parts_sum": expected,
        "identity_applicable": tours.identity_applicable,
        "identity_ok": tours.identity_ok,
        "l_delta_b": tours.l_delta_b,
        "n_strips": [len(strips[0]), len(strips[1])],
        "strip_lengths": [
            sum(s.length for s in strips[0]),
            sum(s.length for s in strips[1]),
        ],
        "chains": chains,
        "r_ge_a": r >= a - 1e-9,
    }
    sol = Solution.build(walk, sol_scans, attach, cost, meta)
    assert abs(sol.tour_length - expected) <= 1e-6 * max(1.0, expected)
    return sol


def _components(edges: Counter) -> list[set]:
    nbr: dict = {}
    for a, b in edges:
        nbr.setdefault(a, set()).add(b)
        nbr.setdefault(b, set()).add(a)
    comps = []
    seen = set()
    for v in sorted(nbr):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            w = stack.pop()
            for u in nbr[w]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(comp)
    return comps


def _euler_float(edges: Counter) -> list[FPoint]:
    deg: Counter = Counter()
    for (a, b), m in edges.items():
        deg[a] += m
        deg[b] += m
    odd = [v for v, d in deg.items() if d % 2]
    assert not odd, f"odd vertices in the float tour graph: {odd[:4]}"
    assert len(_components(edges)) == 1, "tour graph must be connected"
    adj: dict = {}
    for (a, b), m in edges.items():
        adj.setdefault(a, Counter())[b] += m
        adj.setdefault(b, Counter())[a] += m
    start = min(adj)
    stack = [start]
    path = []
    while stack:
        v = stack[-1]
        nxt = min((u for u, m in adj[v].items() if m > 0), default=None)
        if nxt is None:
            path.append(stack.pop())
        else:
            adj[v][nxt] -= 1
            adj[nxt][v] -= 1
            stack.append(nxt)
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# coverage sampling certificate


@dataclass(frozen=True)
class SampleReport:
    n_samples: int
    n_uncovered: int
    witness: FPoint | None
    resolution: float

    @property
    def covered(self) -> bool:
        return self.n_uncovered == 0


def coverage_sample_check(
    P: RectPolygon,
    scans: list[FPoint],
    r: float,
    a: float | None = None,
    resolution: float | None = None,
) -> SampleReport:
    """Dense-grid coverage check: every sample point of the polygon must be
    within r (+1e-9) of a scan.  Each uncovered sample is a counterexample
    witness."""
    a = P.feature_size if a is None else a
    res = resolution if resolution is not None else min(a, r) / 64.0
    minx, miny, maxx, maxy = P.shapely().bounds
    xs = np.arange(minx + res / 2.0, maxx, res)
    ys = np.arange(miny + res / 2.0, maxy, res)
    gx, gy = np.meshgrid(xs, ys)
    gx = gx.ravel()
    gy = gy.ravel()
    inside = shapely.intersects_xy(P.shapely(), gx, gy)
    gx, gy = gx[inside], gy[inside]
    if len(gx) == 0:
        return SampleReport(0, 0, None, res)
    tree = cKDTree(np.asarray(scans, dtype=float))
    dists, _ = tree.query(np.column_stack([gx, gy]), k=1)
    bad = dists > r + 1e-9
    n_bad = int(bad.sum())
    witness = None
    if n_bad:
        i = int(np.argmax(bad))
        witness = (float(gx[i]), float(gy[i]))
    return SampleReport(int(len(gx)), n_bad, witness, res)


def charging_counts(sol: Solution, tours: BoundaryTours, strips, r: float, a: float) -> dict:
    """Computed numbers for the scan-count charging inequalities: interior
    strip scans against 2*L_str/(sqrt(3)r) + #strips, and boundary-tour scans
    (plus strip endpoints) against 2*L_deltaB/a + 1 + L_deltaB/r."""
    chains = sol.meta["chains"]
    n_rings = 1 + (1 if tours.tr2 else 0)
    ring_chains = chains[:n_rings]
    strip_chains = chains[n_rings:]
    strip_interior = sum(max(0, len(set(map(tuple, ch))) - 2) for ch in strip_chains)
    strip_end = sum(min(2, len(set(map(tuple, ch)))) for ch in strip_chains)
    boundary_scans = len(
        {(round(p[0], 9), round(p[1], 9)) for ch in ring_chains for p in ch}
    )
    l_str = max(
        sum(s.length for s in strips[0]), sum(s.length for s in strips[1])
    )
    n_strips = len(strips[0]) + len(strips[1])
    return {
        "strip_interior_scans": strip_interior,
        "strip_budget": 2.0 * l_str / (SQRT3 * r) + n_strips,
        "boundary_scans": boundary_scans + strip_end,
        "boundary_budget": 2.0 * tours.l_delta_b / a + 1.0 + tours.l_delta_b / r,
        "n_strips": n_strips,
        "l_str": l_str,
    }
