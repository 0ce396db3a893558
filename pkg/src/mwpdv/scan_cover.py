"""Scan-point construction for polyominoes with unit L-infinity vision.

Four passes: all fully-contained 2x2 squares centered at even/even grid
points, a greedy maximal disjoint set of remaining 2x2 squares, a greedy
set of scans covering three residual pixels each, then an optimal finish
for the 1-and-2-pixel leftovers via maximum matching.  The total is at most
2.5 times the minimum possible number of scans.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCovering
from .geometry import Pixel, Point, Polyomino
from .matching import maximum_matching


@dataclass(frozen=True)
class ScanCoverTrace:
    s4e: tuple[Point, ...]
    s4o: tuple[Point, ...]
    s3: tuple[Point, ...]
    s2: tuple[Point, ...]
    s1: tuple[Point, ...]
    residual_4e: frozenset[Pixel]
    residual_4e4o: frozenset[Pixel]
    residual_4e4o3: frozenset[Pixel]
    # pixels each scan is responsible for, in scan order across all classes
    covered_sets: tuple[tuple[Pixel, ...], ...]

    @property
    def all_scans(self) -> tuple[Point, ...]:
        return self.s4e + self.s4o + self.s3 + self.s2 + self.s1

    @property
    def scan_count(self) -> int:
        return len(self.all_scans)

    def classes(self) -> dict[str, tuple[Point, ...]]:
        return {
            "s4e": self.s4e,
            "s4o": self.s4o,
            "s3": self.s3,
            "s2": self.s2,
            "s1": self.s1,
        }


def _incident(point: Point, pixels: frozenset[Pixel]) -> tuple[Pixel, ...]:
    x, y = point
    cand = ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y))
    return tuple(p for p in cand if p in pixels)


def even_quadruples(P: Polyomino) -> list[Point]:
    """Centers with both coordinates even whose 2x2 square lies inside P.
    Parity is absolute instance parity, not box-relative."""
    out = []
    for g in sorted(P.lattice_points):
        if g[0] % 2 == 0 and g[1] % 2 == 0 and len(_incident(g, P.pixels)) == 4:
            out.append(g)
    return out


def greedy_odd_quadruples(P: Polyomino, residual: frozenset[Pixel]) -> list[Point]:
    """Greedy maximal disjoint 2x2 squares fully inside the residual region,
    candidates in lexicographic order."""
    live = set(residual)
    out = []
    for g in sorted(P.lattice_points):
        inc = _incident(g, frozenset(live))
        if len(inc) == 4:
            out.append(g)
            live.difference_update(inc)
    return out


def greedy_triples(P: Polyomino, residual: frozenset[Pixel]) -> list[Point]:
    """Greedy scans covering exactly three residual pixels each.  Centers are
    grid points of the closed region, so they are reachable by a tour."""
    live = set(residual)
    out = []
    for g in sorted(P.lattice_points):
        inc = _incident(g, frozenset(live))
        if len(inc) >= 4:  # no 2x2 residual square can remain at this stage
            raise AssertionError("quadruple survived into the triple pass")
        if len(inc) == 3:
            out.append(g)
            live.difference_update(inc)
    return out


def _shared_corners(a: Pixel, b: Pixel) -> list[Point]:
    ca = {(a[0], a[1]), (a[0] + 1, a[1]), (a[0], a[1] + 1), (a[0] + 1, a[1] + 1)}
    cb = {(b[0], b[1]), (b[0] + 1, b[1]), (b[0], b[1] + 1), (b[0] + 1, b[1] + 1)}
    return sorted(ca & cb)


def matching_cover(
    P: Polyomino, residual: frozenset[Pixel]
) -> tuple[list[tuple[Point, tuple[Pixel, Pixel]]], list[tuple[Point, Pixel]]]:
    """Optimal cover of the leftover pixels by double and single scans.

    Vertices are residual pixels; edges join pixels a single scan can cover
    (Chebyshev-adjacent).  A maximum matching yields the doubles; unmatched
    pixels become singles.  Scan centers default to the lexicographically
    smallest shared corner (the milling solver may re-center them onto its
    tour afterwards, which never changes the covered pixels).
    """
    pixels = sorted(residual)
    index = {p: i for i, p in enumerate(pixels)}
    edges = []
    for i, a in enumerate(pixels):
        for b in pixels[i + 1 :]:
            if abs(a[0] - b[0]) <= 1 and abs(a[1] - b[1]) <= 1:
                edges.append((i, index[b]))
    pairs = maximum_matching(len(pixels), edges)
    doubles = []
    matched = set()
    for i, j in sorted(pairs):
        a, b = pixels[i], pixels[j]
        center = _shared_corners(a, b)[0]
        doubles.append((center, (a, b)))
        matched.update((i, j))
    singles = []
    for i, p in enumerate(pixels):
        if i not in matched:
            singles.append(((p[0], p[1]), p))  # lex-smallest corner of the pixel
    return doubles, singles


def scan_cover(P: Polyomino) -> ScanCoverTrace:
    """The full four-pass pipeline.  Deterministic; covers every pixel."""
    s4e = even_quadruples(P)
    covered_sets: list[tuple[Pixel, ...]] = []
    live = set(P.pixels)
    for g in s4e:
        inc = _incident(g, frozenset(live))
        covered_sets.append(inc)
        live.difference_update(inc)
    residual_4e = frozenset(live)

    s4o = []
    for g in sorted(P.lattice_points):
        inc = _incident(g, frozenset(live))
        if len(inc) == 4:
            s4o.append(g)
            covered_sets.append(inc)
            live.difference_update(inc)
    residual_4e4o = frozenset(live)

    s3 = []
    for g in sorted(P.lattice_points):
        inc = _incident(g, frozenset(live))
        if len(inc) == 3:
            s3.append(g)
            covered_sets.append(inc)
            live.difference_update(inc)
    residual_4e4o3 = frozenset(live)

    doubles, singles = matching_cover(P, residual_4e4o3)
    s2 = [c for c, _ in doubles]
    s1 = [c for c, _ in singles]
    covered_sets.extend(tuple(pair) for _, pair in doubles)
    covered_sets.extend((p,) for _, p in singles)

    trace = ScanCoverTrace(
        s4e=tuple(s4e),
        s4o=tuple(s4o),
        s3=tuple(s3),
        s2=tuple(s2),
        s1=tuple(s1),
        residual_4e=residual_4e,
        residual_4e4o=residual_4e4o,
        residual_4e4o3=residual_4e4o3,
        covered_sets=tuple(covered_sets),
    )
    covered = set()
    for pxs in trace.covered_sets:
        covered.update(pxs)
    assert covered == P.pixels, "scan cover pipeline missed pixels"
    return trace


def _real_scan_covers(P: Polyomino, s: tuple[float, float]) -> set[Pixel]:
    """Pixels fully inside the radius-1 square at a real-valued scan point."""
    out = set()
    sx, sy = s
    import math

    for px in range(math.ceil(sx) - 1, math.floor(sx) + 1):
        for py in range(math.ceil(sy) - 1, math.floor(sy) + 1):
            if (px, py) in P.pixels:
                out.add((px, py))
    return out


def snap_scans_to_grid(P: Polyomino, scans) -> list[Point]:
    """Shift real-valued unit-square scans onto grid points without losing
    coverage or changing the count.

    A scan with a fractional coordinate fully covers at most one pixel
    column (row) in that axis; flooring the coordinate keeps that column
    (row) covered and can only gain more, so per-pixel coverage is
    preserved.  Raises NotCovering when the input does not cover P."""
    scans = [tuple(s) for s in scans]
    covered: set[Pixel] = set()
    for s in scans:
        covered |= _real_scan_covers(P, s)
    if covered != P.pixels:
        missing = sorted(P.pixels - covered)[0]
        raise NotCovering(f"input scans leave pixel {missing} uncovered")
    import math

    snapped = [(math.floor(sx), math.floor(sy)) for sx, sy in scans]
    check: set[Pixel] = set()
    for s in snapped:
        check |= _real_scan_covers(P, (float(s[0]), float(s[1])))
    assert check == P.pixels, "grid snapping lost coverage"
    return snapped
