"""Shared fixtures: systematic small-polyomino enumeration and the seeded
random suites used by both the module tests and the acceptance suite."""

from __future__ import annotations

import pytest

from mwpdv.geometry import Polyomino
from mwpdv.instances import gen_fat_polyomino, gen_random_polyomino


def _normalize(cells):
    xmin = min(x for x, _ in cells)
    ymin = min(y for _, y in cells)
    return tuple(sorted((x - xmin, y - ymin) for x, y in cells))


def _canonical(cells):
    best = None
    c = list(cells)
    for flip in (False, True):
        cc = [(-x, y) for x, y in c] if flip else list(c)
        for _ in range(4):
            cc = [(-y, x) for x, y in cc]
            n = _normalize(cc)
            if best is None or n < best:
                best = n
    return best


def free_polyominoes(max_pixels: int) -> list[tuple[tuple[int, int], ...]]:
    """One fixed-orientation representative per free polyomino, all sizes up
    to max_pixels, in deterministic order."""
    out = []
    current = {((0, 0),)}
    out.extend(sorted(current))
    for _ in range(max_pixels - 1):
        nxt = set()
        for piece in current:
            cellset = set(piece)
            for x, y in piece:
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    q = (x + dx, y + dy)
                    if q not in cellset:
                        nxt.add(_canonical(tuple(cellset | {q})))
        current = nxt
        out.extend(sorted(current))
    return out


@pytest.fixture(scope="session")
def small_suite():
    """All free polyominoes with at most 8 pixels, fixed orientation."""
    shapes = free_polyominoes(8)
    assert len(shapes) == 1 + 1 + 2 + 5 + 12 + 35 + 108 + 369
    return [
        (f"free-{i:03d}-n{len(cells)}", Polyomino.from_pixels(cells))
        for i, cells in enumerate(shapes)
    ]


@pytest.fixture(scope="session")
def random_suite():
    """200 seeded polyominoes with at most 40 pixels: 120 accreted shapes
    (mostly thin) and 80 doubled shapes that a 2x2 cutter can always sweep."""
    suite = []
    for i in range(1, 121):
        n = 3 + (i * 7) % 38
        P = gen_random_polyomino(i, n, (i % 5) / 5.0)
        suite.append((f"rand-{i:03d}", P))
    for i in range(1, 81):
        P = gen_fat_polyomino(1000 + i, 1 + i % 10, (i % 4) / 4.0)
        suite.append((f"fat-{i:03d}", P))
    assert len(suite) == 200
    assert all(P.n_pixels <= 40 for _, P in suite)
    return suite
