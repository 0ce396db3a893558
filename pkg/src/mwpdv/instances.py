"""Instance and solution files, seeded generators, and hardness-gadget
fixtures.

Files are JSON with sorted keys and a trailing newline, so identical inputs
produce byte-identical files.  Gadget polyominoes are digitized once here;
their acceptance bar is the oracle-checked combinatorics (two optimal cover
patterns for the variable piece, three-versus-four scans for the clause
piece), not the figure geometry.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .geometry import CostModel, Polyomino, Solution

VERSION = "0.1.0"


@dataclass(frozen=True)
class InstanceFile:
    name: str
    kind: str  # "polyomino" | "rect_polygon"
    pixels: tuple = ()
    vertices: tuple = ()
    cost: CostModel = CostModel(c=1.0)
    mode: str = "milling"
    annotations: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("polyomino", "rect_polygon"):
            raise ValueError(f"unknown instance kind {self.kind!r}")
        if self.mode not in ("milling", "lawnmowing"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.kind == "polyomino":
            if not self.pixels:
                raise ValueError("polyomino instance needs pixels")
            if len(set(self.pixels)) != len(self.pixels):
                raise ValueError("duplicate pixels")
        elif not self.vertices:
            raise ValueError("rect_polygon instance needs vertices")

    def polyomino(self) -> Polyomino:
        return Polyomino.from_pixels(self.pixels)

    def rect_polygon(self):
        from .circular_general import RectPolygon

        return RectPolygon(tuple((float(x), float(y)) for x, y in self.vertices))

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "kind": self.kind,
            "cost": {
                "c": self.cost.c,
                "r": self.cost.r,
                "scan_metric": self.cost.scan_metric,
                "tour_metric": self.cost.tour_metric,
            },
            "mode": self.mode,
        }
        if self.kind == "polyomino":
            d["pixels"] = [list(p) for p in sorted(self.pixels)]
        else:
            d["vertices"] = [list(v) for v in self.vertices]
        if self.annotations:
            d["annotations"] = self.annotations
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InstanceFile":
        cost = d.get("cost", {})
        return cls(
            name=d["name"],
            kind=d["kind"],
            pixels=tuple(tuple(p) for p in d.get("pixels", ())),
            vertices=tuple(tuple(v) for v in d.get("vertices", ())),
            cost=CostModel(
                c=float(cost.get("c", 1.0)),
                r=float(cost.get("r", 1.0)),
                scan_metric=cost.get("scan_metric", "linf"),
                tour_metric=cost.get("tour_metric", "l1"),
            ),
            mode=d.get("mode", "milling"),
            annotations=d.get("annotations", {}),
        )


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_instance(inst: InstanceFile, path: str | Path) -> None:
    Path(path).write_text(dumps(inst.to_dict()), encoding="utf-8")


def read_instance(path: str | Path) -> InstanceFile:
    return InstanceFile.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def solution_to_dict(
    inst: InstanceFile, sol: Solution, algorithm: str, certificate: dict
) -> dict:
    return {
        "algorithm": {"id": algorithm, "version": VERSION},
        "instance": inst.name,
        "tour": [list(v) for v in sol.tour],
        "scans": [list(s) for s in sol.scans],
        "scan_attach": list(sol.scan_attach),
        "tour_length": sol.tour_length,
        "scan_count": sol.scan_count,
        "total_cost": sol.total_cost,
        "certificate": certificate,
    }


def write_solution(doc: dict, path: str | Path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def read_solution(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# generators


def gen_random_polyomino(seed: int, n_pixels: int, shape_bias: float = 0.35) -> Polyomino:
    """Connected polyomino of exactly n_pixels grown by seeded accretion.
    Larger shape_bias keeps growing from the last pixel, which produces the
    corridors that exercise degenerate offset pieces."""
    if n_pixels < 1:
        raise ValueError("n_pixels must be at least 1")
    rng = random.Random(seed)
    pixels = {(0, 0)}
    last = (0, 0)
    while len(pixels) < n_pixels:
        if rng.random() < shape_bias:
            frontier = [
                (last[0] + dx, last[1] + dy)
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
            ]
            frontier = [p for p in frontier if p not in pixels]
        else:
            frontier = []
        if not frontier:
            frontier = sorted(
                {
                    (x + dx, y + dy)
                    for x, y in pixels
                    for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
                }
                - pixels
            )
        last = rng.choice(sorted(frontier))
        pixels.add(last)
    xmin = min(x for x, _ in pixels)
    ymin = min(y for _, y in pixels)
    return Polyomino.from_pixels((x - xmin, y - ymin) for x, y in pixels)


def gen_fat_polyomino(seed: int, n_base: int, shape_bias: float = 0.35) -> Polyomino:
    """Seeded polyomino that a 2x2 cutter can always sweep: an accreted base
    shape scaled up 2x (so every pixel sits in a fully contained 2x2 block)."""
    base = gen_random_polyomino(seed, n_base, shape_bias)
    return Polyomino.from_pixels(
        (2 * x + dx, 2 * y + dy)
        for x, y in base.pixels
        for dx in (0, 1)
        for dy in (0, 1)
    )


# ---------------------------------------------------------------------------
# hardness-gadget fixtures

# An 8-pixel diagonal ring: its pixel-pair graph is a chordless 8-cycle, so
# there are exactly two minimum covers (the two perfect matchings), which
# play the roles of the "true" and "false" placements.
_VARIABLE_RING = (
    (0, 2), (1, 3), (2, 4), (3, 3), (4, 2), (3, 1), (2, 0), (1, 1),
)
_VARIABLE_TRUE = ((1, 3), (2, 1), (3, 4), (4, 2))
_VARIABLE_FALSE = ((1, 2), (2, 4), (3, 1), (4, 3))

# A 7-pixel spider: hub plus three diagonal 2-pixel corridors.  Covering it
# alone needs four scans; with one corridor tip already covered from outside
# (a satisfied literal), three scans suffice.
_CLAUSE_FULL = ((2, 2), (1, 3), (0, 4), (3, 3), (4, 4), (3, 1), (4, 0))
_CLAUSE_SAT = ((2, 2), (1, 3), (0, 4), (3, 3), (4, 4), (3, 1))

GADGET_KINDS = (
    "variable",
    "variable_true",
    "variable_false",
    "clause",
    "clause_sat",
    "clause_unsat",
)


def gen_gadget(kind: str) -> InstanceFile:
    """Hand-digitized gadget fixtures with their expected combinatorics."""
    cost = CostModel(c=1.0, r=1.0, scan_metric="linf", tour_metric="l1")
    if kind == "variable":
        return InstanceFile(
            name="gadget-variable",
            kind="polyomino",
            pixels=_VARIABLE_RING,
            cost=cost,
            mode="lawnmowing",
            annotations={"optimal_cover_count": 2, "s_min": 4},
        )
    if kind == "variable_true":
        return InstanceFile(
            name="gadget-variable-true",
            kind="polyomino",
            pixels=_VARIABLE_RING,
            cost=cost,
            mode="lawnmowing",
            annotations={"scan_pattern": [list(p) for p in _VARIABLE_TRUE]},
        )
    if kind == "variable_false":
        return InstanceFile(
            name="gadget-variable-false",
            kind="polyomino",
            pixels=_VARIABLE_RING,
            cost=cost,
            mode="lawnmowing",
            annotations={"scan_pattern": [list(p) for p in _VARIABLE_FALSE]},
        )
    if kind in ("clause", "clause_unsat"):
        return InstanceFile(
            name=f"gadget-{kind.replace('_', '-')}",
            kind="polyomino",
            pixels=_CLAUSE_FULL,
            cost=cost,
            mode="lawnmowing",
            annotations={"s_min": 4},
        )
    if kind == "clause_sat":
        return InstanceFile(
            name="gadget-clause-sat",
            kind="polyomino",
            pixels=_CLAUSE_SAT,
            cost=cost,
            mode="lawnmowing",
            annotations={"s_min": 3},
        )
    raise ValueError(f"unknown gadget kind {kind!r}; choose from {GADGET_KINDS}")
