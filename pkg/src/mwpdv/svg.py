"""Deterministic SVG rendering of instances and solutions.

Layers (SVG groups): region pixels or polygon, scan ranges (squares for
rectangular vision, disks for circular), the tour polyline, and scan-point
markers.  Output bytes depend only on the input.
"""

from __future__ import annotations

from .geometry import Solution
from .instances import InstanceFile

_MARGIN = 1.5


def _f(v: float) -> str:
    return f"{v:.6f}"


def render_svg(inst: InstanceFile, sol: Solution | None = None) -> str:
    if inst.kind == "polyomino":
        pts = [(x, y) for x, y in inst.pixels] + [(x + 1, y + 1) for x, y in inst.pixels]
    else:
        pts = list(inst.vertices)
    if sol is not None:
        pts += list(sol.tour) + list(sol.scans)
    xmin = min(p[0] for p in pts) - _MARGIN
    xmax = max(p[0] for p in pts) + _MARGIN
    ymin = min(p[1] for p in pts) - _MARGIN
    ymax = max(p[1] for p in pts) + _MARGIN
    w, h = xmax - xmin, ymax - ymin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_f(xmin)} {_f(-ymax)} {_f(w)} {_f(h)}" '
        f'width="{_f(40 * w)}" height="{_f(40 * h)}">',
        f'<g id="region" transform="scale(1,-1)">',
    ]
    if inst.kind == "polyomino":
        for x, y in sorted(inst.pixels):
            out.append(
                f'<rect class="pixel" x="{_f(x)}" y="{_f(y)}" width="1" height="1" '
                f'fill="#d8dee9" stroke="#4c566a" stroke-width="0.03"/>'
            )
    else:
        d = " ".join(
            ("M" if i == 0 else "L") + f" {_f(x)} {_f(y)}"
            for i, (x, y) in enumerate(inst.vertices)
        )
        out.append(
            f'<path class="polygon" d="{d} Z" fill="#d8dee9" stroke="#4c566a" '
            f'stroke-width="0.05"/>'
        )
    out.append("</g>")
    if sol is not None:
        out.append('<g id="scan-ranges" transform="scale(1,-1)" opacity="0.35">')
        r = sol.cost.r
        for sx, sy in sol.scans:
            if sol.cost.scan_metric == "linf":
                out.append(
                    f'<rect class="scan-range" x="{_f(sx - r)}" y="{_f(sy - r)}" '
                    f'width="{_f(2 * r)}" height="{_f(2 * r)}" fill="#88c0d0"/>'
                )
            else:
                out.append(
                    f'<circle class="scan-range" cx="{_f(sx)}" cy="{_f(sy)}" '
                    f'r="{_f(r)}" fill="#88c0d0"/>'
                )
        out.append("</g>")
        out.append('<g id="tour" transform="scale(1,-1)">')
        if len(sol.tour) > 1:
            d = " ".join(
                ("M" if i == 0 else "L") + f" {_f(x)} {_f(y)}"
                for i, (x, y) in enumerate(sol.tour)
            )
            out.append(
                f'<path class="tour" d="{d}" fill="none" stroke="#bf616a" '
                f'stroke-width="0.08"/>'
            )
        else:
            x, y = sol.tour[0]
            out.append(
                f'<circle class="tour-degenerate" cx="{_f(x)}" cy="{_f(y)}" '
                f'r="0.12" fill="#bf616a"/>'
            )
        out.append("</g>")
        out.append('<g id="scan-points" transform="scale(1,-1)">')
        for sx, sy in sol.scans:
            out.append(
                f'<circle class="scan-point" cx="{_f(sx)}" cy="{_f(sy)}" r="0.09" '
                f'fill="#2e3440"/>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
