"""Myopic watchman tours with discrete vision.

Approximation algorithms for covering polyominoes and rectilinear polygons
with limited-range scans taken at stops along a closed tour, plus exact
desk-scale oracles that certify every approximation ratio.
"""

from . import errors
from .circular import (
    circular_grid_tour,
    diagonal_scan_points,
    kershner_lower_bound,
    lemma3_certificate,
)
from .circular_general import (
    BoundaryTours,
    RectPolygon,
    boundary_tours,
    circular_general_solve,
    coverage_sample_check,
    place_circular_scans,
    shifted_strips,
)
from .geometry import (
    CostModel,
    CoverageCertificate,
    Polyomino,
    Solution,
    Strip,
    boundary_cycles,
    coverage_check,
    euler_tour,
    matching_parts,
    offset_centers,
    strip_decomposition,
    trace_offset_boundary,
)
from .instances import (
    InstanceFile,
    gen_fat_polyomino,
    gen_gadget,
    gen_random_polyomino,
    read_instance,
    write_instance,
)
from .matching import exhaustive_matching_size, maximum_matching
from .milling import MillingDecomposition, afm_tour, mwpdv_rect_solve
from .oracle import (
    Budget,
    exact_min_cover,
    exact_mwpdv,
    exact_tour,
    milling_lower_bounds,
)
from .scan_cover import (
    ScanCoverTrace,
    even_quadruples,
    greedy_odd_quadruples,
    greedy_triples,
    matching_cover,
    scan_cover,
    snap_scans_to_grid,
)
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BoundaryTours",
    "CostModel",
    "CoverageCertificate",
    "InstanceFile",
    "MillingDecomposition",
    "Polyomino",
    "RectPolygon",
    "ScanCoverTrace",
    "Solution",
    "Strip",
    "afm_tour",
    "boundary_cycles",
    "boundary_tours",
    "circular_general_solve",
    "circular_grid_tour",
    "coverage_check",
    "coverage_sample_check",
    "diagonal_scan_points",
    "errors",
    "euler_tour",
    "even_quadruples",
    "exact_min_cover",
    "exact_mwpdv",
    "exact_tour",
    "exhaustive_matching_size",
    "gen_fat_polyomino",
    "gen_gadget",
    "gen_random_polyomino",
    "greedy_odd_quadruples",
    "greedy_triples",
    "kershner_lower_bound",
    "lemma3_certificate",
    "matching_cover",
    "matching_parts",
    "maximum_matching",
    "milling_lower_bounds",
    "mwpdv_rect_solve",
    "offset_centers",
    "place_circular_scans",
    "read_instance",
    "render_svg",
    "scan_cover",
    "shifted_strips",
    "snap_scans_to_grid",
    "strip_decomposition",
    "trace_offset_boundary",
    "write_instance",
]
