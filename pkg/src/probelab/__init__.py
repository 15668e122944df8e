"""Exact probe displaceability and central-point tools for rational
moment polytopes."""

from .central import AffineFunctional, MaximinTrace, central_point, maximin_step
from .exact import INF, affine_distance, apply_unimodular, directed_distance, is_integrally_transverse, make_primitive
from .ewald import (
    special_point_s, small_facets, star_ewald, star_membership, strong_ewald,
    symmetric_points, synthesize_displacement, weak_ewald,
)
from .lp import LPInfeasible, LPUnbounded, exact_lp_max
from .polytope import Edge, Face, HalfSpace, Polytope, PolytopeError, polytope
from .probes import (
    DisplaceReport, Probe, candidate_directions, displaces,
    find_displacing_probe, is_inessential_probe, probe_through,
)

__version__ = "0.1.0"

__all__ = [
    "AffineFunctional", "DisplaceReport", "Edge", "Face", "HalfSpace", "INF",
    "LPInfeasible", "LPUnbounded", "MaximinTrace", "Polytope", "PolytopeError",
    "Probe", "affine_distance", "apply_unimodular", "candidate_directions",
    "central_point", "directed_distance", "displaces", "exact_lp_max",
    "find_displacing_probe", "is_inessential_probe", "is_integrally_transverse",
    "make_primitive", "maximin_step", "polytope", "probe_through",
    "small_facets", "special_point_s", "star_ewald", "star_membership",
    "strong_ewald", "symmetric_points", "synthesize_displacement", "weak_ewald",
]
