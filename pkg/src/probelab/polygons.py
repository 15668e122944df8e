"""Tools specific to smooth polygons: edge self-intersection numbers,
short and odd edges, the midpoint obstruction point, and the two-point
blow-up family."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RatVec, affine_distance, rat, solve
from .polytope import HalfSpace, Polytope, PolytopeError

__all__ = [
    "Accessibility", "EdgeClass", "accessibility_class", "classify_edges",
    "edge_neighbors", "edge_self_intersection", "odd_edge_point",
    "two_point_blowup", "v_rectangle", "v_triangle",
]


def _require_smooth_polygon(P: Polytope) -> None:
    if P.dim != 2:
        raise PolytopeError("polygon tools need a 2-dimensional polytope")
    if not P.is_smooth():
        raise PolytopeError("polygon is not smooth")


def edge_neighbors(P: Polytope, e: int) -> tuple[int, int]:
    """The two facets adjacent to facet ``e`` of a polygon."""
    nb = []
    for vi in P.facet_vertices(e):
        nb.extend(i for i in P.incidence[vi] if i != e)
    if len(nb) != 2:
        raise PolytopeError(f"facet {e} does not have exactly two neighbors")
    return nb[0], nb[1]


def edge_length(P: Polytope, e: int) -> Fraction:
    a, b = P.facet_vertices(e)
    return affine_distance(P.vertices[a], P.vertices[b])


def edge_self_intersection(P: Polytope, e: int) -> int:
    """The integer ``k`` with ``eta_left + eta_right = -k eta_e``."""
    _require_smooth_polygon(P)
    a, c = edge_neighbors(P, e)
    s = tuple(x + y for x, y in zip(P.halfspaces[a].eta, P.halfspaces[c].eta))
    eta = P.halfspaces[e].eta
    j = 0 if eta[0] != 0 else 1
    k = Fraction(-s[j], eta[j])
    if k.denominator != 1 or tuple(-k * x for x in eta) != s:
        raise PolytopeError("neighbor normals are inconsistent with smoothness")
    return int(k)


@dataclass(frozen=True)
class EdgeClass:
    edge: int
    self_intersection: int
    length: Fraction
    odd: bool
    short: bool
    short_enough: bool


def classify_edges(P: Polytope) -> list[EdgeClass]:
    _require_smooth_polygon(P)
    k = {e: edge_self_intersection(P, e) for e in range(P.n_facets)}
    length = {e: edge_length(P, e) for e in range(P.n_facets)}
    odd = {e: k[e] < 0 and k[e] % 2 == 1 for e in k}
    out = []
    for e in range(P.n_facets):
        nb = edge_neighbors(P, e)
        short = all(length[e] <= length[j] / 2 for j in nb)
        enough = all(length[e] < length[j] if odd[j] else length[e] <= length[j] / 2
                     for j in nb)
        out.append(EdgeClass(e, k[e], length[e], odd[e], short, enough))
    return out


def odd_edge_point(P: Polytope, e: int) -> RatVec:
    """Midpoint of the chord parallel to a short odd edge at distance equal
    to the edge's length."""
    cls = classify_edges(P)[e]
    if not cls.odd:
        raise ValueError(f"edge {e} is not odd")
    if not cls.short:
        raise ValueError(f"edge {e} is not short")
    h = P.halfspaces[e]
    level = h.kappa - cls.length  # <eta_e, x> on the chord
    ends = []
    for j, g in enumerate(P.halfspaces):
        if j == e:
            continue
        x = solve([h.eta, g.eta], [level, g.kappa])
        if x is not None and P.contains(x) and x not in ends:
            ends.append(x)
    if len(ends) != 2:
        raise PolytopeError("chord does not cross the polygon")
    a, b = ends
    return tuple((p + q) / 2 for p, q in zip(a, b))


@dataclass(frozen=True)
class Accessibility:
    label: str
    reason: str

    @property
    def always_accessible(self) -> bool:
        return self.label == "always_accessible"


def accessibility_class(P: Polytope) -> Accessibility:
    """Triangles and odd-free quadrilaterals with a pair of parallel edges
    are always accessible; everything else is not."""
    cls = classify_edges(P)
    n = P.n_facets
    odd = [c.edge for c in cls if c.odd]
    if n == 3:
        return Accessibility("always_accessible", "triangle")
    if n == 4:
        etas = [h.eta for h in P.halfspaces]
        parallel = any(tuple(-c for c in etas[i]) == etas[j]
                       for i in range(4) for j in range(i + 1, 4))
        if not parallel:
            return Accessibility("not_always", "quadrilateral without parallel edges")
        if odd:
            return Accessibility("not_always", f"trapezoid with odd edges {odd}")
        return Accessibility("always_accessible", "trapezoid with no odd edges")
    return Accessibility("not_always", f"{n} edges")


def two_point_blowup(alpha, beta) -> Polytope:
    """Unit triangle with two corners cut.  Facet ids 0..4 are, in cyclic
    order, ``y <= 1-alpha``, ``x >= 0``, ``y >= 0``, ``x <= 1-beta`` and
    ``x + y <= 1``; the cut edges have lengths ``alpha`` and ``beta``."""
    a, b = rat(alpha), rat(beta)
    if not (0 < a <= b and a + b < 1):
        raise ValueError("need 0 < alpha <= beta and alpha + beta < 1")
    return Polytope.from_halfspaces(2, [
        HalfSpace((0, 1), 1 - a),
        HalfSpace((-1, 0), 0),
        HalfSpace((0, -1), 0),
        HalfSpace((1, 0), 1 - b),
        HalfSpace((1, 1), 1),
    ])


def v_rectangle(alpha, beta) -> RatVec:
    """Centre of the rectangle ``[0, 1-beta] x [0, 1-alpha]``."""
    return ((1 - rat(beta)) / 2, (1 - rat(alpha)) / 2)


def v_triangle() -> RatVec:
    return (Fraction(1, 3), Fraction(1, 3))
