"""Symmetric lattice points and the weak / strong / star Ewald conditions.

All functions expect the distinguished interior point at the origin; for a
monotone polytope translate with :meth:`Polytope.centered` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from .exact import LatVec, RatVec, det, dot, format_vec, ratvec, vadd
from .polytope import Face, Polytope, PolytopeError
from .probes import DisplaceReport, _probe_through

__all__ = [
    "StarMembership", "StarVerdict", "cone_face", "small_facets",
    "special_point_s", "star_ewald", "star_membership", "strong_ewald",
    "symmetric_points", "synthesize_displacement", "weak_ewald",
]


def _require_origin(P: Polytope) -> None:
    if not P.interior_contains((0,) * P.dim):
        raise PolytopeError("origin not interior")


def symmetric_points(P: Polytope) -> tuple[LatVec, ...]:
    """Nonzero lattice points ``v`` with ``v`` and ``-v`` both in ``P``."""
    _require_origin(P)
    out = []
    for v in P.lattice_points:
        if any(v) and P.contains(tuple(-c for c in v)):
            out.append(v)
    return tuple(out)


def _first_basis(points: Sequence[LatVec], n: int) -> Optional[tuple[LatVec, ...]]:
    for combo in combinations(points, n):
        if abs(det(combo)) == 1:
            return combo
    return None


def weak_ewald(P: Polytope) -> tuple[bool, Optional[tuple[LatVec, ...]]]:
    basis = _first_basis(symmetric_points(P), P.dim)
    return basis is not None, basis


def strong_ewald(P: Polytope) -> dict[int, Optional[tuple[LatVec, ...]]]:
    """Per facet id, the first lattice basis inside ``S(P)`` on that facet
    (``None`` when there is none)."""
    sym = symmetric_points(P)
    out = {}
    for i, h in enumerate(P.halfspaces):
        on = [v for v in sym if h.ell(v) == 0]
        out[i] = _first_basis(on, P.dim)
    return out


@dataclass(frozen=True)
class StarMembership:
    in_star_star: bool
    in_star_capital: bool
    in_star_lower: bool


def star_membership(P: Polytope, f: Face, v) -> StarMembership:
    hits = sum(1 for i in f.facet_ids if P.halfspaces[i].ell(v) == 0)
    capital = hits >= 1
    lower = hits >= 2
    return StarMembership(capital and not lower, capital, lower)


@dataclass(frozen=True)
class StarVerdict:
    face: Face
    satisfied: bool
    witness: Optional[LatVec]

    def format(self) -> str:
        ids = ",".join(str(i) for i in sorted(self.face.facet_ids))
        w = format_vec(self.witness) if self.witness is not None else "none"
        return f"face={{{ids}}} dim={self.face.dim} satisfied={int(self.satisfied)} witness={w}"


def _face_witness(P: Polytope, f: Face, sym: Sequence[LatVec]) -> Optional[LatVec]:
    for lam in sym:
        if not star_membership(P, f, lam).in_star_star:
            continue
        neg = tuple(-c for c in lam)
        if not star_membership(P, f, neg).in_star_capital:
            return lam
    return None


def star_ewald(P: Polytope) -> tuple[bool, list[StarVerdict]]:
    sym = symmetric_points(P)
    verdicts = []
    for f in P.faces:
        w = _face_witness(P, f, sym)
        verdicts.append(StarVerdict(f, w is not None, w))
    return all(v.satisfied for v in verdicts), verdicts


def cone_face(P: Polytope, u) -> Face:
    """The face ``f`` whose open cone over the origin contains ``u``: the
    ray from 0 through ``u`` leaves ``P`` through the relative interior
    of ``f``."""
    _require_origin(P)
    u = ratvec(u)
    if not any(u):
        raise ValueError("u0 excluded")
    ratios = [Fraction(dot(h.eta, u)) / h.kappa for h in P.halfspaces]
    m = max(ratios)
    ids = frozenset(i for i, r in enumerate(ratios) if r == m)
    f = P.face_index.get(ids)
    if f is not None:
        return f
    raise PolytopeError(f"no face with facet set {sorted(ids)}")


def synthesize_displacement(P: Polytope, u, sym: Optional[Sequence[LatVec]] = None) -> DisplaceReport:
    """Displace ``u`` using the star Ewald witness of its cone face.

    With witness ``lam`` lying on exactly one facet ``F`` of the face, the
    probe enters through ``F`` in direction ``-lam``.  The probe is checked
    against the halfway criterion before it is returned.
    """
    u = ratvec(u)
    if not any(u):
        raise ValueError("u0 excluded")
    if not P.interior_contains(u):
        raise PolytopeError("point not interior")
    f = cone_face(P, u)
    if sym is None:
        sym = symmetric_points(P)
    lam = _face_witness(P, f, sym)
    if lam is None:
        raise ValueError(f"not star Ewald: face {sorted(f.facet_ids)} has no witness")
    fid = next(i for i in sorted(f.facet_ids) if P.halfspaces[i].ell(lam) == 0)
    direction = tuple(-c for c in lam)
    probe = _probe_through(P, u, fid, direction)
    if probe is None:
        return DisplaceReport(u, False, None, None, 1, None)
    pos = P.halfspaces[fid].ell(u)
    return DisplaceReport(u, pos < probe.length / 2, probe, pos, 1, None)


def special_point_s(P: Polytope, v, facet_id: int) -> RatVec:
    """``v`` plus the primitive edge vectors at ``v`` that run inside the
    given facet."""
    vi = v if isinstance(v, int) else P.vertex_index(v)
    if facet_id not in P.incidence[vi]:
        raise ValueError("vertex not on facet")
    s = P.vertices[vi]
    for leaving, d in P.edge_directions(vi).items():
        if leaving != facet_id:
            s = vadd(s, d)
    return s


def small_facets(P: Polytope) -> list[int]:
    """Facets of a 3-polytope that are unimodular triangles with unit edges."""
    if P.dim != 3:
        raise ValueError("small facets are defined for 3-polytopes only")
    out = []
    for i in range(P.n_facets):
        vs = P.facet_vertices(i)
        if len(vs) != 3:
            continue
        a, b, c = (P.vertices[k] for k in vs)
        e1 = tuple(x - y for x, y in zip(b, a))
        e2 = tuple(x - y for x, y in zip(c, a))
        if any(x.denominator != 1 for x in e1 + e2):
            continue
        e1 = tuple(int(x) for x in e1)
        e2 = tuple(int(x) for x in e2)
        minors = [e1[p] * e2[q] - e1[q] * e2[p] for p, q in ((0, 1), (0, 2), (1, 2))]
        if gcd(*minors) == 1:
            out.append(i)
    return out
