"""Probes and the less-than-halfway displaceability test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import ceil, gcd
from typing import Iterable, Optional, Sequence

from .exact import (
    INF, LatVec, RatVec, directed_distance, dot, is_inf,
    ratvec, vadd, vscale, vsub,
)
from .polytope import Polytope, PolytopeError


@dataclass(frozen=True)
class Probe:
    facet_id: int
    direction: LatVec
    entry: RatVec
    exit: RatVec
    length: Fraction


@dataclass(frozen=True)
class DisplaceReport:
    point: RatVec
    displaced: bool
    witness: Optional[Probe]
    position: Optional[Fraction]
    searched_directions: int
    direction_bound: Optional[int]


def _require_interior(P: Polytope, u) -> RatVec:
    u = ratvec(u)
    if len(u) != P.dim or not P.interior_contains(u):
        raise PolytopeError("point not interior")
    return u


def probe_through(P: Polytope, u, facet_id: int, lam: Sequence[int]) -> Optional[Probe]:
    """The probe from facet ``facet_id`` in direction ``lam`` passing
    through the interior point ``u``, or ``None`` if there is none."""
    u = _require_interior(P, u)
    return _probe_through(P, u, facet_id, tuple(lam))


def _probe_through(P: Polytope, u: RatVec, facet_id: int, lam: LatVec) -> Optional[Probe]:
    hs = P.halfspaces
    if dot(hs[facet_id].eta, lam) != -1:
        return None
    t = hs[facet_id].ell(u)
    w = tuple(a - t * b for a, b in zip(u, lam))
    for j, h in enumerate(hs):
        if j != facet_id and h.ell(w) <= 0:
            return None
    s = INF
    for j, h in enumerate(hs):
        d = directed_distance(u, h, lam)
        if not is_inf(d) and (is_inf(s) or d < s):
            s = d
    exit_pt = tuple(a + s * b for a, b in zip(u, lam))
    return Probe(facet_id, lam, w, exit_pt, t + s)


def probe_position(p: Probe, u) -> Fraction:
    """Affine distance from the entry point to ``u``, checking that ``u``
    lies on the open probe segment."""
    u = ratvec(u)
    d = vsub(u, p.entry)
    # u = entry + t * direction with 0 < t < length
    t = None
    for di, li in zip(d, p.direction):
        if li != 0:
            t = Fraction(di) / li
            break
    if t is None or vadd(p.entry, vscale(t, p.direction)) != u or not 0 < t < p.length:
        raise ValueError("point is not on the open probe segment")
    return t


def displaces(p: Probe, u) -> bool:
    return probe_position(p, u) < p.length / 2


def primitive_vectors(dim: int, bound: int) -> list[LatVec]:
    out = []
    for v in product(range(-bound, bound + 1), repeat=dim):
        if reduce(gcd, v, 0) == 1:
            out.append(v)
    return out


def default_bound(P: Polytope) -> int:
    m = max((abs(c) for v in P.vertices for c in v), default=0)
    return int(ceil(m)) + 2


def candidate_directions(P: Polytope, bound: int, mode: str = "box") -> list[LatVec]:
    """Probe directions to search: all primitive vectors of max-norm at most
    ``bound`` (``mode="box"``) or the symmetric lattice points of a
    monotone polytope (``mode="symmetric"``)."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if mode == "box":
        return primitive_vectors(P.dim, bound)
    if mode == "symmetric":
        from .ewald import symmetric_points

        return sorted(symmetric_points(P.centered()))
    raise ValueError(f"unknown direction mode {mode!r}")


def _transverse(P: Polytope, dirs: Sequence[LatVec]) -> list[list[LatVec]]:
    return [[lam for lam in dirs if dot(h.eta, lam) == -1] for h in P.halfspaces]


@lru_cache(maxsize=32)
def _box_transverse(P: Polytope, bound: int) -> tuple[int, list[list[LatVec]]]:
    dirs = primitive_vectors(P.dim, bound)
    return len(dirs), _transverse(P, dirs)


def find_displacing_probe(P: Polytope, u, bound: Optional[int] = None,
                          directions: Optional[Iterable[LatVec]] = None) -> DisplaceReport:
    """Search facets in id order and directions in lexicographic order for a
    probe that displaces ``u``.  A negative answer only means that no probe
    with a searched direction works."""
    u = _require_interior(P, u)
    if directions is None:
        if bound is None:
            bound = default_bound(P)
        n_dirs, per_facet = _box_transverse(P, bound)
    else:
        dirs = sorted(tuple(d) for d in directions)
        n_dirs, per_facet = len(dirs), _transverse(P, dirs)
    for fid, h in enumerate(P.halfspaces):
        for lam in per_facet[fid]:
            p = _probe_through(P, u, fid, lam)
            if p is None:
                continue
            pos = h.ell(u)
            if pos < p.length / 2:
                return DisplaceReport(u, True, p, pos, n_dirs, bound)
    return DisplaceReport(u, False, None, None, n_dirs, bound)


def is_inessential_probe(P: Polytope, p: Probe) -> bool:
    """True if the probe is parallel to every facet except the ones it
    enters and exits through."""
    exits = [j for j, h in enumerate(P.halfspaces) if h.ell(p.exit) == 0]
    if len(exits) != 1:
        return False
    keep = {p.facet_id, exits[0]}
    return all(dot(h.eta, p.direction) == 0
               for j, h in enumerate(P.halfspaces) if j not in keep)
