"""H-representation polytopes with exact vertex, face and lattice-point
enumeration plus the smooth / reflexive / monotone predicates."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import ceil, floor
from typing import Iterable, Optional, Sequence

from .exact import (
    LatVec, RatVec, affine_rank, det, dot, make_primitive,
    primitive_direction, rat, ratvec, solve, vadd, vsub,
)
from .lp import LPInfeasible, LPUnbounded, exact_lp_max

log = logging.getLogger(__name__)
logging.getLogger("probelab").addHandler(logging.NullHandler())


class PolytopeError(ValueError):
    """Invalid polytope input (unbounded, degenerate, malformed)."""


@dataclass(frozen=True)
class HalfSpace:
    """``<eta, x> <= kappa`` with ``eta`` primitive integral."""

    eta: LatVec
    kappa: Fraction

    def __post_init__(self):
        eta = tuple(int(c) for c in self.eta)
        prim, g = make_primitive(eta)
        object.__setattr__(self, "eta", prim)
        object.__setattr__(self, "kappa", rat(self.kappa) / g)

    def ell(self, u) -> Fraction:
        return self.kappa - dot(self.eta, u)


@dataclass(frozen=True)
class Face:
    facet_ids: frozenset
    dim: int
    vertex_ids: frozenset


@dataclass(frozen=True)
class Edge:
    endpoints: tuple[int, int]
    direction: LatVec
    length: Fraction


@dataclass(frozen=True)
class Verdict:
    """A boolean answer that carries its reason when false."""

    ok: bool
    reason: str = ""
    value: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class Polytope:
    dim: int
    halfspaces: tuple[HalfSpace, ...]
    vertices: tuple[RatVec, ...]
    incidence: tuple[frozenset, ...]
    dropped: tuple[HalfSpace, ...] = field(default=())

    # -- construction ------------------------------------------------------

    @classmethod
    def from_halfspaces(cls, dim: int, halfspaces: Iterable) -> "Polytope":
        if dim < 1:
            raise PolytopeError("dimension must be at least 1")
        hs = [h if isinstance(h, HalfSpace) else HalfSpace(*h) for h in halfspaces]
        if not hs:
            raise PolytopeError("no halfspaces given")
        for h in hs:
            if len(h.eta) != dim:
                raise PolytopeError(f"normal {h.eta} has wrong length for dim {dim}")

        a = [h.eta for h in hs]
        b = [h.kappa for h in hs]
        # full-dimensional iff some point satisfies every inequality strictly
        try:
            res = exact_lp_max([0] * dim + [1],
                               [list(r) + [1] for r in a] + [[0] * dim + [1]],
                               b + [1])
        except LPInfeasible:
            raise PolytopeError("degenerate: empty feasible set") from None
        if res.value <= 0:
            raise PolytopeError("degenerate: feasible set has empty interior")
        for i in range(dim):
            for s in (1, -1):
                obj = [0] * dim
                obj[i] = s
                try:
                    exact_lp_max(obj, a, b)
                except LPUnbounded:
                    raise PolytopeError("unbounded") from None

        verts = _enumerate_vertices(dim, hs)
        kept, dropped = [], []
        for i, h in enumerate(hs):
            on = [v for v in verts if h.ell(v) == 0]
            dup = any(k.eta == h.eta and k.kappa == h.kappa for k in kept)
            if dup or not on or affine_rank(on) < dim - 1:
                dropped.append(h)
            else:
                kept.append(h)
        for h in dropped:
            log.warning("dropping redundant halfspace %s <= %s", h.eta, h.kappa)
        inc = tuple(frozenset(i for i, h in enumerate(kept) if h.ell(v) == 0)
                    for v in verts)
        return cls(dim, tuple(kept), tuple(verts), inc, tuple(dropped))

    # -- basic queries -----------------------------------------------------

    @property
    def n_facets(self) -> int:
        return len(self.halfspaces)

    def ell(self, i: int, u) -> Fraction:
        if not 0 <= i < len(self.halfspaces):
            raise IndexError(f"invalid facet id {i}")
        return self.halfspaces[i].ell(u)

    def ells(self, u) -> tuple[Fraction, ...]:
        return tuple(h.ell(u) for h in self.halfspaces)

    def contains(self, u) -> bool:
        return all(h.ell(u) >= 0 for h in self.halfspaces)

    def interior_contains(self, u) -> bool:
        return all(h.ell(u) > 0 for h in self.halfspaces)

    def facets_through(self, u) -> frozenset:
        return frozenset(i for i, h in enumerate(self.halfspaces) if h.ell(u) == 0)

    def facet_vertices(self, i: int) -> list[int]:
        return [k for k, inc in enumerate(self.incidence) if i in inc]

    def translate(self, shift: Sequence) -> "Polytope":
        shift = ratvec(shift)
        hs = [HalfSpace(h.eta, h.kappa + dot(h.eta, shift)) for h in self.halfspaces]
        return Polytope.from_halfspaces(self.dim, hs)

    def __repr__(self):
        return f"<Polytope dim={self.dim} facets={self.n_facets} vertices={len(self.vertices)}>"

    def same_as(self, other: "Polytope") -> bool:
        """Equal as ordered H-representations."""
        return self.dim == other.dim and self.halfspaces == other.halfspaces

    # -- combinatorics -----------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """All nonempty proper faces in canonical (maximal facet set) form."""
        nv = len(self.vertices)
        all_v = frozenset(range(nv))
        facet_vsets = [frozenset(self.facet_vertices(i)) for i in range(self.n_facets)]
        seen = {}
        frontier = []
        for vs in facet_vsets:
            if vs and vs != all_v and vs not in seen:
                seen[vs] = None
                frontier.append(vs)
        while frontier:
            nxt = []
            for vs in frontier:
                for fv in facet_vsets:
                    inter = vs & fv
                    if inter and inter not in seen:
                        seen[inter] = None
                        nxt.append(inter)
            frontier = nxt
        faces = []
        for vs in seen:
            ids = frozenset.intersection(*(self.incidence[v] for v in vs))
            d = affine_rank([self.vertices[v] for v in sorted(vs)])
            faces.append(Face(ids, d, vs))
        faces.sort(key=lambda f: (f.dim, sorted(f.vertex_ids)))
        return tuple(faces)

    @cached_property
    def face_index(self) -> dict:
        """Faces keyed by their canonical facet-id set."""
        return {f.facet_ids: f for f in self.faces}

    def faces_of_dim(self, d: int) -> list[Face]:
        return [f for f in self.faces if f.dim == d]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for f in self.faces_of_dim(1):
            a, b = sorted(f.vertex_ids)
            va, vb = self.vertices[a], self.vertices[b]
            d, t = primitive_direction(vsub(vb, va))
            out.append(Edge((a, b), d, t))
        return tuple(out)

    def vertex_index(self, v) -> int:
        v = ratvec(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            raise ValueError(f"{v} is not a vertex") from None

    def edge_directions(self, vi: int) -> dict[int, LatVec]:
        """Primitive edge directions at a vertex of a simple polytope,
        keyed by the facet each edge leaves."""
        inc = sorted(self.incidence[vi])
        if len(inc) != self.dim:
            raise PolytopeError("not simple")
        rows = [self.halfspaces[i].eta for i in inc]
        out = {}
        for k, i in enumerate(inc):
            rhs = [0] * self.dim
            rhs[k] = -1
            d = solve(rows, rhs)
            out[i] = primitive_direction(d)[0]
        return out

    # -- lattice points ----------------------------------------------------

    def bounding_box(self) -> list[tuple[int, int]]:
        box = []
        for i in range(self.dim):
            cs = [v[i] for v in self.vertices]
            box.append((ceil(min(cs)), floor(max(cs))))
        return box

    @cached_property
    def lattice_points(self) -> tuple[LatVec, ...]:
        box = self.bounding_box()
        etas = [h.eta for h in self.halfspaces]
        ks = [h.kappa for h in self.halfspaces]
        pts = []
        for p in product(*(range(lo, hi + 1) for lo, hi in box)):
            if all(dot(e, p) <= k for e, k in zip(etas, ks)):
                pts.append(p)
        return tuple(pts)

    def interior_lattice_points(self) -> list[LatVec]:
        return [p for p in self.lattice_points if self.interior_contains(p)]

    # -- predicates --------------------------------------------------------

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for v in self.vertices for c in v)

    def is_simple(self) -> bool:
        return all(len(inc) == self.dim for inc in self.incidence)

    def smoothness(self) -> Verdict:
        if not self.is_simple():
            return Verdict(False, "not simple")
        for vi, inc in enumerate(self.incidence):
            d = det([self.halfspaces[i].eta for i in sorted(inc)])
            if abs(d) != 1:
                return Verdict(False, f"normals at vertex {vi} have determinant {d}")
        return Verdict(True)

    def is_smooth(self) -> bool:
        return bool(self.smoothness())

    def is_reflexive(self) -> bool:
        origin = (0,) * self.dim
        if not self.interior_contains(origin):
            raise PolytopeError("origin not interior")
        return self.is_integral() and all(h.kappa == 1 for h in self.halfspaces)

    def monotonicity(self) -> Verdict:
        """Vertex-Fano test; ``value`` holds the special point on success."""
        sm = self.smoothness()
        if not sm:
            return Verdict(False, sm.reason)
        if not self.is_integral():
            return Verdict(False, "not integral")
        u0 = None
        for vi, v in enumerate(self.vertices):
            s = v
            for d in self.edge_directions(vi).values():
                s = vadd(s, d)
            if u0 is None:
                u0 = s
            elif s != u0:
                return Verdict(False, f"vertex-Fano sums disagree at vertex {vi}")
        u0 = tuple(int(c) for c in u0)
        if not self.interior_contains(u0):
            return Verdict(False, "vertex-Fano point is not interior")
        if len(self.interior_lattice_points()) != 1:
            return Verdict(False, "interior lattice point not unique")
        return Verdict(True, value=u0)

    def is_monotone(self) -> tuple[bool, Optional[LatVec]]:
        v = self.monotonicity()
        return v.ok, v.value

    def centered(self) -> "Polytope":
        """Translate a monotone polytope so its special point is the origin."""
        ok, u0 = self.is_monotone()
        if not ok:
            raise PolytopeError("not monotone")
        if not any(u0):
            return self
        return self.translate(tuple(-c for c in u0))

    def edge_chern_number(self, e: Edge) -> int:
        """First Chern number of the sphere over an edge of a smooth polytope,
        read off from the edge directions at both endpoints."""
        if not self.is_smooth():
            raise PolytopeError("not smooth")
        w0, w1 = e.endpoints
        dirs0 = self.edge_directions(w0)
        along = [i for i, d in dirs0.items() if tuple(d) == e.direction]
        if len(along) != 1:
            raise ValueError("edge not incident to its endpoint")
        others0 = [dirs0[i] for i in sorted(dirs0) if i != along[0]]
        basis = [e.direction] + others0  # columns
        cols = list(zip(*basis))
        back = tuple(-c for c in e.direction)
        total = 0
        for d in self.edge_directions(w1).values():
            if tuple(d) == back:
                continue
            coeffs = solve(cols, d)
            total += coeffs[0]
        return int(2 - total)


def _enumerate_vertices(dim: int, hs: Sequence[HalfSpace]) -> list[RatVec]:
    seen = {}
    for idx in combinations(range(len(hs)), dim):
        rows = [hs[i].eta for i in idx]
        x = solve(rows, [hs[i].kappa for i in idx])
        if x is None:
            continue
        if all(h.ell(x) >= 0 for h in hs):
            seen.setdefault(x, None)
    return sorted(seen)


def polytope(dim: int, rows: Iterable[Sequence]) -> Polytope:
    """Shorthand: rows are ``(*eta, kappa)``."""
    return Polytope.from_halfspaces(dim, [HalfSpace(r[:-1], r[-1]) for r in rows])
