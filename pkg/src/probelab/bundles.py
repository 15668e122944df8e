"""Bundle polytopes: construction, verification, slices and slabs.

Ambient coordinates of a constructed bundle are ``(x, y)`` with ``x`` in
the base and ``y`` in the fiber.  Fiber facets read ``<eta_j, y> <= k_j``;
base facets read ``<eta_i, x> + <a_i, y> <= k_i`` where ``a_i`` is the
twist of base facet ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .exact import (
    LatVec, RatVec, dot, extend_to_basis, identity, integer_inverse,
    integer_kernel, matmul, matvec, rank, ratvec, solve, transpose,
)
from .polytope import HalfSpace, Polytope, PolytopeError

__all__ = [
    "BundleError", "BundleSpec", "Splitting", "build_bundle",
    "build_delta1_bundle", "build_simplex_bundle", "fiber_polytope", "slab",
    "slice", "verify_bundle",
]


class BundleError(PolytopeError):
    pass


@dataclass(frozen=True)
class Splitting:
    """A unimodular change of coordinates ``x = B z`` with ``z = (z_b, y)``
    in which every fiber-facet normal has zero base part."""

    k: int
    m: int
    matrix: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, b, k: int) -> "Splitting":
        b = [list(map(int, r)) for r in b]
        inv = integer_inverse(b)
        return cls(k, len(b) - k, tuple(map(tuple, b)), tuple(map(tuple, inv)))

    def normal(self, eta) -> LatVec:
        """A normal in split coordinates (``B^T eta``)."""
        return tuple(matvec(transpose(self.matrix), eta))

    def fiber_coords(self, x) -> RatVec:
        return tuple(matvec(self.inverse, ratvec(x)))[self.k:]

    def base_coords(self, x) -> RatVec:
        return tuple(matvec(self.inverse, ratvec(x)))[:self.k]

    def ambient(self, zb, y) -> RatVec:
        return tuple(matvec(self.matrix, tuple(ratvec(zb)) + tuple(ratvec(y))))

    def sheared(self, s: Sequence[Sequence[int]]) -> "Splitting":
        """The same fiber projection with a different base complement:
        ``B [[I, S], [0, I]]`` for an integer ``k x m`` matrix ``S``."""
        n = self.k + self.m
        block = identity(n)
        for i in range(self.k):
            for j in range(self.m):
                block[i][self.k + j] = int(s[i][j])
        return Splitting.from_matrix(matmul(self.matrix, block), self.k)


@dataclass(frozen=True)
class BundleSpec:
    polytope: Polytope
    splitting: Splitting
    base: Polytope
    fiber: Polytope
    base_facet_ids: tuple[int, ...]
    fiber_facet_ids: tuple[int, ...]
    fiber_monotone: Optional[bool]


def build_bundle(base: Polytope, fiber: Polytope,
                 twists: Mapping[int, Sequence[int]] = {}) -> Polytope:
    """Total space with base facets first (in base order) followed by the
    fiber facets.  Raises :class:`BundleError` unless the result is
    combinatorially the product."""
    k, m = base.dim, fiber.dim
    hs = []
    for i, h in enumerate(base.halfspaces):
        a = tuple(int(c) for c in twists.get(i, (0,) * m))
        if len(a) != m:
            raise BundleError(f"twist for base facet {i} must have {m} entries")
        hs.append(HalfSpace(tuple(h.eta) + a, h.kappa))
    for h in fiber.halfspaces:
        hs.append(HalfSpace((0,) * k + tuple(h.eta), h.kappa))
    try:
        P = Polytope.from_halfspaces(k + m, hs)
    except PolytopeError as exc:
        raise BundleError(f"not a bundle (combinatorics broke): {exc}") from None
    if P.dropped:
        raise BundleError("not a bundle (combinatorics broke): a facet disappeared")
    fiber_ids = range(base.n_facets, base.n_facets + fiber.n_facets)
    verify_bundle(P, fiber_ids)
    return P


def _edge_pairs(base: Polytope):
    if base.dim == 1:
        return [(0, 1)]
    return [e.endpoints for e in base.edges]


def build_delta1_bundle(base: Polytope, b: Sequence[int]) -> Polytope:
    """``{-1 <= y <= 1, <x, eta_i> <= 1 - b_i y}`` over a centred monotone
    base."""
    b = [int(c) for c in b]
    if len(b) != base.n_facets:
        raise BundleError(f"need {base.n_facets} twist values, got {len(b)}")
    if any(h.kappa != 1 for h in base.halfspaces):
        raise BundleError("base must have every support constant equal to 1")
    if base.is_smooth():
        # each base edge must keep positive length on both end facets y = +-1
        for v0, v1 in _edge_pairs(base):
            inc0, inc1 = base.incidence[v0], base.incidence[v1]
            leave0 = next(iter(inc0 - inc1))
            leave1 = next(iter(inc1 - inc0))
            rows = [base.halfspaces[j].eta for j in sorted(inc0)]
            w = solve(rows, [-b[j] for j in sorted(inc0)])
            length = base.halfspaces[leave1].ell(base.vertices[v0])
            for y in (1, -1):
                ly = length - b[leave1] * y - y * dot(base.halfspaces[leave1].eta, w)
                if ly < 1:
                    raise BundleError(
                        "not a bundle (combinatorics broke): edge between facets "
                        f"{leave0} and {leave1} has length {ly} on y={y}; need "
                        f"L(e) >= |b_{leave0} - b_{leave1}| + 1")
    seg = Polytope.from_halfspaces(1, [HalfSpace((-1,), 1), HalfSpace((1,), 1)])
    # <x, eta_i> + b_i y <= 1
    return build_bundle(base, seg, {i: (c,) for i, c in enumerate(b)})


def simplex(k: int) -> Polytope:
    hs = [HalfSpace(tuple(-int(i == j) for j in range(k)), 1) for i in range(k)]
    hs.append(HalfSpace((1,) * k, 1))
    return Polytope.from_halfspaces(k, hs)


def build_simplex_bundle(k: int, alpha: int) -> Polytope:
    """``{-1 <= y <= 1, x_i >= -1, sum x_i <= 1 + alpha y}``."""
    if k < 1:
        raise BundleError("k must be positive")
    if not 0 <= alpha <= k:
        raise BundleError(f"alpha must lie in [0, {k}] for a monotone bundle")
    return build_delta1_bundle(simplex(k), [0] * k + [-alpha])


def _split_for(P: Polytope, fiber_ids: Sequence[int]) -> Splitting:
    normals = [P.halfspaces[j].eta for j in fiber_ids]
    m = rank(normals)
    k = P.dim - m
    if k == 0:
        raise BundleError("fiber facet normals span every direction; no base is left")
    kernel = integer_kernel(normals, P.dim)
    return Splitting.from_matrix(extend_to_basis(kernel, P.dim), k)


def fiber_polytope(P: Polytope, splitting: Splitting, fiber_ids: Sequence[int]) -> Polytope:
    k = splitting.k
    hs = []
    for j in fiber_ids:
        eta = splitting.normal(P.halfspaces[j].eta)
        if any(eta[:k]):
            raise BundleError(f"facet {j} is not a fiber facet in this splitting")
        hs.append(HalfSpace(eta[k:], P.halfspaces[j].kappa))
    try:
        F = Polytope.from_halfspaces(splitting.m, hs)
    except PolytopeError as exc:
        raise BundleError(f"fiber facets do not bound a fiber polytope: {exc}") from None
    if F.dropped:
        raise BundleError("a fiber facet is redundant in the fiber")
    return F


def slice(P: Polytope, splitting: Splitting, y) -> Polytope:
    """``P`` intersected with the fiber-coordinate level ``y``, written in
    base coordinates."""
    y = ratvec(y)
    if len(y) != splitting.m:
        raise ValueError("fiber point has wrong dimension")
    k = splitting.k
    hs = []
    for j, h in enumerate(P.halfspaces):
        eta = splitting.normal(h.eta)
        rhs = h.kappa - dot(eta[k:], y)
        if not any(eta[:k]):
            if rhs < 0:
                raise BundleError("y outside fiber")
            continue
        hs.append(HalfSpace(eta[:k], rhs))
    return Polytope.from_halfspaces(k, hs)


def slab(P: Polytope, splitting: Splitting, w: Sequence[int],
         fiber_ids: Optional[Sequence[int]] = None) -> Polytope:
    """``P`` over the fiber segment ``[-w, w]``, in coordinates
    ``(z_b, c)`` with fiber point ``c w``."""
    w = tuple(int(c) for c in w)
    if len(w) != splitting.m or not any(w):
        raise BundleError("w must be a nonzero fiber lattice vector")
    k = splitting.k
    hs = [HalfSpace((0,) * k + (1,), 1), HalfSpace((0,) * k + (-1,), 1)]
    for h in P.halfspaces:
        eta = splitting.normal(h.eta)
        if not any(eta[:k]):
            for s in (1, -1):
                if h.kappa - s * dot(eta[k:], w) < 0:
                    raise BundleError("w is not a symmetric point of the fiber")
        row = eta[:k] + (dot(eta[k:], w),)
        if any(row):
            hs.append(HalfSpace(row, h.kappa))
    return Polytope.from_halfspaces(k + 1, hs)


def verify_bundle(P: Polytope, fiber_facet_ids: Sequence[int]) -> BundleSpec:
    """Check that the given facets are the fiber facets of a bundle
    structure on ``P`` and return the pieces."""
    fids = tuple(sorted(set(int(j) for j in fiber_facet_ids)))
    if not fids or any(not 0 <= j < P.n_facets for j in fids):
        raise BundleError("invalid fiber facet ids")
    bids = tuple(j for j in range(P.n_facets) if j not in fids)
    if not bids:
        raise BundleError("no base facets left")
    split = _split_for(P, fids)
    fiber = fiber_polytope(P, split, fids)

    from .central import central_point

    y0 = central_point(fiber).v0
    base = slice(P, split, y0)
    if base.n_facets != len(bids) or base.dropped:
        raise BundleError("base facets do not all survive in the slice")

    expected = set()
    for ib in base.incidence:
        for jf in fiber.incidence:
            expected.add(frozenset(bids[i] for i in ib) | frozenset(fids[j] for j in jf))
    actual = set(P.incidence)
    if len(P.vertices) != len(base.vertices) * len(fiber.vertices) or actual != expected:
        raise BundleError("vertex-facet incidences differ from those of base x fiber")
    mono = None
    if P.is_monotone()[0]:
        mono = fiber.is_monotone()[0]
    return BundleSpec(P, split, base, fiber, bids, fids, mono)
