"""The maximin cascade that pins down the central point v0.

Each round maximizes the smallest still-active affine distance over the
current region, then freezes the functionals that are forced to equal
that maximum.  The region shrinks until it is a single point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact import (
    LatVec, RatVec, dot, format_rat, format_vec, make_primitive, rank, rat,
    solve,
)
from .lp import LPError, LPResult, exact_lp_max
from .polytope import Polytope, PolytopeError

__all__ = [
    "AffineFunctional", "CascadeError", "MaximinTrace", "Region", "Round",
    "central_point", "exact_lp_max", "facet_functionals", "maximin_step",
]


class CascadeError(RuntimeError):
    pass


@dataclass(frozen=True)
class AffineFunctional:
    """``u -> kappa - <eta, u>``; ghosts do not bound the polytope."""

    eta: LatVec
    kappa: Fraction
    ghost: bool = False

    def __post_init__(self):
        prim, g = make_primitive(self.eta)
        object.__setattr__(self, "eta", prim)
        object.__setattr__(self, "kappa", rat(self.kappa) / g)

    def ell(self, u) -> Fraction:
        return self.kappa - dot(self.eta, u)


def facet_functionals(P: Polytope) -> list[AffineFunctional]:
    return [AffineFunctional(h.eta, h.kappa) for h in P.halfspaces]


@dataclass(frozen=True)
class Region:
    """``{x : <a, x> <= b for (a, b) in ineq, <a, x> = b for (a, b) in eq}``."""

    dim: int
    ineq: tuple[tuple[LatVec, Fraction], ...]
    eq: tuple[tuple[LatVec, Fraction], ...] = ()

    @property
    def affine_dim(self) -> int:
        return self.dim - rank([a for a, _ in self.eq])

    def lp_max(self, objective: Sequence, extra_ineq=()) -> LPResult:
        ineq = list(self.ineq) + list(extra_ineq)
        return exact_lp_max(objective, [a for a, _ in ineq], [b for _, b in ineq],
                            [a for a, _ in self.eq], [b for _, b in self.eq])

    def contains(self, x) -> bool:
        return (all(dot(a, x) <= b for a, b in self.ineq)
                and all(dot(a, x) == b for a, b in self.eq))

    def vertices(self) -> list[RatVec]:
        """Vertices of the region, found by completing a basis of the
        equality normals with inequality rows."""
        basis: list[tuple[LatVec, Fraction]] = []
        for a, b in self.eq:
            if rank([r for r, _ in basis] + [a]) > len(basis):
                basis.append((a, b))
        free = self.dim - len(basis)
        out = {}
        for combo in combinations(self.ineq, free):
            rows = basis + list(combo)
            x = solve([r for r, _ in rows], [b for _, b in rows])
            if x is not None and self.contains(x):
                out.setdefault(x, None)
        return sorted(out)


@dataclass(frozen=True)
class Round:
    s: Fraction
    region: Region
    ids: frozenset
    dim: int


@dataclass(frozen=True)
class MaximinTrace:
    rounds: tuple[Round, ...]
    v0: RatVec
    functionals: tuple[AffineFunctional, ...] = field(repr=False, default=())

    @property
    def s_values(self) -> list[Fraction]:
        return [r.s for r in self.rounds]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(r.dim for r in self.rounds)

    def format(self) -> str:
        lines = []
        for k, r in enumerate(self.rounds, 1):
            ids = ",".join(str(i) for i in sorted(r.ids))
            lines.append(f"{k} {format_rat(r.s)} {r.dim} I_{k}={{{ids}}}")
        lines.append(f"v0 = {format_vec(self.v0)}")
        return "\n".join(lines) + "\n"


def maximin_step(functionals: Sequence[AffineFunctional], region: Region,
                 assigned: Iterable[int] = ()) -> tuple[Fraction, Region, frozenset]:
    """One round: returns ``(S, next_region, newly_frozen_ids)``."""
    assigned = set(assigned)
    active = [i for i in range(len(functionals)) if i not in assigned]
    if not active:
        raise CascadeError("cascade stalled")
    n = region.dim
    # variables (x, t): maximize t with l_i(x) >= t for active i
    extra = [(tuple(functionals[i].eta) + (1,), functionals[i].kappa) for i in active]
    lifted = Region(n + 1,
                    tuple((a + (0,), b) for a, b in region.ineq),
                    tuple((a + (0,), b) for a, b in region.eq))
    try:
        s = lifted.lp_max([0] * n + [1], extra).value
    except LPError as exc:
        raise CascadeError(f"maximin LP failed: {exc}") from None
    new_ineq = tuple((functionals[i].eta, functionals[i].kappa - s) for i in active)
    nxt = Region(n, region.ineq + new_ineq, region.eq)
    frozen = []
    for i in active:
        f = functionals[i]
        # l_i >= s on the new region; it is frozen iff it cannot exceed s
        top = f.kappa + nxt.lp_max([-c for c in f.eta]).value
        if top == s:
            frozen.append(i)
    if not frozen:
        raise CascadeError("cascade stalled")
    eq = nxt.eq + tuple((functionals[i].eta, functionals[i].kappa - s) for i in frozen)
    return s, Region(n, nxt.ineq, eq), frozenset(frozen)


def central_point(P: Polytope, extra: Sequence[AffineFunctional] = ()) -> MaximinTrace:
    """Run the cascade over the facet functionals of ``P`` plus any ghost
    functionals in ``extra``; ids of ghosts follow the facet ids."""
    funcs = facet_functionals(P)
    for g in extra:
        if len(g.eta) != P.dim:
            raise PolytopeError("ghost functional has wrong dimension")
        if min(g.ell(v) for v in P.vertices) <= 0:
            raise PolytopeError(f"ghost functional {g.eta} <= {g.kappa} is not positive on the polytope")
        funcs.append(AffineFunctional(g.eta, g.kappa, True))
    region = Region(P.dim, tuple((h.eta, h.kappa) for h in P.halfspaces))
    rounds = []
    assigned: set[int] = set()
    while True:
        s, region, ids = maximin_step(funcs, region, assigned)
        assigned |= ids
        d = region.affine_dim
        rounds.append(Round(s, region, ids, d))
        if d == 0:
            break
    v0 = _solve_point(region)
    return MaximinTrace(tuple(rounds), v0, tuple(funcs))


def _solve_point(region: Region) -> RatVec:
    rows: list[tuple[LatVec, Fraction]] = []
    for a, b in region.eq:
        if rank([r for r, _ in rows] + [a]) > len(rows):
            rows.append((a, b))
    x = solve([r for r, _ in rows], [b for _, b in rows])
    if x is None or not region.contains(x):
        raise CascadeError("final region is not a point")
    return x
