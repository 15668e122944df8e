"""Built-in example polytopes, addressable as ``catalog:NAME``."""

from __future__ import annotations

import re
from typing import Callable

from .bundles import build_bundle, build_simplex_bundle
from .exact import parse_rat
from .polygons import two_point_blowup
from .polytope import Polytope, polytope

__all__ = ["CATALOG", "MONOTONE_POLYGONS", "catalog_names", "get"]


def square() -> Polytope:
    return polytope(2, [(-1, 0, 1), (1, 0, 1), (0, -1, 1), (0, 1, 1)])


def cp2() -> Polytope:
    return polytope(2, [(-1, 0, 1), (0, -1, 1), (1, 1, 1)])


def cp2_blow1() -> Polytope:
    return polytope(2, [(-1, 0, 1), (0, -1, 1), (1, 1, 1), (1, 0, 1)])


def cp2_blow2() -> Polytope:
    return polytope(2, [(-1, 0, 1), (0, -1, 1), (1, 1, 1), (1, 0, 1), (0, 1, 1)])


def cp2_blow3() -> Polytope:
    return polytope(2, [(-1, 0, 1), (0, -1, 1), (1, 1, 1), (1, 0, 1), (0, 1, 1), (-1, -1, 1)])


def fig4_triangle() -> Polytope:
    return polytope(2, [(-1, 0, 0), (0, -1, 0), (5, 3, 15)])


def fig6_a() -> Polytope:
    """A triangle bundle over a segment, coordinates ``(x, y1, y2)``."""
    seg = polytope(1, [(-1, 1), (1, 1)])
    return build_bundle(seg, cp2(), {0: (-1, 0)})


def fig6_b() -> Polytope:
    return build_simplex_bundle(2, 1)


def fig7_I() -> Polytope:
    return polytope(3, [(-1, 0, 0, 1), (1, 0, 0, 1), (0, -1, 0, 1), (0, 0, -1, 1),
                        (-2, 1, 1, 1)])


def fig7_II() -> Polytope:
    return polytope(3, [(-1, 0, 0, 1), (1, 0, 0, 1), (0, -1, 0, 1), (0, 0, -1, 1),
                        (-2, 1, 1, 1), (1, 0, -1, 1)])


def hirz_odd_k1() -> Polytope:
    return polytope(2, [(-1, 0, 0), (0, -1, 0), (1, -3, 1), (0, 1, 3)])


def hirz_even() -> Polytope:
    return polytope(2, [(-1, 0, 0), (0, -1, 0), (1, -2, 1), (0, 1, 3)])


def rect_1_3() -> Polytope:
    return polytope(2, [(-1, 0, 0), (1, 0, 1), (0, -1, 0), (0, 1, 3)])


def remark25() -> Polytope:
    """A square with one corner cut, times a long interval."""
    return polytope(3, [(-1, 0, 0, 2), (1, 0, 0, 2), (0, -1, 0, 2), (0, 1, 0, 2),
                        (1, 1, 0, 3), (0, 0, -1, 6), (0, 0, 1, 6)])


def cube() -> Polytope:
    rows = []
    for i in range(3):
        for s in (-1, 1):
            eta = [0, 0, 0]
            eta[i] = s
            rows.append((*eta, 1))
    return polytope(3, rows)


def ot_bundle() -> Polytope:
    """Hexagon bundle over a square, twisted over two adjacent base facets."""
    return build_bundle(square(), cp2_blow3(), {1: (1, 0), 3: (0, 1)})


CATALOG: dict[str, Callable[[], Polytope]] = {
    "square": square,
    "cp2": cp2,
    "cp2_blow1": cp2_blow1,
    "cp2_blow2": cp2_blow2,
    "cp2_blow3": cp2_blow3,
    "fig4_triangle": fig4_triangle,
    "fig6_a": fig6_a,
    "fig6_b": fig6_b,
    "fig7_I": fig7_I,
    "fig7_II": fig7_II,
    "hirz_odd_k1": hirz_odd_k1,
    "hirz_even": hirz_even,
    "rect_1_3": rect_1_3,
    "remark25": remark25,
    "cube": cube,
    "ot_bundle": ot_bundle,
}

PARAMETRIC = {
    "simplex_bundle": (lambda k, a: build_simplex_bundle(int(k), int(a)), 2),
    "two_point_blowup": (two_point_blowup, 2),
}

MONOTONE_POLYGONS = ("square", "cp2", "cp2_blow1", "cp2_blow2", "cp2_blow3")

_CALL = re.compile(r"^([a-z_0-9]+)\((.*)\)$", re.IGNORECASE)


def catalog_names() -> list[str]:
    return list(CATALOG) + [f"{k}(...)" for k in PARAMETRIC]


def get(name: str) -> Polytope:
    """Look up ``name`` or a parametric form like ``simplex_bundle(2,1)``."""
    name = name.strip()
    if name in CATALOG:
        return CATALOG[name]()
    m = _CALL.match(name)
    if m and m.group(1) in PARAMETRIC:
        fn, arity = PARAMETRIC[m.group(1)]
        args = [a for a in m.group(2).split(",") if a.strip()]
        if len(args) != arity:
            raise ValueError(f"{m.group(1)} takes {arity} arguments")
        vals = [parse_rat(a) for a in args]
        if m.group(1) == "simplex_bundle" and any(v.denominator != 1 for v in vals):
            raise ValueError("simplex_bundle takes integer arguments")
        return fn(*vals)
    raise KeyError(f"unknown catalog entry {name!r}")
