"""Command-line interface.

Every command that takes a polytope accepts a file path or ``catalog:NAME``.
Exit status: 0 success, 1 the queried property is false, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog
from .bundles import build_delta1_bundle, build_simplex_bundle, verify_bundle
from .central import CascadeError, central_point
from .ewald import star_ewald, strong_ewald, symmetric_points, synthesize_displacement, weak_ewald
from .exact import format_rat, format_vec, parse_rat
from .fileio import PolytopeFileError, format_polytope, read_polytope
from .polytope import Polytope, PolytopeError
from .probes import find_displacing_probe
from .scan import export_csv, grid_points, render_svg, scan

OK, FALSE, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load(spec: str):
    """Return ``(polytope, ghosts)`` for a path or ``catalog:NAME``."""
    if spec.startswith("catalog:"):
        try:
            return catalog.get(spec[len("catalog:"):]), []
        except (KeyError, ValueError) as exc:
            raise InputError(exc.args[0] if exc.args else str(exc)) from None
    try:
        return read_polytope(spec)
    except OSError as exc:
        raise InputError(f"{spec}: {exc.strerror}") from None
    except PolytopeFileError as exc:
        raise InputError(f"{spec}: {exc}") from None


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_check(args, out) -> int:
    P, _ = load(args.polytope)
    out.write(f"dim: {P.dim}\nfacets: {P.n_facets}\nvertices: {len(P.vertices)}\n")
    if P.dropped:
        out.write(f"dropped redundant halfspaces: {len(P.dropped)}\n")
    out.write(f"simple: {_yn(P.is_simple())}\n")
    out.write(f"integral: {_yn(P.is_integral())}\n")
    sm = P.smoothness()
    out.write(f"smooth: {_yn(sm.ok)}" + (f" ({sm.reason})" if not sm.ok else "") + "\n")
    try:
        out.write(f"reflexive: {_yn(P.is_reflexive())}\n")
    except PolytopeError as exc:
        out.write(f"reflexive: n/a ({exc})\n")
    mono = P.monotonicity()
    if mono.ok:
        out.write(f"monotone: yes u0={format_vec(mono.value)}\n")
    else:
        out.write(f"monotone: no ({mono.reason})\n")
    return OK


def cmd_v0(args, out) -> int:
    P, ghosts = load(args.polytope)
    out.write(central_point(P, ghosts).format())
    return OK


def _parse_point(text: str, dim: int):
    try:
        pt = tuple(parse_rat(t) for t in text.split(","))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(pt) != dim:
        raise InputError(f"point needs {dim} coordinates")
    return pt


def cmd_displace(args, out) -> int:
    P, ghosts = load(args.polytope)
    u = _parse_point(args.point, P.dim)
    if not P.interior_contains(u):
        raise InputError("point not interior")
    rep = find_displacing_probe(P, u, args.bound)
    if rep.displaced:
        p = rep.witness
        out.write(f"displaced facet={p.facet_id} dir={format_vec(p.direction)} "
                  f"entry={format_vec(p.entry)} exit={format_vec(p.exit)} "
                  f"length={format_rat(p.length)} position={format_rat(rep.position)}\n")
        return OK
    note = " (v0)" if central_point(P, ghosts).v0 == u else ""
    out.write(f"not displaced{note}\n")
    out.write(f"searched {rep.searched_directions} directions up to bound {rep.direction_bound}\n")
    return FALSE


def cmd_scan(args, out) -> int:
    P, _ = load(args.polytope)
    if args.res < 2:
        raise InputError("--res must be at least 2")
    if (args.svg or args.png) and P.dim != 2:
        raise InputError("image output needs a 2-dimensional polytope")
    grid = scan(P, args.res, args.bound)
    text = export_csv(grid)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    if args.svg:
        Path(args.svg).write_text(render_svg(grid), encoding="utf-8")
    if args.png:
        from .plotting import plot_scan

        plot_scan(grid, args.png, title=args.polytope, v0=central_point(P).v0)
    if args.csv or args.svg or args.png:
        nd = len(grid.not_displaced())
        out.write(f"samples={len(grid.cells)} displaced={len(grid.cells) - nd} "
                  f"not_displaced={nd} bound={grid.bound}\n")
    else:
        out.write(text)
    return OK


def _centre(P: Polytope) -> Polytope:
    ok, u0 = P.is_monotone()
    if ok:
        return P.centered()
    if not P.interior_contains((0,) * P.dim):
        raise InputError("polytope is not monotone and the origin is not interior")
    return P


def _ewald_one(P: Polytope, mode: str, synthesize: bool, res: int, out) -> bool:
    P = _centre(P)
    if mode == "weak":
        ok, basis = weak_ewald(P)
        out.write(f"weak Ewald: {_yn(ok)}")
        out.write(f" basis={' '.join(format_vec(b) for b in basis)}\n" if ok else "\n")
        return ok
    if mode == "strong":
        per = strong_ewald(P)
        for i, basis in per.items():
            b = " ".join(format_vec(v) for v in basis) if basis else "none"
            out.write(f"facet={i} satisfied={int(basis is not None)} basis={b}\n")
        ok = all(b is not None for b in per.values())
        out.write(f"strong Ewald: {_yn(ok)}\n")
        return ok
    ok, verdicts = star_ewald(P)
    for v in verdicts:
        out.write(v.format() + "\n")
    out.write(f"star Ewald: {_yn(ok)}\n")
    if synthesize and ok:
        sym = symmetric_points(P)
        pts = [p for p in grid_points(P, res) if any(p)]
        failed = [p for p in pts if not synthesize_displacement(P, p, sym).displaced]
        out.write(f"synthesized probes: {len(pts) - len(failed)}/{len(pts)} grid points displaced\n")
        for p in failed:
            out.write(f"  not displaced: {format_vec(p)}\n")
        ok = not failed
    return ok


def cmd_ewald(args, out) -> int:
    all_ok = True
    for spec in args.polytope:
        P, _ = load(spec)
        if len(args.polytope) > 1:
            out.write(f"== {spec}\n")
        all_ok &= _ewald_one(P, args.mode, args.synthesize, args.res, out)
    return OK if all_ok else FALSE


def cmd_bundle(args, out) -> int:
    if args.simplex is not None:
        if args.alpha is None:
            raise InputError("--simplex needs --alpha")
        P = build_simplex_bundle(args.simplex, args.alpha)
        label = f"simplex bundle k={args.simplex} alpha={args.alpha}"
    else:
        if args.base is None or args.b is None:
            raise InputError("give --base FILE --b LIST or --simplex K --alpha A")
        base, _ = load(args.base)
        try:
            b = [int(t) for t in args.b.split(",")]
        except ValueError:
            raise InputError("--b takes comma-separated integers") from None
        P = build_delta1_bundle(base, b)
        label = f"segment bundle over {args.base} with b={args.b}"
    n_base = P.n_facets - 2
    spec = verify_bundle(P, range(n_base, P.n_facets))
    notes = {i: "base" for i in spec.base_facet_ids}
    notes.update({j: "fiber" for j in spec.fiber_facet_ids})
    text = format_polytope(P, comments=[label], facet_notes=notes)
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    mono, u0 = P.is_monotone()
    sys.stderr.write(f"monotone: {_yn(mono)}\n")
    return OK


def cmd_catalog(args, out) -> int:
    if args.name is None:
        for n in catalog.catalog_names():
            out.write(n + "\n")
        return OK
    P, _ = load("catalog:" + args.name)
    text = format_polytope(P, comments=[f"catalog:{args.name}"])
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="probelab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural report")
    p.add_argument("polytope")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("v0", help="maximin cascade and central point")
    p.add_argument("polytope")
    p.set_defaults(func=cmd_v0)

    p = sub.add_parser("displace", help="search for a displacing probe")
    p.add_argument("polytope")
    p.add_argument("--point", required=True, help="comma-separated rationals, e.g. 1/2,1")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_displace)

    p = sub.add_parser("scan", help="grid scan with CSV/SVG/PNG output")
    p.add_argument("polytope")
    p.add_argument("--res", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--csv")
    p.add_argument("--svg")
    p.add_argument("--png")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ewald", help="weak/strong/star Ewald checks (several files allowed)")
    p.add_argument("polytope", nargs="+")
    p.add_argument("--mode", choices=("weak", "strong", "star"), default="star")
    p.add_argument("--synthesize", action="store_true",
                   help="also displace every grid point with the witness probes")
    p.add_argument("--res", type=int, default=8)
    p.set_defaults(func=cmd_ewald)

    p = sub.add_parser("bundle", help="build a segment bundle")
    p.add_argument("--base")
    p.add_argument("--b")
    p.add_argument("--simplex", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--emit")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("catalog", help="list or print built-in polytopes")
    p.add_argument("name", nargs="?")
    p.add_argument("--emit")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, PolytopeError, CascadeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
