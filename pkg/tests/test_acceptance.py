"""Acceptance criteria, one test each.  Every test prints a single
``criterion N: PASS|FAIL`` line, collected again in the terminal summary."""

import random
import time
from fractions import Fraction as F
from itertools import product

from probelab import catalog
from probelab.bundles import build_simplex_bundle, slab, slice, verify_bundle
from probelab.central import central_point
from probelab.cli import main
from probelab.ewald import cone_face, star_ewald, symmetric_points, synthesize_displacement
from probelab.exact import affine_distance, format_vec
from probelab.polygons import two_point_blowup, v_rectangle, v_triangle
from probelab.polytope import polytope
from probelab.probes import displaces, find_displacing_probe, probe_through
from probelab.scan import scan

from conftest import random_polytope
import oracles

MONOTONE_CATALOG = [n for n in catalog.CATALOG if catalog.get(n).is_monotone()[0]]


class Criterion:
    def __init__(self, number, title, limit, rec):
        self.number, self.title, self.limit, self.rec = number, title, limit, rec
        self.problems = []
        self.start = time.perf_counter()

    def expect(self, ok, message):
        if not ok:
            self.problems.append(message)

    def finish(self, note=""):
        elapsed = time.perf_counter() - self.start
        if elapsed > self.limit:
            self.problems.append(f"took {elapsed:.1f}s, limit {self.limit}s")
        status = "PASS" if not self.problems else "FAIL"
        detail = f"; {self.problems[0]}" if self.problems else ""
        extra = f" [{note}]" if note else ""
        self.rec(f"criterion {self.number}: {status} {self.title} ({elapsed:.2f}s){extra}{detail}")
        assert not self.problems, "\n".join(self.problems[:20])


def _rows(P):
    return [tuple(h.eta) + (h.kappa,) for h in P.halfspaces]


def test_criterion_01_rectangle_cascade(record_criterion):
    c = Criterion(1, "rectangle cascade", 1, record_criterion)
    tr = central_point(catalog.get("rect_1_3"))
    c.expect(tr.s_values[0] == F(1, 2), f"S1 = {tr.s_values[0]}")
    ends = tr.rounds[0].region.vertices()
    c.expect(tr.rounds[0].dim == 1 and len(ends) == 2, "P1 is not a segment")
    c.expect(affine_distance(*ends) == 2, f"P1 length {affine_distance(*ends)}")
    c.expect(tr.v0 == (F(1, 2), F(3, 2)), f"v0 = {tr.v0}")
    c.finish()


def test_criterion_02_monotone_centering(record_criterion):
    c = Criterion(2, "monotone centering", 5, record_criterion)
    names = list(catalog.MONOTONE_POLYGONS) + ["fig7_I", "fig7_II"]
    for name in names:
        P = catalog.get(name)
        ok, u0 = P.is_monotone()
        c.expect(ok, f"{name} not monotone")
        tr = central_point(P)
        c.expect(tr.v0 == u0, f"{name}: v0 {tr.v0} != u0 {u0}")
        c.expect(tr.s_values[0] == 1, f"{name}: S1 = {tr.s_values[0]}")
        shifted = central_point(P.centered())
        c.expect(shifted.v0 == (0,) * P.dim, f"{name}: centred trace ends at {shifted.v0}")
    c.finish(f"{len(names)} polytopes")


def test_criterion_03_remark25_shape(record_criterion):
    c = Criterion(3, "nested interval trace", 5, record_criterion)
    tr = central_point(catalog.get("remark25"))
    c.expect(tr.dims == (1, 1, 0), f"dims {tr.dims}")
    p1, p2 = tr.rounds[0].region.vertices(), tr.rounds[1].region.vertices()
    c.expect(all(tr.rounds[0].region.contains(v) for v in p2), "P2 not inside P1")
    c.expect(affine_distance(*p2) < affine_distance(*p1), "P2 not a strict subinterval")
    c.finish()


def test_criterion_04_centre_never_displaced(record_criterion):
    c = Criterion(4, "v0 not displaced at bound 8", 300, record_criterion)
    names = list(catalog.CATALOG) + ["simplex_bundle(2,1)", "simplex_bundle(3,2)",
                                     "two_point_blowup(1/5,1/2)", "two_point_blowup(3/10,3/10)"]
    polys = [(n, catalog.get(n)) for n in names]
    for seed in range(50):
        polys.append((f"random seed {seed}", random_polytope(random.Random(seed), 2 + seed % 2)))
    for name, P in polys:
        v0 = central_point(P).v0
        rep = find_displacing_probe(P, v0, 8)
        c.expect(not rep.displaced, f"{name}: v0 displaced by {rep.witness}")
    c.finish(f"{len(polys)} polytopes")


def _grid(P, m):
    lo = [min(v[i] for v in P.vertices) for i in range(P.dim)]
    hi = [max(v[i] for v in P.vertices) for i in range(P.dim)]
    ranges = [range(int(lo[i] * m), int(hi[i] * m) + 1) for i in range(P.dim)]
    for idx in product(*ranges):
        u = tuple(F(j, m) for j in idx)
        if any(u) and P.interior_contains(u):
            yield u


def test_criterion_05_star_ewald_displaces_everything(record_criterion):
    c = Criterion(5, "star Ewald synthesis and its converse", 120, record_criterion)
    count = 0
    for name in MONOTONE_CATALOG:
        P = catalog.get(name).centered()
        ok, verdicts = star_ewald(P)
        c.expect(ok, f"{name} not star Ewald")
        S = symmetric_points(P)
        rows = _rows(P)
        for u in _grid(P, 8):
            rep = synthesize_displacement(P, u, S)
            count += 1
            p = rep.witness
            c.expect(rep.displaced, f"{name}: {u} not displaced")
            if p is not None:
                c.expect(oracles.probe_displaces(rows, u, p.facet_id, p.direction),
                         f"{name}: witness at {u} fails the recheck")
    lop = polytope(2, [(-2, -1, 1), (0, -1, 1), (1, 1, 1)])
    ok, verdicts = star_ewald(lop)
    c.expect(lop.is_reflexive() and not ok, "converse input is not a reflexive non-star-Ewald polygon")
    bad = [v.face for v in verdicts if not v.satisfied]
    S = symmetric_points(lop)
    near = [u for u in _grid(lop, 16) if max(abs(x) for x in u) <= F(1, 2)
            and cone_face(lop, u) in bad]
    c.expect(bool(near), "no cone samples near 0")
    for u in near:
        c.expect(not find_displacing_probe(lop, u, directions=S).displaced,
                 f"converse: {u} displaced by a symmetric probe")
    c.finish(f"{count} grid points, {len(near)} converse samples")


def test_criterion_06_short_odd_edge(record_criterion):
    c = Criterion(6, "odd edge midpoint and even midline", 30, record_criterion)
    odd = catalog.get("hirz_odd_k1")
    c.expect(not find_displacing_probe(odd, (2, 1), 10).displaced, "(2,1) displaced")
    even = catalog.get("hirz_even")
    bottom = next(i for i, h in enumerate(even.halfspaces) if h.eta == (0, -1))
    heights = [F(j, 24) for j in range(1, 12)]
    for t in heights:
        u = (F(1, 2) + t, t)
        p = probe_through(even, u, bottom, (1, 1))
        c.expect(p is not None and displaces(p, u), f"{u} not displaced along the midline")
        c.expect(find_displacing_probe(even, u, 10).displaced, f"{u} status not displaced")
    c.finish(f"{len(heights)} midline samples")


def _strictly_inside(p, a, b, q):
    def side(x, y, z):
        return (y[0] - x[0]) * (z[1] - x[1]) - (y[1] - x[1]) * (z[0] - x[0])
    s = [side(a, b, p), side(b, q, p), side(q, a, p)]
    return all(v > 0 for v in s) or all(v < 0 for v in s)


def test_criterion_07_open_nondisplaced_region(record_criterion):
    c = Criterion(7, "open non-displaced block in the non-smooth triangle", 60, record_criterion)
    P = catalog.get("fig4_triangle")
    grid = scan(P, 20, 10)
    nd = {cell.point for cell in grid.not_displaced()}
    h = F(1, 20)
    blocks = [p for p in nd
              if all((p[0] + i * h, p[1] + j * h) in nd for i in (0, 1) for j in (0, 1))]
    c.expect(bool(blocks), "no 2x2 block of not_displaced samples")
    A, B, C, G = (0, 5), (0, 0), (3, 0), (F(3, 2), F(3, 2))
    allowed = [(1, -1), (-1, 1), (0, 1), (0, -1)]
    checked = 0
    for cell in grid.cells:
        if _strictly_inside(cell.point, A, B, G) or _strictly_inside(cell.point, C, B, G):
            checked += 1
            c.expect(cell.displaced, f"{cell.point} not displaced")
            rep = find_displacing_probe(P, cell.point, directions=allowed)
            c.expect(rep.displaced, f"{cell.point}: no witness along +-(-1,1) or vertical")
    c.finish(f"{len(blocks)} blocks, {checked} samples in ABG/CBG")


def test_criterion_08_two_point_blowup_sweep(record_criterion):
    c = Criterion(8, "two-point blow-up sweep", 120, record_criterion)
    tenths = [F(i, 10) for i in range(1, 10)]
    cases = [(a, b) for a in tenths for b in tenths if a <= b and a + b < 1]
    for a, b in cases:
        v0 = central_point(two_point_blowup(a, b)).v0
        middle = 1 - a - b
        c.expect((v0 == v_rectangle(a, b)) == (middle <= b),
                 f"alpha={a} beta={b}: L(F5)={middle}, v0={format_vec(v0)}, v_R={format_vec(v_rectangle(a, b))}")
        if middle > b and b <= F(1, 3):
            c.expect(v0 == v_triangle(), f"alpha={a} beta={b}: v0={format_vec(v0)} != v_T")
    c.finish(f"{len(cases)} parameter pairs")


def test_criterion_09_bundles(record_criterion):
    c = Criterion(9, "bundle suite", 300, record_criterion)
    cases = []
    for k in (1, 2, 3):
        for alpha in range(1, k + 1):
            P = build_simplex_bundle(k, alpha)
            c.expect(P.is_monotone()[0], f"simplex bundle {k},{alpha} not monotone")
            c.expect(star_ewald(P)[0], f"simplex bundle {k},{alpha} not star Ewald")
            cases.append((f"simplex_bundle({k},{alpha})", P, [k + 1, k + 2]))
    cases.append(("fig6_b", catalog.get("fig6_b"), [3, 4]))
    ot = catalog.get("ot_bundle")
    cases.append(("ot_bundle", ot, list(range(4, 10))))
    for name, P, fids in cases:
        spec = verify_bundle(P, fids)
        c.expect(spec.fiber_monotone is True, f"{name}: fiber not monotone")
        k, m = spec.splitting.k, spec.splitting.m
        other = spec.splitting.sheared([[1] * m for _ in range(k)])
        for y in spec.fiber.lattice_points:
            a = {spec.splitting.ambient(v, y) for v in slice(P, spec.splitting, y).vertices}
            b = {other.ambient(v, y) for v in slice(P, other, y).vertices}
            c.expect(a == b, f"{name}: slice at {y} depends on the splitting")
            c.expect(slice(P, spec.splitting, y).is_integral(), f"{name}: slice at {y} not integral")
        c.expect(slice(P, spec.splitting, (0,) * m).is_monotone()[0], f"{name}: central slice not monotone")
        for w in symmetric_points(spec.fiber):
            c.expect(slab(P, spec.splitting, w).is_monotone()[0], f"{name}: slab {w} not monotone")
    c.expect(star_ewald(ot)[0], "ot_bundle not star Ewald")
    c.finish(f"{len(cases)} bundles")


def test_criterion_10_batch_mode(record_criterion, tmp_path, capsys):
    c = Criterion(10, "batch ewald over user files", 60, record_criterion)
    files = []
    for name in ("cp2", "cp2_blow2", "fig7_I", "fig7_II", "cube"):
        path = tmp_path / f"{name}.poly"
        main(["catalog", name, "--emit", str(path)])
        files.append(str(path))
    code = main(["ewald", *files, "--mode", "star"])
    out = capsys.readouterr().out
    c.expect(code == 0, f"batch exit {code}")
    c.expect(out.count("star Ewald: yes") == len(files), "not every file reported")
    bad = tmp_path / "lopsided.poly"
    bad.write_text("dim 2\nfacet -2 -1 1\nfacet 0 -1 1\nfacet 1 1 1\n")
    code = main(["ewald", *files, str(bad), "--mode", "star"])
    c.expect(code == 1, f"batch with a failing file exits {code}")
    for mode in ("weak", "strong"):
        c.expect(main(["ewald", *files, "--mode", mode]) == 0, f"{mode} batch failed")
    c.finish("substituted: property suites plus batch mode")
