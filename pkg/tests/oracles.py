"""Independent reference implementations used to cross-check the library.

These are deliberately naive: permutation-expansion determinants, Cramer's
rule, box scans.  They share no code with ``probelab``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd
from functools import reduce


def perm_det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(1)
        for i in range(n):
            term *= m[i][p[i]]
        total += -term if inv % 2 else term
    return total


def cramer(a, b):
    d = perm_det(a)
    if d == 0:
        return None
    n = len(a)
    out = []
    for j in range(n):
        mj = [[b[i] if k == j else a[i][k] for k in range(n)] for i in range(n)]
        out.append(Fraction(perm_det(mj)) / d)
    return tuple(out)


def vertices(rows, n):
    """rows are (eta..., kappa); vertices of {<eta,x> <= kappa}."""
    found = set()
    for idx in combinations(range(len(rows)), n):
        a = [list(rows[i][:n]) for i in idx]
        b = [Fraction(rows[i][n]) for i in idx]
        x = cramer(a, b)
        if x is None:
            continue
        if all(sum(r[k] * x[k] for k in range(n)) <= r[n] for r in rows):
            found.add(x)
    return sorted(found)


def lattice_points(rows, n, radius):
    return [p for p in product(range(-radius, radius + 1), repeat=n)
            if all(sum(r[k] * p[k] for k in range(n)) <= r[n] for r in rows)]


def ell(row, u):
    n = len(row) - 1
    return Fraction(row[n]) - sum(row[k] * u[k] for k in range(n))


def displaced(rows, u, bound):
    """Brute-force halfway test over every facet and every primitive
    direction with entries in [-bound, bound]."""
    n = len(rows[0]) - 1
    for lam in product(range(-bound, bound + 1), repeat=n):
        if reduce(gcd, lam, 0) != 1:
            continue
        for f, row in enumerate(rows):
            if sum(row[k] * lam[k] for k in range(n)) != -1:
                continue
            t = ell(row, u)
            w = [u[k] - t * lam[k] for k in range(n)]
            if any(ell(r, w) <= 0 for j, r in enumerate(rows) if j != f):
                continue
            exits = []
            for r in rows:
                slope = sum(r[k] * lam[k] for k in range(n))
                if slope > 0:
                    exits.append(ell(r, u) / slope)
            if exits and t < min(exits):
                return True
    return False


def grid_maximin(rows, m, box):
    """Best value of min_i l_i over the grid (Z/m)^2 inside ``box``."""
    (x0, x1), (y0, y1) = box
    best, arg = None, []
    for i in range(x0 * m, x1 * m + 1):
        for j in range(y0 * m, y1 * m + 1):
            u = (Fraction(i, m), Fraction(j, m))
            v = min(ell(r, u) for r in rows)
            if best is None or v > best:
                best, arg = v, [u]
            elif v == best:
                arg.append(u)
    return best, arg


def leximin_point(rows, m, box):
    """Grid point whose ascending vector of facet distances is
    lexicographically largest."""
    (x0, x1), (y0, y1) = box
    best, arg = None, None
    for i in range(x0 * m, x1 * m + 1):
        for j in range(y0 * m, y1 * m + 1):
            u = (Fraction(i, m), Fraction(j, m))
            key = sorted(ell(r, u) for r in rows)
            if key[0] < 0:
                continue
            if best is None or key > best:
                best, arg = key, u
    return arg


def symmetric_points(rows, n, radius):
    pts = lattice_points(rows, n, radius)
    pts = set(pts)
    return sorted(p for p in pts if any(p) and tuple(-c for c in p) in pts)


def strong_ewald_flags(rows, n, radius):
    """Per facet: does S contain a lattice basis lying on that facet?"""
    sym = symmetric_points(rows, n, radius)
    flags = []
    for r in rows:
        on = [p for p in sym if ell(r, p) == 0]
        flags.append(any(abs(perm_det([list(c) for c in combo])) == 1
                         for combo in combinations(on, n)))
    return flags


def probe_displaces(rows, u, facet, lam):
    """Recheck one probe: transverse to ``facet``, entering in the relative
    interior, with ``u`` strictly less than halfway along it."""
    n = len(rows[0]) - 1
    row = rows[facet]
    if sum(row[k] * lam[k] for k in range(n)) != -1:
        return False
    back = ell(row, u)
    w = [u[k] - back * lam[k] for k in range(n)]
    if any(ell(r, w) <= 0 for j, r in enumerate(rows) if j != facet):
        return False
    ahead = min(ell(r, u) / s for r in rows
                if (s := sum(r[k] * lam[k] for k in range(n))) > 0)
    return back < ahead
