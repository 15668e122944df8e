"""Exact rational linear programming.

Dense two-phase tableau simplex over :class:`~fractions.Fraction` with
Bland's smallest-index rule, so every run pivots identically and returns
the same optimal vertex.  Problems here have a handful of variables and a
few dozen rows; clarity wins over sparsity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class LPError(Exception):
    pass


class LPInfeasible(LPError):
    pass


class LPUnbounded(LPError):
    pass


@dataclass(frozen=True)
class LPResult:
    value: Fraction
    x: tuple[Fraction, ...]


def _pivot(tab, obj, basis, r, c):
    row = tab[r]
    p = row[c]
    if p != 1:
        row = [v / p for v in row]
        tab[r] = row
    for i, other in enumerate(tab):
        if i != r:
            f = other[c]
            if f:
                tab[i] = [a - f * b for a, b in zip(other, row)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, row)]
    basis[r] = c


def _simplex(tab, obj, basis, allowed):
    """Maximize; ``obj`` holds reduced costs (positive = improving) and
    ``obj[-1]`` the negated objective value."""
    while True:
        enter = next((j for j in allowed if obj[j] > 0), None)
        if enter is None:
            return
        best = None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise LPUnbounded("objective is unbounded")
        _pivot(tab, obj, basis, best[1], enter)


def exact_lp_max(objective: Sequence, a_ub: Sequence[Sequence] = (),
                 b_ub: Sequence = (), a_eq: Sequence[Sequence] = (),
                 b_eq: Sequence = ()) -> LPResult:
    """Maximize ``objective . x`` over ``a_ub x <= b_ub``, ``a_eq x == b_eq``
    with ``x`` free.

    Raises :class:`LPInfeasible` or :class:`LPUnbounded`.
    """
    n = len(objective)
    m_ub, m_eq = len(a_ub), len(a_eq)
    # columns: x+ (n), x- (n), slack (m_ub), artificial (<= m), rhs
    n_struct = 2 * n + m_ub
    rows = []
    needs_art = []
    for i in range(m_ub):
        a = [Fraction(v) for v in a_ub[i]]
        row = a + [-v for v in a] + [Fraction(int(j == i)) for j in range(m_ub)]
        rhs = Fraction(b_ub[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            needs_art.append(True)
        else:
            needs_art.append(False)
        rows.append((row, rhs))
    for i in range(m_eq):
        a = [Fraction(v) for v in a_eq[i]]
        row = a + [-v for v in a] + [Fraction(0)] * m_ub
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append((row, rhs))
        needs_art.append(True)

    art_cols = {}
    n_art = sum(needs_art)
    ncols = n_struct + n_art
    tab = []
    basis = []
    k = 0
    for i, ((row, rhs), art) in enumerate(zip(rows, needs_art)):
        full = row + [Fraction(0)] * n_art + [rhs]
        if art:
            col = n_struct + k
            full[col] = Fraction(1)
            art_cols[i] = col
            basis.append(col)
            k += 1
        else:
            basis.append(2 * n + i)
        tab.append(full)

    # phase 1: maximize -sum(artificials)
    if n_art:
        obj = [Fraction(0)] * (ncols + 1)
        for i, art in enumerate(needs_art):
            if art:
                obj = [o + v for o, v in zip(obj, tab[i])]
        for col in art_cols.values():
            obj[col] = Fraction(0)
        _simplex(tab, obj, basis, range(ncols))
        if obj[-1] != 0:
            raise LPInfeasible("constraints are infeasible")
        # drive remaining artificials out of the basis
        i = 0
        while i < len(tab):
            if basis[i] >= n_struct:
                c = next((j for j in range(n_struct) if tab[i][j] != 0), None)
                if c is None:
                    del tab[i]
                    del basis[i]
                    continue
                dummy = [Fraction(0)] * (ncols + 1)
                _pivot(tab, dummy, basis, i, c)
            i += 1
        tab = [row[:n_struct] + [row[-1]] for row in tab]

    c = [Fraction(v) for v in objective]
    obj = c + [-v for v in c] + [Fraction(0)] * m_ub + [Fraction(0)]
    for i, b in enumerate(basis):
        f = obj[b]
        if f:
            obj = [o - f * v for o, v in zip(obj, tab[i])]
    _simplex(tab, obj, basis, range(n_struct))

    vals = [Fraction(0)] * n_struct
    for i, b in enumerate(basis):
        vals[b] = tab[i][-1]
    x = tuple(vals[j] - vals[n + j] for j in range(n))
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(value, x)
