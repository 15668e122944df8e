"""Exact rational scalars, lattice vectors and affine-distance primitives.

Rationals are :class:`fractions.Fraction`; lattice vectors are tuples of
``int`` and rational points are tuples of ``Fraction``.  Nothing in here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rat = Fraction
LatVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]
Number = Union[int, Fraction]


class _Infinity:
    """Tagged positive infinity returned by :func:`directed_distance`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_inf(x) -> bool:
    return x is INF


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rat(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_vec(v: Sequence[Number]) -> str:
    return "(" + ", ".join(format_rat(c) for c in v) + ")"


def ratvec(v: Iterable) -> RatVec:
    return tuple(rat(c) for c in v)


def dot(a: Sequence[Number], b: Sequence[Number]):
    return sum(x * y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def make_primitive(v: Sequence[int]) -> tuple[LatVec, int]:
    """Split an integer vector as ``g * p`` with ``p`` primitive, ``g > 0``."""
    v = tuple(int(c) for c in v)
    g = reduce(gcd, (abs(c) for c in v), 0)
    if g == 0:
        raise ValueError("zero direction")
    return tuple(c // g for c in v), g


def primitive_direction(d: Sequence[Number]) -> tuple[LatVec, Fraction]:
    """Write a nonzero rational vector as ``t * p``, ``p`` primitive, ``t > 0``."""
    d = ratvec(d)
    m = reduce(lcm, (c.denominator for c in d), 1)
    p, g = make_primitive([int(c * m) for c in d])
    return p, Fraction(g, m)


def affine_distance(x: Sequence[Number], y: Sequence[Number]) -> Fraction:
    """Lattice length of the segment ``[x, y]``."""
    d = vsub(ratvec(y), ratvec(x))
    if not any(d):
        return Fraction(0)
    return primitive_direction(d)[1]


def _check_primitive(v: Sequence[int]) -> None:
    if reduce(gcd, (abs(int(c)) for c in v), 0) != 1:
        raise ValueError("must be primitive")


def is_integrally_transverse(lam: Sequence[int], eta: Sequence[int]) -> bool:
    _check_primitive(lam)
    _check_primitive(eta)
    return abs(dot(lam, eta)) == 1


def directed_distance(x: Sequence[Number], halfspace, lam: Sequence[int]):
    """Ray parameter ``t >= 0`` at which ``x + t*lam`` meets the boundary
    hyperplane of ``halfspace``; :data:`INF` if the ray misses it.

    With ``lam`` primitive the parameter is the affine distance.
    """
    num = halfspace.kappa - dot(halfspace.eta, x)
    if num == 0:
        return Fraction(0)
    den = dot(halfspace.eta, lam)
    if den == 0:
        return INF
    t = Fraction(num) / den
    return t if t > 0 else INF


# ---------------------------------------------------------------------------
# integer matrices


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def matmul(a, b):
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def solve(a: Sequence[Sequence[Number]], b: Sequence[Number]):
    """Solve the square system ``a x = b`` exactly; ``None`` if singular."""
    n = len(a)
    m = [[Fraction(c) for c in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        row = [c / p for c in m[col]]
        m[col] = row
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], row)]
    return tuple(m[r][n] for r in range(n))


def inverse(a: Sequence[Sequence[Number]]):
    """Exact inverse of a square matrix as a list of Fraction rows."""
    n = len(a)
    cols = []
    for j in range(n):
        x = solve(a, [int(i == j) for i in range(n)])
        if x is None:
            raise ValueError("singular matrix")
        cols.append(x)
    return transpose(cols)


def integer_inverse(t: Sequence[Sequence[int]]):
    if abs(det(t)) != 1:
        raise ValueError("not unimodular")
    return [[int(c) for c in row] for row in inverse(t)]


def rank(rows: Sequence[Sequence[Number]]) -> int:
    m = [[Fraction(c) for c in row] for row in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    if not points:
        return -1
    p0 = points[0]
    return rank([vsub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


def column_hnf(a: Sequence[Sequence[int]]):
    """Column-style Hermite reduction.

    Returns ``(h, v)`` with ``a @ v == h``, ``v`` unimodular and ``h``
    lower triangular (column echelon).  The trailing ``n - rank`` columns
    of ``v`` form a basis of the integer kernel of ``a``.
    """
    rows = len(a)
    n = len(a[0]) if rows else 0
    h = [list(map(int, r)) for r in a]
    v = identity(n)

    def colop(j, k, q):
        # column_j -= q * column_k
        for r in range(rows):
            h[r][j] -= q * h[r][k]
        for r in range(n):
            v[r][j] -= q * v[r][k]

    def swap(j, k):
        for r in range(rows):
            h[r][j], h[r][k] = h[r][k], h[r][j]
        for r in range(n):
            v[r][j], v[r][k] = v[r][k], v[r][j]

    def negate(j):
        for r in range(rows):
            h[r][j] = -h[r][j]
        for r in range(n):
            v[r][j] = -v[r][j]

    piv = 0
    for r in range(rows):
        if piv >= n:
            break
        while True:
            nz = [j for j in range(piv, n) if h[r][j] != 0]
            if not nz:
                break
            k = min(nz, key=lambda j: abs(h[r][j]))
            if k != piv:
                swap(k, piv)
            done = True
            for j in range(piv + 1, n):
                if h[r][j] != 0:
                    colop(j, piv, h[r][j] // h[r][piv])
                    if h[r][j] != 0:
                        done = False
            if done:
                break
        if piv < n and h[r][piv] != 0:
            if h[r][piv] < 0:
                negate(piv)
            piv += 1
    return h, v


def integer_kernel(a: Sequence[Sequence[int]], n: int) -> list[LatVec]:
    """Lattice basis of ``{x in Z^n : a x = 0}``."""
    if not a:
        return [tuple(int(i == j) for i in range(n)) for j in range(n)]
    h, v = column_hnf(a)
    r = rank(a)
    return [tuple(v[i][j] for i in range(n)) for j in range(r, n)]


def extend_to_basis(cols: Sequence[Sequence[int]], n: int):
    """Unimodular ``n x n`` matrix whose first ``len(cols)`` columns span
    the same lattice as ``cols`` (which must span a saturated sublattice).
    """
    k = len(cols)
    if k == 0:
        return identity(n)
    # cols^T V = [L | 0]  =>  cols = V^{-T} [L^T ; 0]
    h, v = column_hnf([list(c) for c in cols])
    lower = [[h[i][j] for j in range(k)] for i in range(k)]
    if abs(det(lower)) != 1:
        raise ValueError("sublattice is not saturated")
    b = transpose(integer_inverse(v))
    return b


def apply_unimodular(t: Sequence[Sequence[int]], shift: Sequence[int], obj):
    """Apply ``x -> t x + shift`` to a point or a polytope.

    Polytopes have their normals mapped by the inverse transpose and their
    support constants adjusted, so every lattice-invariant quantity is
    preserved.
    """
    t = [list(map(int, row)) for row in t]
    tinv = integer_inverse(t)
    shift = tuple(int(c) for c in shift)
    if hasattr(obj, "halfspaces"):
        from .polytope import HalfSpace, Polytope

        tinv_t = transpose(tinv)
        hs = []
        for h in obj.halfspaces:
            eta = matvec(tinv_t, h.eta)
            hs.append(HalfSpace(eta, h.kappa + dot(eta, shift)))
        return Polytope.from_halfspaces(obj.dim, hs)
    return vadd(matvec(t, ratvec(obj)), shift)
