"""Exact integer and rational matrix routines.

Matrices are plain lists of rows.  Integer entries are Python ints and
rational entries are ``fractions.Fraction``; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def transpose(m, ncols=None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b, ncols=None):
    """Product of two list-of-rows matrices.

    ``ncols`` gives the column count of ``b`` when ``b`` has no rows.
    """
    if not b:
        return [[0] * (ncols or 0) for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def content(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v):
    """Divide out the content and make the first nonzero entry positive."""
    g = content(v)
    if g == 0:
        return list(v)
    v = [x // g for x in v]
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


def _xgcd(a, b):
    # returns (g, s, t) with s*a + t*b = g >= 0
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def hnf(m, ncols=None):
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``.  Pivots of
    ``h`` are positive and the entries above each pivot lie in
    ``[0, pivot)``.  Zero rows are collected at the bottom.

    >>> hnf([[2, 4], [1, 1]])[0]
    [[1, 1], [0, 2]]
    """
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    h = [list(r) for r in m]
    u = identity(rows)
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        # gather a gcd into row pr by pairwise extended-gcd steps
        for r in range(pr + 1, rows):
            b = h[r][c]
            if b == 0:
                continue
            a = h[pr][c]
            g, s, t = _xgcd(a, b)
            p, q = a // g, b // g
            hp, hr = h[pr], h[r]
            h[pr] = [s * x + t * y for x, y in zip(hp, hr)]
            h[r] = [-q * x + p * y for x, y in zip(hp, hr)]
            up, ur = u[pr], u[r]
            u[pr] = [s * x + t * y for x, y in zip(up, ur)]
            u[r] = [-q * x + p * y for x, y in zip(up, ur)]
        piv = h[pr][c]
        if piv == 0:
            continue
        if piv < 0:
            h[pr] = [-x for x in h[pr]]
            u[pr] = [-x for x in u[pr]]
            piv = -piv
        for r in range(pr):
            q = h[r][c] // piv
            if q:
                h[r] = [x - q * y for x, y in zip(h[r], h[pr])]
                u[r] = [x - q * y for x, y in zip(u[r], u[pr])]
        pr += 1
    return h, u


def hnf_basis(vectors, ncols):
    """Nonzero rows of the HNF of ``vectors``: a canonical lattice basis."""
    if not vectors:
        return []
    h, _ = hnf(vectors, ncols)
    return [r for r in h if any(r)]


def int_kernel(m, ncols=None):
    """Lattice basis of ``{x in Z^n : m x = 0}``, HNF-reduced.

    >>> int_kernel([[1, 1]])
    [[1, -1]]
    """
    cols = len(m[0]) if m else (ncols or 0)
    if cols == 0:
        return []
    if not m:
        return identity(cols)
    h, u = hnf(transpose(m), len(m))
    vecs = [u[i] for i in range(cols) if not any(h[i])]
    return hnf_basis(vecs, cols)


def rank(m):
    """Rank over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return 0
    r = 0
    cols = len(a[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def det(m):
    """Exact determinant of a square matrix with int or Fraction entries."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def snf(m, ncols=None):
    """Invariant factors ``d1 | d2 | ...`` of an integer matrix.

    The list has ``min(rows, cols)`` entries; trailing zeros mark rank
    deficiency.

    >>> snf([[2, 0], [0, 1]])
    [1, 2]
    """
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    if rows == 0 or cols == 0:
        return []
    factors = invariant_factors(Matrix(m), domain=ZZ)
    return sorted((abs(int(x)) for x in factors), key=lambda x: (x == 0, x))


def is_unimodular(u):
    return len(u) == len(u[0]) and abs(det(u)) == 1 if u else True


def solve_in_lattice(basis, v):
    """Integer coordinates of ``v`` in the lattice spanned by ``basis``.

    ``basis`` rows must be linearly independent.  Returns ``None`` when
    ``v`` is not in the lattice.
    """
    if not basis:
        return [] if not any(v) else None
    n = len(basis)
    rows = [list(b) for b in basis] + [list(v)]
    h, u = hnf(rows)
    # the last nonzero-free combination expresses v
    for i in range(len(h)):
        if not any(h[i]) and u[i][n] != 0:
            coeff = u[i][n]
            if abs(coeff) != 1:
                return None
            return [-coeff * x for x in u[i][:n]]
    return None


def same_lattice(a, b, ncols):
    return hnf_basis(a, ncols) == hnf_basis(b, ncols)


def lattice_index(sub, full, ncols):
    """Index of the lattice spanned by ``sub`` inside the one spanned by ``full``.

    Both must have the same rank and ``sub`` must lie in ``full``.  Returns
    ``None`` when ``sub`` has smaller rank.
    """
    fb = hnf_basis(full, ncols)
    sb = hnf_basis(sub, ncols)
    if len(sb) != len(fb):
        return None
    coords = []
    for v in sb:
        c = solve_in_lattice(fb, v)
        if c is None:
            raise ValueError("sublattice is not contained in the lattice")
        coords.append(c)
    return abs(int(det(coords)))
