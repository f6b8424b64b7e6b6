"""Exact dense linear algebra over Z and over integral domains such as Z[sqrt d]."""

from __future__ import annotations

import math
from collections.abc import Sequence

from .poly import IntPolynomial

Matrix = Sequence[Sequence[int]]


def _check_square(m: Matrix) -> int:
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("expected a nonempty square matrix")
    return n


def charpoly(m: Matrix) -> IntPolynomial:
    """``det(xI - M)`` by Berkowitz's division-free algorithm."""
    n = _check_square(m)
    # coefficients highest degree first while building
    c = [1, -m[0][0]]
    for r in range(1, n):
        row = m[r][:r]
        col = [m[i][r] for i in range(r)]
        t = [1, -m[r][r]]
        v = col
        for k in range(r):
            t.append(-sum(a * b for a, b in zip(row, v)))
            if k < r - 1:
                v = [sum(m[i][j] * v[j] for j in range(r)) for i in range(r)]
        c = [sum(t[i - j] * c[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
             for i in range(r + 2)]
    return IntPolynomial(tuple(reversed(c)))


def bareiss_det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = _check_square(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _row_content(row: list) -> int:
    g = 0
    for x in row:
        if isinstance(x, int):
            g = math.gcd(g, x)
        else:
            g = math.gcd(g, *x.int_parts())
        if g == 1:
            return 1
    return g


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix over an integral domain, by cross-multiplying elimination.

    Entries are ints or elements exposing ``int_parts()`` and exact scaling
    (see :class:`stardom.spectra.QuadraticElement`); rows are divided by their
    integer content after every step to keep the numbers small.
    """
    a = [list(r) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank]
        pc = p[col]
        for i in range(rank + 1, len(a)):
            row = a[i]
            f = row[col]
            if not f:
                continue
            new = [pc * x - f * y for x, y in zip(row, p)]
            g = _row_content(new)
            if g > 1:
                new = [x // g for x in new]
            a[i] = new
        rank += 1
        if rank == len(a):
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the prime field F_p; never exceeds the rank over Q."""
    a = [[x % p for x in r] for r in rows]
    if not a:
        return 0
    rank = 0
    for col in range(len(a[0])):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        inv = pow(prow[col], -1, p)
        prow = a[rank] = [x * inv % p for x in prow]
        for i in range(rank + 1, len(a)):
            f = a[i][col]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        rank += 1
    return rank
