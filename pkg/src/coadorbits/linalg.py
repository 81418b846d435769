"""Exact linear algebra over the rationals.

Everything here works on lists of lists of ``fractions.Fraction`` and never
touches floating point: ranks, kernels and determinants are exact, which is
what makes orbit dimensions trustworthy integers rather than numerical
estimates.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]
Matrix = list[Row]


def _copy(rows: Matrix) -> Matrix:
    return [list(row) for row in rows]


def _echelon(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Row-reduce a copy of ``rows``; return (reduced rows, pivot columns).

    Pivoting picks the first nonzero entry in the column, which is all a
    field needs; there is no magnitude to balance.
    """
    m = _copy(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for k in range(r, nrows):
            if m[k][c] != 0:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1, 1) / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for k in range(nrows):
            if k != r and m[k][c] != 0:
                d = m[k][c]
                m[k] = [a - d * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    """Exact rank of a rational matrix."""
    if not rows or not rows[0]:
        return 0
    _, pivots = _echelon(rows)
    return len(pivots)


def kernel_basis(rows: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {v : rows @ v = 0}, exact.

    Returned vectors have a 1 in their free coordinate, so the basis is in
    reduced form and deterministic.
    """
    if not rows or not rows[0]:
        return []
    ncols = len(rows[0])
    reduced, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(tuple(v))
    return basis


def det(rows: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    m = _copy(rows)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for k in range(c, n):
            if m[k][c] != 0:
                pivot_row = k
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        result *= m[c][c]
        inv = Fraction(1, 1) / m[c][c]
        for k in range(c + 1, n):
            if m[k][c] != 0:
                d = m[k][c] * inv
                m[k] = [a - d * b for a, b in zip(m[k], m[c])]
    return sign * result
