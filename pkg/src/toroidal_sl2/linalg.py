"""Exact linear algebra over the rationals.

Kernels and ranks are computed by fraction-free (Bareiss) elimination on
integer matrices obtained by clearing denominators row by row.  Pivots are
chosen over all remaining rows and columns, taking a nonzero entry of
smallest bit size; this keeps intermediate entries (which are minors of
the original matrix) as small as the data allows without changing any
exact result.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = list[Fraction]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        denom = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * denom) for c in row])
    return out


def _echelonize(mat: list[list[int]]) -> tuple[list[list[int]], list[int], list[int]]:
    """Fraction-free echelon form with full pivoting.

    Returns (matrix, pivot_cols, col_order): after the elimination the
    matrix, with columns read in col_order, is upper triangular on its
    first r rows, r = len(pivot_cols).  pivot_cols[i] is the original
    column index of the i-th pivot.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    col_order = list(range(ncols))
    pivot_cols: list[int] = []
    prev_pivot = 1
    r = 0
    while r < nrows and r < ncols:
        best = None
        for i in range(r, nrows):
            row = mat[i]
            for jj in range(r, ncols):
                v = row[col_order[jj]]
                if v:
                    size = v.bit_length()
                    if best is None or size < best[0]:
                        best = (size, i, jj)
                        if size == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        mat[r], mat[pi] = mat[pi], mat[r]
        col_order[r], col_order[pj] = col_order[pj], col_order[r]
        pc = col_order[r]
        pivot = mat[r][pc]
        for i in range(r + 1, nrows):
            row = mat[i]
            factor = row[pc]
            prow = mat[r]
            for jj in range(r, ncols):
                j = col_order[jj]
                num = pivot * row[j] - factor * prow[j]
                q, rem = divmod(num, prev_pivot)
                assert rem == 0, "fraction-free update must divide exactly"
                row[j] = q
            row[pc] = 0
        pivot_cols.append(pc)
        prev_pivot = pivot
        r += 1
    return mat, pivot_cols, col_order


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix given as a list of rows."""
    if not rows:
        return 0
    mat = _integer_rows(rows)
    _, pivots, _ = _echelonize(mat)
    return len(pivots)


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Row]:
    """Basis of the right kernel {x : A x = 0}.

    Kernel vectors are normalized to be integral and primitive with a
    positive leading entry, and are returned ordered by their free column.
    An empty matrix (no rows) yields the standard basis.
    """
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    assert all(len(r) == ncols for r in rows)
    mat = _integer_rows(rows)
    mat, pivot_cols, col_order = _echelonize(mat)
    r = len(pivot_cols)
    free_cols = [c for c in col_order[r:]]
    basis: list[Row] = []
    for fc in sorted(free_cols):
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        # back-substitute through the triangular rows
        for i in range(r - 1, -1, -1):
            pc = pivot_cols[i]
            s = sum((mat[i][col_order[jj]] * x[col_order[jj]]
                     for jj in range(i + 1, ncols)), Fraction(0))
            x[pc] = -s / mat[i][pc]
        basis.append(_primitive(x))
    return basis


def _primitive(x: Row) -> Row:
    denom = lcm(*(c.denominator for c in x))
    ints = [int(c * denom) for c in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return [Fraction(0)] * len(x)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [Fraction(v, g) for v in ints]


def row_space_basis(rows: Sequence[Sequence[Fraction]]) -> list[Row]:
    """A basis of the row space, as primitive integer rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = _integer_rows(rows)
    mat, pivot_cols, _ = _echelonize(mat)
    return [_primitive([Fraction(v) for v in mat[i]]) for i in range(len(pivot_cols))]


def matvec(rows: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Row:
    return [sum((c * xi for c, xi in zip(row, x)), Fraction(0)) for row in rows]
