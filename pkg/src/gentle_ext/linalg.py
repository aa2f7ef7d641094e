"""Exact linear algebra over the rationals.

Matrices are lists of rows.  Ranks use fraction-free (Bareiss) elimination
on integer matrices; nullspaces and solves use row reduction over
``Fraction``.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list[list]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product of an r×k and a k×c matrix.  ``inner`` is needed when r or c is zero."""
    if inner is None:
        inner = len(b) if b else (len(a[0]) if a else 0)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append([sum(row[t] * b[t][j] for t in range(inner) if row[t]) for j in range(cols)])
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def transpose(a: Matrix, rows: int | None = None, cols: int | None = None) -> Matrix:
    r = len(a) if rows is None else rows
    c = (len(a[0]) if a else 0) if cols is None else cols
    return [[a[i][j] for i in range(r)] for j in range(c)]


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def _integerize(a: Matrix) -> list[list[int]]:
    out = []
    for row in a:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(a: Matrix) -> int:
    """Rank via Bareiss fraction-free elimination (rows are rescaled to integers first)."""
    if not a or not a[0]:
        return 0
    m = _integerize(a)
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, cols):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rref(a: Matrix, cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in row] for row in a]
    ncols = cols if cols is not None else (len(m[0]) if m else 0)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(a: Matrix, cols: int) -> list[list[Fraction]]:
    """Basis of {x : a x = 0} for a matrix with ``cols`` columns."""
    red, pivots = rref(a, cols)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_in_basis(basis_cols: list[list], target: list) -> list[Fraction]:
    """Coefficients c with sum c_i basis_i = target; raises if target is outside the span."""
    n = len(basis_cols)
    dim = len(target)
    aug = [[basis_cols[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        raise ValueError("vector not in span")
    coeffs = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        coeffs[p] = row[n]
    return coeffs


def complement_basis(span_vectors: list[list], dim: int) -> list[int]:
    """Indices of standard basis vectors completing ``span_vectors`` to a basis of K^dim."""
    chosen: list[list] = [list(v) for v in span_vectors]
    base_rank = rank(chosen) if chosen else 0
    picked = []
    for i in range(dim):
        e = [1 if j == i else 0 for j in range(dim)]
        if rank(chosen + [e]) > base_rank:
            chosen.append(e)
            base_rank += 1
            picked.append(i)
    return picked


def block_diag_sizes(blocks: list[Matrix], shapes: list[tuple[int, int]]) -> Matrix:
    rows = sum(r for r, _ in shapes)
    cols = sum(c for _, c in shapes)
    out = zeros(rows, cols)
    r0 = c0 = 0
    for blk, (r, c) in zip(blocks, shapes):
        for i in range(r):
            for j in range(c):
                out[r0 + i][c0 + j] = blk[i][j]
        r0 += r
        c0 += c
    return out
