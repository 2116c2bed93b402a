"""Gaussian elimination over GF(q): rank, reduced echelon form, nullspace."""

from __future__ import annotations

from typing import Sequence

from .field import GF, Word


def rref(rows: Sequence[Sequence[int]], field: GF):
    """Reduced row-echelon form. Returns (rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return mat, []
    m, n = len(mat), len(mat[0])
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        pr = next((r for r in range(row, m) if mat[r][col]), None)
        if pr is None:
            continue
        mat[row], mat[pr] = mat[pr], mat[row]
        inv = field.inv(mat[row][col])
        mat[row] = [field.mul(inv, v) for v in mat[row]]
        for r in range(m):
            if r != row and mat[r][col]:
                c = mat[r][col]
                mat[r] = [field.sub(v, field.mul(c, w)) for v, w in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    return mat, pivots


def rank(rows: Sequence[Sequence[int]], field: GF) -> int:
    return len(rref(rows, field)[1])


def nullspace_basis(rows: Sequence[Sequence[int]], field: GF) -> list[list[int]]:
    """Basis of {x : A x^T = 0}, one vector per free column, in column order."""
    mat, pivots = rref(rows, field)
    n = len(rows[0]) if rows else 0
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = field.neg(mat[i][f])
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], field: GF):
    """One particular solution of A x^T = rhs, or None if inconsistent."""
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    mat, pivots = rref(aug, field)
    if n in pivots:
        return None
    x = [0] * n
    for i, p in enumerate(pivots):
        x[p] = mat[i][n]
    return x


def word_rows(rows: Sequence[Word]) -> list[list[int]]:
    return [list(r.elems) for r in rows]
