"""Exact integer matrix routines: Bareiss determinants and Smith normal form.

Matrices are plain sequences of integer rows; nothing here touches floats.
"""

from __future__ import annotations

from .errors import ShapeError


def as_matrix(rows) -> list[list[int]]:
    matrix = [[int(x) for x in row] for row in rows]
    if matrix and any(len(row) != len(matrix[0]) for row in matrix):
        raise ShapeError("ragged matrix")
    return matrix


def require_square(matrix) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ShapeError(f"expected a square matrix, got {n} rows of lengths {[len(r) for r in matrix]}")
    return n


def determinant(rows) -> int:
    """Fraction-free Gaussian elimination (Bareiss). The 0x0 determinant is 1."""
    m = as_matrix(rows)
    n = require_square(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def leading_minors(rows) -> list[int]:
    """Leading principal minors D_1..D_n.

    Bareiss elimination without row swaps leaves D_k as the k-th pivot, so a
    single pass suffices until a zero pivot appears; the remaining minors are
    then computed directly.
    """
    m = as_matrix(rows)
    n = require_square(m)
    minors = []
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            minors.append(0)
            minors.extend(determinant([row[:j] for row in rows[:j]]) for j in range(k + 2, n + 1))
            return minors
        minors.append(m[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return minors


def diagonal_blocks(rows) -> list[list[int]]:
    """Index sets of the connected blocks of a square matrix (i ~ j when entry (i, j) or (j, i) is nonzero)."""
    m = as_matrix(rows)
    n = require_square(m)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        block, stack = [], [start]
        while stack:
            i = stack.pop()
            block.append(i)
            for j in range(n):
                if not seen[j] and (m[i][j] or m[j][i]):
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(block))
    return blocks


def smith_diagonal(rows) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    m = as_matrix(rows)
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if m[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for i in range(t, nrows):
                        m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            # pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if m[i][j] % m[t][t]),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            for j in range(t, ncols):
                m[t][j] += m[i][j]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def cokernel_order(rows, ngenerators: int) -> int:
    """Order of Z^ngenerators / (row space). Returns 0 when the quotient is infinite."""
    rows = [list(r) for r in rows]
    if any(len(r) != ngenerators for r in rows):
        raise ShapeError("relation length differs from generator count")
    diag = smith_diagonal(rows)
    if len(diag) < ngenerators:
        return 0
    order = 1
    for d in diag:
        order *= d
    return order
