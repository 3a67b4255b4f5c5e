"""Exact Gauss-Jordan elimination over Q.

A matrix is a list of rows, each row a list of int/Fraction.  Pivoting is
deterministic: scan columns left to right, take the first row with a
nonzero entry.  No magnitude heuristics; arithmetic is exact, so there is
nothing to stabilize.
"""

from __future__ import annotations

from fractions import Fraction

Row = list
Matrix = list


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (rows, pivot_columns), 0-based.

    Zero rows are dropped from the result.  Input is not mutated.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ValueError("ragged matrix")
    pivots: list[int] = []
    lead = 0
    for col in range(width):
        src = None
        for i in range(lead, len(rows)):
            if rows[i][col]:
                src = i
                break
        if src is None:
            continue
        rows[lead], rows[src] = rows[src], rows[lead]
        inv = Fraction(1, 1) / Fraction(rows[lead][col])
        rows[lead] = [inv * v for v in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows[:lead], pivots


def echelon_rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def reduce_against(vector: Row, rref_rows: Matrix, pivots: list[int]) -> Row:
    """Subtract the projection of `vector` onto the row span (rows in rref)."""
    v = list(vector)
    for row, p in zip(rref_rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return v


def in_span(vector: Row, basis: Matrix) -> list[Fraction] | None:
    """Coefficients writing `vector` over the rows of `basis`, or None.

    Solved by eliminating on [basis | I] so the coefficients refer to the
    original rows, not the echelon ones.
    """
    if not basis:
        return [] if not any(vector) else None
    width = len(basis[0])
    if len(vector) != width:
        raise ValueError("vector/basis width mismatch")
    k = len(basis)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(basis)]
    rows = [list(r) for r in aug]
    pivots: list[int] = []
    lead = 0
    for col in range(width):  # pivot only inside the basis block
        src = next((i for i in range(lead, k) if rows[i][col]), None)
        if src is None:
            continue
        rows[lead], rows[src] = rows[src], rows[lead]
        inv = Fraction(1, 1) / Fraction(rows[lead][col])
        rows[lead] = [inv * v for v in rows[lead]]
        for i in range(k):
            if i != lead and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == k:
            break
    v = list(vector)
    coeffs = [Fraction(0)] * k
    for row, p in zip(rows[:lead], pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row[:width])]
            coeffs = [x + c * y for x, y in zip(coeffs, row[width:])]
    if any(v):
        return None
    return coeffs


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Dense product for small constant matrices (representation checks)."""
    if not a or not b:
        return []
    inner = len(b)
    if any(len(r) != inner for r in a):
        raise ValueError("shape mismatch")
    cols = len(b[0])
    return [[sum(r[i] * b[i][j] for i in range(inner)) for j in range(cols)] for r in a]
