"""Exact Gaussian elimination over a field (Fraction or ModP entries)."""

from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence], field) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form (zero rows dropped) and pivot columns."""
    M = [[field(x) for x in row] for row in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.one / M[r][col]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                c = M[i][col]
                M[i] = [a - c * b for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], field) -> int:
    """Rank by forward elimination (no back-substitution)."""
    M = [[field(x) for x in row] for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.one / M[r][col]
        for i in range(r + 1, len(M)):
            if M[i][col]:
                c = M[i][col] * inv
                M[i] = [a - c * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def sparse_rank(columns: Sequence[dict], field) -> int:
    """Rank of a matrix given as a list of sparse columns ``{row: value}``."""
    pivots: dict = {}  # pivot row -> reduced column
    r = 0
    for col in columns:
        v = {k: field(x) for k, x in col.items() if x}
        while v:
            top = max(v)
            if top not in pivots:
                pivots[top] = v
                r += 1
                break
            p = pivots[top]
            c = v[top] / p[top]
            for k, x in p.items():
                y = v.get(k, field.zero) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r
