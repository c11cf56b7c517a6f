"""Exact rank of sparse integer matrices over Q or over F_p.

Rows are dicts ``{column: value}``. Over Q the elimination is fraction-free:
a row is updated as ``a * row - c * pivot_row`` (with a, c the two leading
entries divided by their gcd) and then divided by the gcd of its entries, so
all arithmetic stays in Python integers.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def _content_reduce(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def rank(rows: Iterable[dict[int, int]], p: int = 0) -> int:
    """Rank over Q when ``p == 0``, otherwise over the prime field F_p.

    Rows are reduced one at a time against stored pivot rows keyed by their
    largest column, the usual scheme for boundary matrices; a row that
    survives with a new leading column becomes a pivot.
    """
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {k: v % p for k, v in r.items() if v % p} if p else {k: v for k, v in r.items() if v}
        while row:
            lead = max(row)
            piv_row = pivots.get(lead)
            if piv_row is None:
                if p:
                    inv = pow(row[lead], -1, p)
                    row = {k: v * inv % p for k, v in row.items()}
                pivots[lead] = row
                break
            c = row[lead]
            if p:
                # pivot rows are monic over F_p
                for k, v in piv_row.items():
                    nv = (row.get(k, 0) - c * v) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                a = piv_row[lead]
                g = gcd(a, c)
                a, c = a // g, c // g
                if a != 1:
                    row = {k: v * a for k, v in row.items()}
                for k, v in piv_row.items():
                    nv = row.get(k, 0) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                row = _content_reduce(row)
    return len(pivots)


def dense_rank(matrix: list[list[int]], p: int = 0) -> int:
    """Rank of a dense integer matrix; see :func:`rank`."""
    return rank(({j: v for j, v in enumerate(row) if v} for row in matrix), p)


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank over Q by classical Bareiss elimination on a dense matrix.

    Kept as an independent check on :func:`rank`.
    """
    a = [list(r) for r in matrix]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == m:
            break
    return r
