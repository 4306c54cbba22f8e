"""Pure-Python elimination kernels (arbitrary-precision integers).

Both kernels take integer rows (callers clear denominators first) and return
the nonzero rows of an echelon form as ``(pivot_column, row)`` pairs sorted by
pivot column.  Every returned row is primitive (content 1) with a positive
pivot.  With ``reduce=True`` the form is fully reduced: each pivot column is
zero in every other returned row.

The compiled module ``_kernels`` exposes the same two functions.
"""

from __future__ import annotations

from math import gcd

BACKEND = "python"


def _primitive_sparse(row: dict, lead: int) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[lead] < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _eliminate_sparse(row: dict, piv: dict, c: int) -> dict:
    a = piv[c]
    b = row[c]
    g = gcd(a, b)
    a //= g
    b //= g
    if a == 1:
        out = dict(row)
    else:
        out = {k: a * v for k, v in row.items()}
    for k, v in piv.items():
        x = out.get(k, 0) - b * v
        if x:
            out[k] = x
        else:
            del out[k]
    return out


def echelon_sparse(rows: list, ncols: int, reduce: bool = False) -> list:
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _primitive_sparse(row, c)
                break
            row = _eliminate_sparse(row, piv, c)
    order = sorted(pivots)
    if reduce:
        for c in reversed(order):
            row = pivots[c]
            for c2 in sorted(k for k in row if k > c and k in pivots):
                row = _eliminate_sparse(row, pivots[c2], c2)
            pivots[c] = _primitive_sparse(row, c)
    return [(c, pivots[c]) for c in order]


def _primitive_dense(row: list, lead: int) -> list:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if row[lead] < 0:
        g = -g
    if g != 1:
        row = [v // g for v in row]
    return row


def _eliminate_dense(row: list, piv: list, c: int) -> list:
    a = piv[c]
    b = row[c]
    g = gcd(a, b)
    a //= g
    b //= g
    return [a * x - b * y for x, y in zip(row, piv)]


def echelon_dense(rows: list, ncols: int, reduce: bool = False) -> list:
    pivots: dict[int, list] = {}
    for row in rows:
        row = list(row)
        c = 0
        while True:
            while c < ncols and not row[c]:
                c += 1
            if c == ncols:
                break
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _primitive_dense(row, c)
                break
            row = _eliminate_dense(row, piv, c)
    order = sorted(pivots)
    if reduce:
        for c in reversed(order):
            row = pivots[c]
            for c2 in order:
                if c2 > c and row[c2]:
                    row = _eliminate_dense(row, pivots[c2], c2)
            pivots[c] = _primitive_dense(row, c)
    return [(c, pivots[c]) for c in order]
