"""Exact rank, kernel and linear solving for :class:`SparseMatrix`.

Rows are cleared of denominators and handed to the integer kernels selected
in :mod:`._backend`.  Matrices narrower than :data:`DENSE_COLS` columns are
eliminated densely, wider ones sparsely.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from . import _backend
from .matrix import DimensionError, SparseMatrix
from .rational import as_rational

__all__ = ["DENSE_COLS", "echelon", "rank", "kernel_basis", "solve", "nullity"]

DENSE_COLS = 64


def _integer_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    for v in row.values():
        den = lcm(den, v.denominator)
    return {k: int(v * den) for k, v in row.items() if v}


def echelon(rows: Sequence[Mapping[int, Fraction]], ncols: int, reduce: bool = False):
    """Echelon form of the given sparse rational rows, as integer pivot rows."""
    int_rows = [_integer_row(r) for r in rows]
    if ncols < DENSE_COLS:
        dense = []
        for r in int_rows:
            if not r:
                continue
            line = [0] * ncols
            for k, v in r.items():
                line[k] = v
            dense.append(line)
        return [(c, {k: v for k, v in enumerate(row) if v})
                for c, row in _backend.echelon_dense(dense, ncols, reduce)]
    return _backend.echelon_sparse([r for r in int_rows if r], ncols, reduce)


def rank(M: SparseMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    # rank M = rank M^T; eliminate along the narrower side
    if M.cols <= M.rows:
        return len(echelon(M.row_dicts(), M.cols))
    return len(echelon(M.columns(), M.rows))


def nullity(M: SparseMatrix) -> int:
    return M.cols - rank(M)


def kernel_basis(M: SparseMatrix) -> list[list[Fraction]]:
    """A basis of ``{x : M x = 0}`` as dense vectors, one per free column."""
    n = M.cols
    piv = echelon(M.row_dicts(), n, reduce=True) if M.rows else []
    pivot_cols = {c for c, _ in piv}
    basis = []
    for f in range(n):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for c, row in piv:
            a = row.get(f)
            if a:
                v[c] = Fraction(-a, row[c])
        basis.append(v)
    return basis


def solve(M: SparseMatrix, b) -> list[Fraction] | None:
    """Some ``x`` with ``M x = b``, or None when the system is inconsistent.

    ``b`` may be a dense sequence or a sparse ``{row: value}`` mapping.
    """
    if isinstance(b, Mapping):
        bvec = {k: as_rational(v) for k, v in b.items() if v}
    else:
        if len(b) != M.rows:
            raise DimensionError(f"right-hand side has length {len(b)}, expected {M.rows}")
        bvec = {k: as_rational(v) for k, v in enumerate(b) if v}
    n = M.cols
    rows = M.row_dicts()
    for k, v in bvec.items():
        if not 0 <= k < M.rows:
            raise IndexError(f"right-hand side index {k} out of range")
        rows[k][n] = v
    piv = echelon(rows, n + 1, reduce=True)
    x = [Fraction(0)] * n
    for c, row in piv:
        if c == n:
            return None
        rhs = row.get(n)
        if rhs:
            x[c] = Fraction(rhs, row[c])
    return x
