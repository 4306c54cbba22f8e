"""Shared plumbing for cochain complexes: operator matrices and cohomology tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .linalg import SparseMatrix, rank
from .operadcore import OperadElement

__all__ = ["operator_matrix", "CohomologyTable", "cohomology_table"]


def operator_matrix(apply: Callable[[OperadElement], OperadElement], basis: Callable[[int], OperadElement],
                    dim_in: int, dim_out: int) -> SparseMatrix:
    """Matrix of a linear operator on cochains, column ``j`` = image of basis cochain ``j``."""
    cols = []
    for j in range(dim_in):
        cols.append(apply(basis(j)).to_vector())
    return SparseMatrix.from_columns(dim_out, cols)


@dataclass
class CohomologyTable:
    """Dimensions of a complex starting in degree 1 (``C^0 = 0``)."""

    cochain_dims: list[int] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)
    h_dims: list[int] = field(default_factory=list)

    def as_rows(self) -> list[dict]:
        return [{"n": n + 1, "dim_C": c, "rank_delta": r, "dim_H": h}
                for n, (c, r, h) in enumerate(zip(self.cochain_dims, self.ranks, self.h_dims))]

    def rank_nullity_ok(self) -> bool:
        # dim ker delta^n + rank delta^n = dim C^n, and H^n fits inside ker delta^n
        prev = 0
        for c, r, h in zip(self.cochain_dims, self.ranks, self.h_dims):
            ker = c - r
            if ker < 0 or h != ker - prev or h < 0:
                return False
            prev = r
        return True


def cohomology_table(matrix_of: Callable[[int], SparseMatrix], cochain_dim: Callable[[int], int],
                     max_degree: int) -> CohomologyTable:
    """``dim H^n = dim ker delta^n - rank delta^(n-1)`` for ``n = 1..max_degree``."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    table = CohomologyTable()
    prev_rank = 0
    for n in range(1, max_degree + 1):
        M = matrix_of(n)
        c = cochain_dim(n)
        if M.cols != c:
            raise AssertionError(f"coboundary matrix has {M.cols} columns, expected {c}")
        r = rank(M)
        table.cochain_dims.append(c)
        table.ranks.append(r)
        table.h_dims.append(c - r - prev_rank)
        prev_rank = r
    return table
