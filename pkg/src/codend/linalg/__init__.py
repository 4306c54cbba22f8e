"""Exact rational linear algebra over tensor-power-indexed bases."""

from ._backend import BACKEND
from .elim import DENSE_COLS, echelon, kernel_basis, nullity, rank, solve
from .matrix import (
    DimensionError,
    LinearMap,
    SparseMatrix,
    add_scaled,
    compose,
    flat_index,
    identity,
    pad,
    pad_dims,
    tensor,
    tensor_index,
    zero_map,
)
from .rational import Fraction, as_rational, format_rational, parse_rational

__all__ = [
    "BACKEND",
    "DENSE_COLS",
    "DimensionError",
    "Fraction",
    "LinearMap",
    "SparseMatrix",
    "add_scaled",
    "as_rational",
    "compose",
    "echelon",
    "flat_index",
    "format_rational",
    "identity",
    "kernel_basis",
    "nullity",
    "pad",
    "pad_dims",
    "parse_rational",
    "rank",
    "solve",
    "tensor",
    "tensor_index",
    "zero_map",
]
