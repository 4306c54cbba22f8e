"""Sparse rational matrices and linear maps between tensor powers.

Tensor powers are flattened lexicographically with the leftmost factor most
significant: the basis tensor ``e_{i_1} (x) ... (x) e_{i_n}`` of ``(K^d)^{(x)n}``
(0-based ``i_k``) sits at flat index ``sum_k i_k * d**(n-k)``.  Every module in
the package relies on this single convention.

Matrices are stored column-wise (column ``j`` is the image of basis vector
``e_j``) as dicts of nonzero entries.  Values are treated as immutable once
constructed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .rational import as_rational

__all__ = [
    "DimensionError",
    "SparseMatrix",
    "LinearMap",
    "flat_index",
    "tensor_index",
    "compose",
    "tensor",
    "pad",
    "pad_dims",
    "identity",
    "zero_map",
    "add_scaled",
]

_ZERO = Fraction(0)


class DimensionError(ValueError):
    """Raised when shapes of maps or matrices are not conformable."""


def flat_index(components: Iterable[int], d: int) -> int:
    """Flat position of ``e_{i_1} (x) ... (x) e_{i_n}`` (0-based components)."""
    idx = 0
    for i in components:
        if not 0 <= i < d:
            raise IndexError(f"basis index {i} out of range for dimension {d}")
        idx = idx * d + i
    return idx


def tensor_index(flat: int, d: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`flat_index` for an ``n``-fold tensor power."""
    if not 0 <= flat < d**n:
        raise IndexError(f"flat index {flat} out of range for {d}^{n}")
    out = [0] * n
    for k in range(n - 1, -1, -1):
        flat, out[k] = divmod(flat, d)
    return tuple(out)


def add_scaled(acc: dict, vec: Mapping[int, Fraction], coeff=1) -> dict:
    """``acc += coeff * vec`` in place for sparse dict vectors; drops zeros."""
    if not coeff:
        return acc
    if coeff == 1 or coeff == -1:
        # skip the multiplication; structure maps are mostly unit entries
        get, pop = acc.get, acc.pop
        neg = coeff == -1
        for k, v in vec.items():
            x = get(k, _ZERO)
            x = x - v if neg else x + v
            if x:
                acc[k] = x
            else:
                pop(k, None)
        return acc
    for k, v in vec.items():
        if v == 1:
            x = acc.get(k, _ZERO) + coeff
        elif v == -1:
            x = acc.get(k, _ZERO) - coeff
        else:
            x = acc.get(k, _ZERO) + coeff * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)
    return acc


class SparseMatrix:
    """A ``rows x cols`` matrix of exact rationals, nonzero entries only."""

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise DimensionError("negative matrix dimension")
        self.rows = rows
        self.cols = cols
        columns: list[dict] = [{} for _ in range(cols)]
        if entries is not None:
            items = entries.items() if isinstance(entries, Mapping) else (
                ((r, c), v) for r, c, v in entries)
            for (r, c), v in items:
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
                v = as_rational(v)
                x = columns[c].get(r, _ZERO) + v
                if x:
                    columns[c][r] = x
                else:
                    columns[c].pop(r, None)
        self._columns = tuple(columns)

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[dict]) -> "SparseMatrix":
        """Build from per-column dicts without copying or validation."""
        m = cls.__new__(cls)
        m.rows = rows
        m._columns = tuple(columns)
        m.cols = len(m._columns)
        return m

    @classmethod
    def from_dense(cls, rows: list[list]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionError("ragged dense matrix")
            for j, v in enumerate(row):
                v = as_rational(v)
                if v:
                    entries[i, j] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls.from_columns(n, ({j: Fraction(1)} for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls.from_columns(rows, ({} for _ in range(cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return {(r, c): v for c, col in enumerate(self._columns) for r, v in col.items()}

    def column(self, j: int) -> dict:
        return self._columns[j]

    def columns(self) -> tuple[dict, ...]:
        return self._columns

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self._columns[c].get(r, _ZERO)

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self._columns)

    def is_zero(self) -> bool:
        return not any(self._columns)

    def triplets(self) -> list[tuple[int, int, Fraction]]:
        return sorted((r, c, v) for c, col in enumerate(self._columns) for r, v in col.items())

    def row_dicts(self) -> list[dict]:
        out: list[dict] = [{} for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[_ZERO] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_columns(self.cols, self.row_dicts())

    def _check_same(self, other: "SparseMatrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same(other)
        return SparseMatrix.from_columns(
            self.rows, (add_scaled(dict(a), b) for a, b in zip(self._columns, other._columns)))

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same(other)
        return SparseMatrix.from_columns(
            self.rows, (add_scaled(dict(a), b, -1) for a, b in zip(self._columns, other._columns)))

    def scale(self, c) -> "SparseMatrix":
        c = as_rational(c)
        if not c:
            return SparseMatrix.zero(self.rows, self.cols)
        if c == -1:
            return SparseMatrix.from_columns(self.rows, ({r: -v for r, v in col.items()} for col in self._columns))
        return SparseMatrix.from_columns(
            self.rows, ({r: c * v for r, v in col.items()} for col in self._columns))

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __rmul__(self, c) -> "SparseMatrix":
        return self.scale(c)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        mine = self._columns
        out = []
        for col in other._columns:
            acc: dict = {}
            for k, g in col.items():
                add_scaled(acc, mine[k], g)
            out.append(acc)
        return SparseMatrix.from_columns(self.rows, out)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        orows = other.rows
        out = []
        for a in self._columns:
            for b in other._columns:
                col = {}
                for i, u in a.items():
                    base = i * orows
                    if u == 1:
                        for k, v in b.items():
                            col[base + k] = v
                    else:
                        for k, v in b.items():
                            col[base + k] = u * v
                out.append(col)
        return SparseMatrix.from_columns(self.rows * orows, out)

    def apply(self, vec: Mapping[int, Fraction]) -> dict:
        acc: dict = {}
        for j, x in vec.items():
            add_scaled(acc, self._columns[j], x)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


class LinearMap:
    """A linear map ``K^dom_dim -> K^cod_dim`` given by a ``cod x dom`` matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: SparseMatrix):
        self.matrix = matrix

    @classmethod
    def from_triplets(cls, dom_dim: int, cod_dim: int, triplets) -> "LinearMap":
        """``triplets`` are ``(from, to, value)``: ``e_from -> value * e_to``."""
        return cls(SparseMatrix(cod_dim, dom_dim, ((t, f, v) for f, t, v in triplets)))

    @classmethod
    def from_images(cls, dom_dim: int, cod_dim: int, images) -> "LinearMap":
        images = [dict(im) for im in images]
        if len(images) != dom_dim:
            raise DimensionError("need one image per basis vector")
        for im in images:
            for k in im:
                if not 0 <= k < cod_dim:
                    raise IndexError(f"image index {k} outside codomain {cod_dim}")
        return cls(SparseMatrix.from_columns(cod_dim, images))

    @classmethod
    def from_dense(cls, rows) -> "LinearMap":
        return cls(SparseMatrix.from_dense(rows))

    @property
    def dom_dim(self) -> int:
        return self.matrix.cols

    @property
    def cod_dim(self) -> int:
        return self.matrix.rows

    def image(self, j: int) -> dict:
        return self.matrix.column(j)

    def __call__(self, vec: Mapping[int, Fraction]) -> dict:
        return self.matrix.apply(vec)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap(-self.matrix)

    def __rmul__(self, c) -> "LinearMap":
        return LinearMap(self.matrix.scale(c))

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.matrix.scale(c))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LinearMap({self.dom_dim} -> {self.cod_dim}, nnz={self.matrix.nnz})"


def identity(n: int) -> LinearMap:
    return LinearMap(SparseMatrix.identity(n))


def zero_map(dom_dim: int, cod_dim: int) -> LinearMap:
    return LinearMap(SparseMatrix.zero(cod_dim, dom_dim))


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """``f o g``; requires ``g.cod_dim == f.dom_dim``."""
    if g.cod_dim != f.dom_dim:
        raise DimensionError(
            f"cannot compose: inner map lands in dim {g.cod_dim}, outer expects {f.dom_dim}")
    return LinearMap(f.matrix @ g.matrix)


def tensor(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product with ``(f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j)``."""
    return LinearMap(f.matrix.kron(g.matrix))


def pad(f: LinearMap, left: int, right: int, d: int, sign=None) -> LinearMap:
    """``id_{d^left} (x) f (x) id_{d^right}``.

    ``sign``, if given, is called with the flat index of the left block and
    must return +1 or -1; it is used for Koszul signs in graded evaluation.
    """
    if left == 0 and right == 0 and sign is None:
        return f
    return pad_dims(f, d**left, d**right, sign)


def pad_dims(f: LinearMap, left_dim: int, right_dim: int, sign=None) -> LinearMap:
    """``id_{left_dim} (x) f (x) id_{right_dim}`` for identity blocks of any size."""
    dl, dr = left_dim, right_dim
    fd, fc = f.dom_dim, f.cod_dim
    fcols = f.matrix.columns()
    out = []
    for x in range(dl):
        s = 1 if sign is None else sign(x)
        base = x * fc
        for y in range(fd):
            col = fcols[y]
            if dr == 1:
                if s == 1:
                    out.append({base + a: v for a, v in col.items()})
                else:
                    out.append({base + a: -v for a, v in col.items()})
                continue
            for z in range(dr):
                if s == 1:
                    out.append({(base + a) * dr + z: v for a, v in col.items()})
                else:
                    out.append({(base + a) * dr + z: -v for a, v in col.items()})
    return LinearMap(SparseMatrix.from_columns(dl * fc * dr, out))
