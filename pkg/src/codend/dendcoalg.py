"""Dendriform coalgebras, their bicomodules and their cohomology.

Cochains of degree ``n`` are families ``(s_[1], ..., s_[n])`` of maps
``M -> C^{(x)n}``, i.e. elements of ``Hom(K[C_n] (x) M, C^{(x)n})``; evaluation
at a label sum is the linear extension.  With ``M = C`` these families form
the labelled coendomorphism operad :class:`LabeledCoEnd`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .coalg import AssocBicomodule, AssocCoalgebra, CoHochCochain
from .complexes import CohomologyTable, cohomology_table, operator_matrix
from .labels import r0, ri
from .linalg import DimensionError, LinearMap, SparseMatrix, compose, identity, pad, pad_dims, tensor, zero_map
from .operadcore import ArityError, Operad, OperadElement, random_map

__all__ = [
    "DendCoalgebra",
    "DendBicomodule",
    "DendCochain",
    "LabeledCoEnd",
    "dendriform_defects",
    "check_dendriform",
    "bicomodule_defects",
    "check_bicomodule",
    "self_bicomodule",
    "zero_bicomodule",
    "split_dendriform",
    "split_bicomodule",
    "dend_partial_composition",
    "dend_multiplication",
    "DendCoboundary",
    "dend_coboundary",
    "dend_cohomology",
    "dend_cohomology_dims",
    "semidirect",
    "total",
    "total_bicomodule",
    "S_map",
]


@dataclass(frozen=True, eq=False)
class DendCoalgebra:
    dim: int
    prec: LinearMap
    succ: LinearMap

    def __post_init__(self):
        for f in (self.prec, self.succ):
            if (f.dom_dim, f.cod_dim) != (self.dim, self.dim**2):
                raise DimensionError(f"coproducts must map {self.dim} -> {self.dim ** 2}")

    def coproduct(self, label: int) -> LinearMap:
        if label == 1:
            return self.prec
        if label == 2:
            return self.succ
        raise ValueError(f"label [{label}] is not in C_2")

    def coproduct_sum(self, labels: Mapping[int, int]) -> LinearMap:
        out = zero_map(self.dim, self.dim**2)
        for k, c in labels.items():
            out = out + self.coproduct(k).scale(c)
        return out


@dataclass(frozen=True, eq=False)
class DendBicomodule:
    dim: int
    base: DendCoalgebra
    l_prec: LinearMap
    l_succ: LinearMap
    r_prec: LinearMap
    r_succ: LinearMap

    def __post_init__(self):
        d, m = self.base.dim, self.dim
        for f in (self.l_prec, self.l_succ):
            if (f.dom_dim, f.cod_dim) != (m, d * m):
                raise DimensionError(f"left coactions must map {m} -> {d * m}")
        for f in (self.r_prec, self.r_succ):
            if (f.dom_dim, f.cod_dim) != (m, m * d):
                raise DimensionError(f"right coactions must map {m} -> {m * d}")

    def left(self, label: int) -> LinearMap:
        return self.l_prec if label == 1 else self.l_succ

    def right(self, label: int) -> LinearMap:
        return self.r_prec if label == 1 else self.r_succ


class DendCochain(OperadElement):
    """``Hom(K[C_n] (x) M, C^{(x)n})`` stored as its ``n`` components."""

    __slots__ = ()

    def __init__(self, degree: int, components):
        components = tuple(components)
        if len(components) != degree:
            raise ArityError(f"a degree-{degree} cochain needs {degree} components, got {len(components)}")
        super().__init__(degree, components)

    @property
    def components(self) -> tuple[LinearMap, ...]:
        return self.parts

    def __getitem__(self, label: int) -> LinearMap:
        if not 1 <= label <= self.arity:
            raise ValueError(f"label [{label}] is not in C_{self.arity}")
        return self.parts[label - 1]

    def evaluate(self, labels: Mapping[int, int]) -> LinearMap:
        """Value at a label sum ``sum c_k [k]``."""
        out = None
        for k, c in labels.items():
            term = self[k] if c == 1 else self[k].scale(c)
            out = term if out is None else out + term
        if out is None:
            return zero_map(self.dom_dim, self.cod_dim)
        return out


def _key(labels: Mapping[int, int]) -> tuple:
    return tuple(sorted(labels.items()))


def dendriform_defects(D: DendCoalgebra) -> dict[str, LinearMap]:
    """Left minus right side of each of the identities ``c1``, ``c2``, ``c3``."""
    d, P, S = D.dim, D.prec, D.succ
    T = P + S

    def left(f):
        return pad(f, 0, 1, d)

    def right(f):
        return pad(f, 1, 0, d)

    return {
        "c1": compose(left(P), P) - compose(right(T), P),
        "c2": compose(left(S), P) - compose(right(P), S),
        "c3": compose(left(T), S) - compose(right(S), S),
    }


def check_dendriform(D: DendCoalgebra) -> bool:
    return all(x.is_zero() for x in dendriform_defects(D).values())


def bicomodule_defects(M: DendBicomodule) -> dict[str, LinearMap]:
    """Left minus right side of ``r1`` ... ``r9``."""
    d, m = M.base.dim, M.dim
    P, S = M.base.prec, M.base.succ
    lp, ls, rp, rs = M.l_prec, M.l_succ, M.r_prec, M.r_succ

    def L(f, right_dim):
        return pad_dims(f, 1, right_dim)

    def R(f, left_dim):
        return pad_dims(f, left_dim, 1)

    return {
        "r1": compose(L(P, m), lp) - compose(R(lp + ls, d), lp),
        "r2": compose(L(S, m), lp) - compose(R(lp, d), ls),
        "r3": compose(L(P + S, m), ls) - compose(R(ls, d), ls),
        "r4": compose(L(lp, d), rp) - compose(R(rp + rs, d), lp),
        "r5": compose(L(ls, d), rp) - compose(R(rp, d), ls),
        "r6": compose(L(lp + ls, d), rs) - compose(R(rs, d), ls),
        "r7": compose(L(rp, d), rp) - compose(R(P + S, m), rp),
        "r8": compose(L(rs, d), rp) - compose(R(P, m), rs),
        "r9": compose(L(rp + rs, d), rs) - compose(R(S, m), rs),
    }


def check_bicomodule(M: DendBicomodule) -> bool:
    return all(x.is_zero() for x in bicomodule_defects(M).values())


def self_bicomodule(D: DendCoalgebra) -> DendBicomodule:
    return DendBicomodule(D.dim, D, D.prec, D.succ, D.prec, D.succ)


def zero_bicomodule(D: DendCoalgebra, m: int) -> DendBicomodule:
    d = D.dim
    zl, zr = zero_map(m, d * m), zero_map(m, m * d)
    return DendBicomodule(m, D, zl, zl, zr, zr)


def split_dendriform(C: AssocCoalgebra, side: str = "prec") -> DendCoalgebra:
    """An associative coalgebra as a dendriform one with one coproduct zero."""
    z = zero_map(C.dim, C.dim**2)
    if side == "prec":
        return DendCoalgebra(C.dim, C.delta, z)
    if side == "succ":
        return DendCoalgebra(C.dim, z, C.delta)
    raise ValueError("side must be 'prec' or 'succ'")


def split_bicomodule(M: AssocBicomodule, side: str = "prec") -> DendBicomodule:
    """A bicomodule over ``C`` as one over :func:`split_dendriform` of ``C``."""
    base = split_dendriform(M.base, side)
    zl, zr = zero_map(M.dim, M.base.dim * M.dim), zero_map(M.dim, M.dim * M.base.dim)
    if side == "prec":
        return DendBicomodule(M.dim, base, M.delta_l, zl, M.delta_r, zr)
    return DendBicomodule(M.dim, base, zl, M.delta_l, zr, M.delta_r)


class LabeledCoEnd(Operad):
    """``O(n) = Hom(K[C_n] (x) K^d, (K^d)^{(x)n})`` with label-routed compositions."""

    element_type = DendCochain

    def __init__(self, d: int):
        self.d = d

    def compose(self, f: DendCochain, g: DendCochain, i: int) -> DendCochain:
        self._check_position(f, i)
        m, n = f.arity, g.arity
        cache: dict[tuple, LinearMap] = {}
        out = []
        for r in range(1, m + n):
            labels = ri(m, n, i, r)
            key = _key(labels)
            if key not in cache:
                cache[key] = pad(g.evaluate(labels), i - 1, m - i, self.d)
            out.append(compose(cache[key], f[r0(m, n, i, r)]))
        return DendCochain(m + n - 1, out)

    def unit(self) -> DendCochain:
        return DendCochain(1, (identity(self.d),))

    def zero(self, arity: int) -> DendCochain:
        z = zero_map(self.d, self.d**arity)
        return DendCochain(arity, (z,) * arity)

    def random_element(self, arity: int, rng: random.Random, density: float = 0.5) -> DendCochain:
        return DendCochain(arity, [random_map(self.d, self.d**arity, rng, density) for _ in range(arity)])


def dend_partial_composition(f: DendCochain, g: DendCochain, i: int, d: int | None = None) -> DendCochain:
    d = f.dom_dim if d is None else d
    return LabeledCoEnd(d).compose(f, g, i)


def dend_multiplication(D: DendCoalgebra) -> DendCochain:
    return DendCochain(2, (D.prec, D.succ))


class DendCoboundary:
    """The coboundary of the dendriform coalgebra complex with coefficients in ``M``."""

    def __init__(self, M: DendBicomodule):
        self.M = M
        self.d = M.base.dim
        self.m = M.dim
        self._pads: dict[tuple, LinearMap] = {}
        self._id = identity(self.d)

    def _padded(self, labels: Mapping[int, int], i: int, n: int) -> LinearMap:
        key = (_key(labels), i, n)
        if key not in self._pads:
            self._pads[key] = pad(self.M.base.coproduct_sum(labels), i - 1, n - i, self.d)
        return self._pads[key]

    def cochain_dim(self, n: int) -> int:
        return n * self.m * self.d**n

    def __call__(self, s: DendCochain) -> DendCochain:
        n = s.degree
        if n < 1:
            raise ArityError("the degree-0 cochain space is zero")
        if (s.dom_dim, s.cod_dim) != (self.m, self.d**n):
            raise DimensionError("cochain shape does not match the bicomodule")
        M = self.M
        evals: dict[tuple, LinearMap] = {}

        def at(labels):
            key = _key(labels)
            if key not in evals:
                evals[key] = s.evaluate(labels)
            return evals[key]

        out = []
        for r in range(1, n + 2):
            acc = compose(tensor(self._id, at(ri(2, n, 2, r))), M.left(r0(2, n, 2, r)))
            for i in range(1, n + 1):
                term = compose(self._padded(ri(n, 2, i, r), i, n), s[r0(n, 2, i, r)])
                acc = acc - term if i % 2 else acc + term
            last = compose(tensor(at(ri(2, n, 1, r)), self._id), M.right(r0(2, n, 1, r)))
            acc = acc + last if (n + 1) % 2 == 0 else acc - last
            out.append(acc)
        return DendCochain(n + 1, out)

    def basis(self, n: int):
        m, cod = self.m, self.d**n
        return lambda j: DendCochain.from_vector(n, n, m, cod, {j: 1})

    def matrix(self, n: int) -> SparseMatrix:
        return operator_matrix(self, self.basis(n), self.cochain_dim(n), self.cochain_dim(n + 1))


def dend_coboundary(M: DendBicomodule, s: DendCochain) -> DendCochain:
    return DendCoboundary(M)(s)


def dend_cohomology(M: DendBicomodule, max_degree: int) -> CohomologyTable:
    delta = DendCoboundary(M)
    return cohomology_table(delta.matrix, delta.cochain_dim, max_degree)


def dend_cohomology_dims(M: DendBicomodule, max_degree: int) -> list[int]:
    return dend_cohomology(M, max_degree).h_dims


def semidirect(C: DendCoalgebra, M: DendBicomodule, *, validate: bool = True) -> DendCoalgebra:
    """The dendriform coalgebra ``C (+) M`` (basis of ``C`` first)."""
    if M.base is not C and (M.base.prec != C.prec or M.base.succ != C.succ):
        raise ValueError("bicomodule is over a different dendriform coalgebra")
    if validate and not check_bicomodule(M):
        raise ValueError("not a bicomodule: " + ", ".join(
            k for k, v in bicomodule_defects(M).items() if not v.is_zero()))
    d, m = C.dim, M.dim
    D = d + m

    def cc(x):
        i, j = divmod(x, d)
        return i * D + j

    def cm(x):
        i, k = divmod(x, m)
        return i * D + d + k

    def mc(x):
        k, j = divmod(x, d)
        return (d + k) * D + j

    def build(base: LinearMap, left: LinearMap, right: LinearMap) -> LinearMap:
        cols = [{cc(r): v for r, v in base.image(j).items()} for j in range(d)]
        for k in range(m):
            col = {cm(r): v for r, v in left.image(k).items()}
            col.update({mc(r): v for r, v in right.image(k).items()})
            cols.append(col)
        return LinearMap(SparseMatrix.from_columns(D * D, cols))

    return DendCoalgebra(D, build(C.prec, M.l_prec, M.r_prec), build(C.succ, M.l_succ, M.r_succ))


def total(D: DendCoalgebra) -> AssocCoalgebra:
    return AssocCoalgebra(D.dim, D.prec + D.succ)


def total_bicomodule(M: DendBicomodule) -> AssocBicomodule:
    return AssocBicomodule(M.dim, total(M.base), M.l_prec + M.l_succ, M.r_prec + M.r_succ)


def S_map(s: DendCochain) -> CoHochCochain:
    """``S(s) = s_[1] + ... + s_[n]``."""
    acc = s.parts[0]
    for p in s.parts[1:]:
        acc = acc + p
    return CoHochCochain(s.degree, acc)
