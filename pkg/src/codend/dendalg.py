"""Finite-dimensional dendriform algebras and their duals.

A cochain of degree ``n`` is a family ``(f_[1], ..., f_[n])`` of maps
``A^{(x)n} -> A``.  Under the global flattening the identification
``w: (A*)^{(x)n} -> (A^{(x)n})*`` is the identity matrix, so dualizing a map is
transposing its structure-constant matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .complexes import CohomologyTable, cohomology_table, operator_matrix
from .dendcoalg import DendCoalgebra, DendCochain, LabeledCoEnd, _key
from .labels import r0, ri
from .linalg import DimensionError, LinearMap, SparseMatrix, compose, identity, pad, zero_map
from .operadcore import ArityError, Operad, OperadElement, d_pi, random_map

__all__ = [
    "DendAlgebra",
    "AlgCochain",
    "LabeledEnd",
    "algebra_defects",
    "check_dend_algebra",
    "alg_partial_composition",
    "alg_multiplication",
    "w_iso",
    "dualize",
    "codualize",
    "operad_dual_iso",
    "check_iso_compat",
    "AlgCoboundary",
    "alg_cohomology",
    "alg_cohomology_dims",
]


@dataclass(frozen=True, eq=False)
class DendAlgebra:
    dim: int
    prec: LinearMap
    succ: LinearMap

    def __post_init__(self):
        for f in (self.prec, self.succ):
            if (f.dom_dim, f.cod_dim) != (self.dim**2, self.dim):
                raise DimensionError(f"products must map {self.dim ** 2} -> {self.dim}")

    def product(self, label: int) -> LinearMap:
        if label not in (1, 2):
            raise ValueError(f"label [{label}] is not in C_2")
        return self.prec if label == 1 else self.succ

    def product_sum(self, labels: Mapping[int, int]) -> LinearMap:
        out = zero_map(self.dim**2, self.dim)
        for k, c in labels.items():
            out = out + self.product(k).scale(c)
        return out


class AlgCochain(OperadElement):
    """``Hom(K[C_n] (x) A^{(x)n}, A)`` stored as its ``n`` components."""

    __slots__ = ()

    def __init__(self, degree: int, components):
        components = tuple(components)
        if len(components) != degree:
            raise ArityError(f"a degree-{degree} cochain needs {degree} components, got {len(components)}")
        super().__init__(degree, components)

    __getitem__ = DendCochain.__getitem__
    evaluate = DendCochain.evaluate
    components = DendCochain.components


def algebra_defects(A: DendAlgebra) -> dict[str, LinearMap]:
    """Left minus right side of the three dendriform algebra identities."""
    d, P, S = A.dim, A.prec, A.succ
    T = P + S

    def first(f):
        return pad(f, 0, 1, d)

    def second(f):
        return pad(f, 1, 0, d)

    return {
        "a1": compose(P, first(P)) - compose(P, second(T)),
        "a2": compose(P, first(S)) - compose(S, second(P)),
        "a3": compose(S, first(T)) - compose(S, second(S)),
    }


def check_dend_algebra(A: DendAlgebra) -> bool:
    return all(x.is_zero() for x in algebra_defects(A).values())


class LabeledEnd(Operad):
    """``O(n) = Hom(K[C_n] (x) A^{(x)n}, A)``."""

    element_type = AlgCochain

    def __init__(self, d: int):
        self.d = d

    def compose(self, f: AlgCochain, g: AlgCochain, i: int) -> AlgCochain:
        self._check_position(f, i)
        m, n = f.arity, g.arity
        cache: dict[tuple, LinearMap] = {}
        out = []
        for r in range(1, m + n):
            labels = ri(m, n, i, r)
            key = _key(labels)
            if key not in cache:
                cache[key] = pad(g.evaluate(labels), i - 1, m - i, self.d)
            out.append(compose(f[r0(m, n, i, r)], cache[key]))
        return AlgCochain(m + n - 1, out)

    def unit(self) -> AlgCochain:
        return AlgCochain(1, (identity(self.d),))

    def zero(self, arity: int) -> AlgCochain:
        z = zero_map(self.d**arity, self.d)
        return AlgCochain(arity, (z,) * arity)

    def random_element(self, arity: int, rng: random.Random, density: float = 0.5) -> AlgCochain:
        return AlgCochain(arity, [random_map(self.d**arity, self.d, rng, density) for _ in range(arity)])


def alg_partial_composition(f: AlgCochain, g: AlgCochain, i: int, d: int | None = None) -> AlgCochain:
    d = f.cod_dim if d is None else d
    return LabeledEnd(d).compose(f, g, i)


def alg_multiplication(A: DendAlgebra) -> AlgCochain:
    return AlgCochain(2, (A.prec, A.succ))


def w_iso(n: int, d: int) -> LinearMap:
    """``w: (A*)^{(x)n} -> (A^{(x)n})*`` in dual coordinates."""
    return identity(d**n)


def _transpose(f: LinearMap) -> LinearMap:
    return LinearMap(f.matrix.transpose())


def dualize(A: DendAlgebra) -> DendCoalgebra:
    """``A*`` with ``delta_prec = w^-1 o prec*`` and ``delta_succ = w^-1 o succ*``."""
    w_inv = w_iso(2, A.dim)
    return DendCoalgebra(A.dim, compose(w_inv, _transpose(A.prec)), compose(w_inv, _transpose(A.succ)))


def codualize(C: DendCoalgebra) -> DendAlgebra:
    """Inverse of :func:`dualize`."""
    return DendAlgebra(C.dim, _transpose(C.prec), _transpose(C.succ))


def operad_dual_iso(f: AlgCochain) -> DendCochain:
    """``f |-> w^-1 o f*`` componentwise."""
    return DendCochain(f.arity, [_transpose(p) for p in f.parts])


def check_iso_compat(f: AlgCochain, g: AlgCochain, i: int) -> bool:
    """``w^-1 o (f o_i g)* == (w^-1 o f*) . _i (w^-1 o g*)``."""
    d = f.cod_dim
    lhs = operad_dual_iso(LabeledEnd(d).compose(f, g, i))
    rhs = LabeledCoEnd(d).compose(operad_dual_iso(f), operad_dual_iso(g), i)
    return lhs == rhs


class AlgCoboundary:
    """``delta f = (-1)^(n-1) d_pi f`` on the labelled End operad (self coefficients)."""

    def __init__(self, A: DendAlgebra):
        self.A = A
        self.d = A.dim
        self.op = LabeledEnd(A.dim)
        self.pi = alg_multiplication(A)

    def cochain_dim(self, n: int) -> int:
        return n * self.d ** (n + 1)

    def __call__(self, f: AlgCochain) -> AlgCochain:
        out = d_pi(self.op, self.pi, f, verify=False)
        return out if f.arity % 2 else -out

    def basis(self, n: int):
        d = self.d
        return lambda j: AlgCochain.from_vector(n, n, d**n, d, {j: 1})

    def matrix(self, n: int) -> SparseMatrix:
        return operator_matrix(self, self.basis(n), self.cochain_dim(n), self.cochain_dim(n + 1))


def alg_cohomology(A: DendAlgebra, max_degree: int) -> CohomologyTable:
    if not check_dend_algebra(A):
        raise ValueError("not a dendriform algebra")
    delta = AlgCoboundary(A)
    return cohomology_table(delta.matrix, delta.cochain_dim, max_degree)


def alg_cohomology_dims(A: DendAlgebra, max_degree: int) -> list[int]:
    return alg_cohomology(A, max_degree).h_dims
