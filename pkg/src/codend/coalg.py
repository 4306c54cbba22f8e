"""Associative coalgebras, their bicomodules and the coHochschild complex.

No counit is assumed anywhere.  The coendomorphism operad ``coEnd`` of a
space of dimension ``d`` has ``coEnd(n) = Hom(K^d, (K^d)^{(x)n})`` with
``f o_i g = (id^{i-1} (x) g (x) id^{m-i}) o f``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import CohomologyTable, cohomology_table, operator_matrix
from .linalg import DimensionError, LinearMap, SparseMatrix, compose, identity, pad, pad_dims, tensor, zero_map
from .operadcore import ArityError, Operad, OperadElement, bracket, random_map

__all__ = [
    "AssocCoalgebra",
    "AssocBicomodule",
    "CoHochCochain",
    "CoEnd",
    "coassociativity_defect",
    "check_coassociative",
    "bicomodule_defects",
    "check_bicomodule",
    "self_bicomodule",
    "zero_bicomodule",
    "CoHochCoboundary",
    "cohoch_coboundary",
    "cohoch_cohomology",
    "cohoch_cohomology_dims",
    "coend_partial_composition",
    "coend_lie_bracket",
]


@dataclass(frozen=True, eq=False)
class AssocCoalgebra:
    dim: int
    delta: LinearMap

    def __post_init__(self):
        if (self.delta.dom_dim, self.delta.cod_dim) != (self.dim, self.dim**2):
            raise DimensionError(f"coproduct must map {self.dim} -> {self.dim ** 2}")


@dataclass(frozen=True, eq=False)
class AssocBicomodule:
    dim: int
    base: AssocCoalgebra
    delta_l: LinearMap
    delta_r: LinearMap

    def __post_init__(self):
        d, m = self.base.dim, self.dim
        if (self.delta_l.dom_dim, self.delta_l.cod_dim) != (m, d * m):
            raise DimensionError(f"left coaction must map {m} -> {d * m}")
        if (self.delta_r.dom_dim, self.delta_r.cod_dim) != (m, m * d):
            raise DimensionError(f"right coaction must map {m} -> {m * d}")


class CoHochCochain(OperadElement):
    """A map ``M -> C^{(x)n}``; also an element of ``coEnd(n)`` when ``M = C``."""

    __slots__ = ()

    def __init__(self, degree: int, parts):
        if isinstance(parts, LinearMap):
            parts = (parts,)
        super().__init__(degree, parts)
        if len(self.parts) != 1:
            raise ValueError("a coHochschild cochain has exactly one component")

    @property
    def map(self) -> LinearMap:
        return self.parts[0]


def coassociativity_defect(C: AssocCoalgebra) -> LinearMap:
    """``(delta (x) id) o delta - (id (x) delta) o delta``."""
    d, D = C.dim, C.delta
    return compose(pad(D, 0, 1, d), D) - compose(pad(D, 1, 0, d), D)


def check_coassociative(C: AssocCoalgebra) -> bool:
    return coassociativity_defect(C).is_zero()


def bicomodule_defects(M: AssocBicomodule) -> dict[str, LinearMap]:
    """Defects of the three coaction identities, keyed ``b1`` (left),
    ``b2`` (mixed) and ``b3`` (right)."""
    d, m = M.base.dim, M.dim
    D, L, R = M.base.delta, M.delta_l, M.delta_r
    return {
        "b1": compose(pad_dims(D, 1, m), L) - compose(pad_dims(L, d, 1), L),
        "b2": compose(pad_dims(L, 1, d), R) - compose(pad_dims(R, d, 1), L),
        "b3": compose(pad_dims(R, 1, d), R) - compose(pad_dims(D, m, 1), R),
    }


def check_bicomodule(M: AssocBicomodule) -> bool:
    return all(x.is_zero() for x in bicomodule_defects(M).values())


def self_bicomodule(C: AssocCoalgebra) -> AssocBicomodule:
    return AssocBicomodule(C.dim, C, C.delta, C.delta)


def zero_bicomodule(C: AssocCoalgebra, m: int) -> AssocBicomodule:
    d = C.dim
    return AssocBicomodule(m, C, zero_map(m, d * m), zero_map(m, m * d))


class CoHochCoboundary:
    """The coHochschild coboundary of a bicomodule, with cached padded coproducts.

    ``delta s = (id (x) s) o delta^l + sum_i (-1)^i (id^{i-1} (x) delta (x) id^{n-i}) o s
    + (-1)^(n+1) (s (x) id) o delta^r``.
    """

    def __init__(self, M: AssocBicomodule):
        self.M = M
        self.d = M.base.dim
        self.m = M.dim
        self._pads: dict[tuple[int, int], LinearMap] = {}

    def _pad(self, i: int, n: int) -> LinearMap:
        key = (i, n)
        if key not in self._pads:
            self._pads[key] = pad(self.M.base.delta, i - 1, n - i, self.d)
        return self._pads[key]

    def cochain_dim(self, n: int) -> int:
        return self.m * self.d**n

    def __call__(self, s: CoHochCochain) -> CoHochCochain:
        n = s.degree
        if n < 1:
            raise ArityError("the degree-0 cochain space is zero")
        sigma = s.map
        if (sigma.dom_dim, sigma.cod_dim) != (self.m, self.d**n):
            raise DimensionError("cochain shape does not match the bicomodule")
        out = compose(tensor(identity(self.d), sigma), self.M.delta_l)
        for i in range(1, n + 1):
            term = compose(self._pad(i, n), sigma)
            out = out - term if i % 2 else out + term
        last = compose(tensor(sigma, identity(self.d)), self.M.delta_r)
        out = out + last if (n + 1) % 2 == 0 else out - last
        return CoHochCochain(n + 1, out)

    def basis(self, n: int):
        m, cod = self.m, self.d**n
        return lambda j: CoHochCochain.from_vector(n, 1, m, cod, {j: 1})

    def matrix(self, n: int) -> SparseMatrix:
        return operator_matrix(self, self.basis(n), self.cochain_dim(n), self.cochain_dim(n + 1))


def cohoch_coboundary(M: AssocBicomodule, s: CoHochCochain) -> CoHochCochain:
    return CoHochCoboundary(M)(s)


def cohoch_cohomology(M: AssocBicomodule, max_degree: int) -> CohomologyTable:
    delta = CoHochCoboundary(M)
    return cohomology_table(delta.matrix, delta.cochain_dim, max_degree)


def cohoch_cohomology_dims(M: AssocBicomodule, max_degree: int) -> list[int]:
    return cohoch_cohomology(M, max_degree).h_dims


class CoEnd(Operad):
    """The coendomorphism operad of ``K^d``."""

    element_type = CoHochCochain

    def __init__(self, d: int):
        self.d = d

    def compose(self, f: CoHochCochain, g: CoHochCochain, i: int) -> CoHochCochain:
        self._check_position(f, i)
        m, n = f.arity, g.arity
        return CoHochCochain(m + n - 1, compose(pad(g.map, i - 1, m - i, self.d), f.map))

    def unit(self) -> CoHochCochain:
        return CoHochCochain(1, identity(self.d))

    def zero(self, arity: int) -> CoHochCochain:
        return CoHochCochain(arity, zero_map(self.d, self.d**arity))

    def random_element(self, arity: int, rng: random.Random, density: float = 0.5) -> CoHochCochain:
        return CoHochCochain(arity, random_map(self.d, self.d**arity, rng, density))

    def element(self, arity: int, f: LinearMap) -> CoHochCochain:
        return CoHochCochain(arity, f)


def coend_partial_composition(f: CoHochCochain, g: CoHochCochain, i: int, d: int | None = None) -> CoHochCochain:
    d = f.dom_dim if d is None else d
    return CoEnd(d).compose(f, g, i)


def coend_lie_bracket(f: CoHochCochain, g: CoHochCochain, d: int | None = None) -> CoHochCochain:
    d = f.dom_dim if d is None else d
    return bracket(CoEnd(d), f, g)
