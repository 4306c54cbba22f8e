"""Relative Rota-Baxter operators on coalgebras and their cohomology.

A relative Rota-Baxter operator ``T: C -> M`` satisfies
``(T (x) T) o delta = (id (x) T) o delta^r o T + (T (x) id) o delta^l o T``.
Its cochains ``Hom(C, M^{(x)n})`` carry the derived bracket of the
Maurer-Cartan element ``delta + delta^l + delta^r`` in ``coEnd(C (+) M)``; this
module computes that bracket in the ambient operad and projects back.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .coalg import AssocBicomodule, AssocCoalgebra, CoEnd, CoHochCochain, CoHochCoboundary
from .complexes import CohomologyTable, cohomology_table
from .dendcoalg import DendCoalgebra, DendCochain, LabeledCoEnd
from .linalg import DimensionError, LinearMap, SparseMatrix, compose, identity, pad, tensor, zero_map
from .operadcore import bracket

__all__ = [
    "RelRBO",
    "RBOCochain",
    "rbo_defect",
    "check_rbo",
    "induced_dendriform",
    "maurer_cartan_element",
    "check_maurer_cartan",
    "embed",
    "project",
    "derived_bracket",
    "explicit_derived_bracket",
    "induced_coalgebra_on_M",
    "induced_bicomodule_on_C",
    "rbo_coboundary",
    "rbo_cohomology",
    "rbo_cohomology_dims",
    "theta",
    "theta_bracket_defect",
]

C_BLOCK, M_BLOCK = 0, 1


@dataclass(frozen=True, eq=False)
class RelRBO:
    base: AssocCoalgebra
    comodule: AssocBicomodule
    T: LinearMap

    def __post_init__(self):
        if self.comodule.base is not self.base and self.comodule.base.delta != self.base.delta:
            raise ValueError("bicomodule is over a different coalgebra")
        if (self.T.dom_dim, self.T.cod_dim) != (self.base.dim, self.comodule.dim):
            raise DimensionError(f"T must map {self.base.dim} -> {self.comodule.dim}")

    @property
    def d(self) -> int:
        return self.base.dim

    @property
    def m(self) -> int:
        return self.comodule.dim


class RBOCochain(CoHochCochain):
    """An element of ``Hom(C, M^{(x)n})``."""

    __slots__ = ()


def _as_rbo_cochain(x: CoHochCochain) -> RBOCochain:
    return RBOCochain(x.degree, x.map)


def rbo_defect(R: RelRBO) -> LinearMap:
    C, M, T = R.base, R.comodule, R.T
    lhs = compose(tensor(T, T), C.delta)
    rhs = compose(compose(tensor(identity(R.m), T), M.delta_r), T)
    rhs = rhs + compose(compose(tensor(T, identity(R.m)), M.delta_l), T)
    return lhs - rhs


def check_rbo(R: RelRBO) -> bool:
    return rbo_defect(R).is_zero()


def induced_dendriform(R: RelRBO, *, validate: bool = True) -> DendCoalgebra:
    """``delta_prec = (id (x) T) o delta^r`` and ``delta_succ = (T (x) id) o delta^l`` on ``M``."""
    if validate and not check_rbo(R):
        raise ValueError("not a relative Rota-Baxter operator")
    M, T, m = R.comodule, R.T, R.m
    return DendCoalgebra(m, compose(tensor(identity(m), T), M.delta_r), compose(tensor(T, identity(m)), M.delta_l))


# Ambient coEnd(C (+) M): basis of C first, then M.

def _block_index(block: int, local: int, d: int) -> int:
    return local if block == C_BLOCK else d + local


def embed(f: LinearMap, dom_block: int, cod_blocks: Sequence[int], d: int, m: int) -> CoHochCochain:
    """Extend ``f: X -> X_1 (x) .. (x) X_k`` by zero to an element of ``coEnd_{C (+) M}(k)``."""
    dims = [d if b == C_BLOCK else m for b in cod_blocks]
    D = d + m
    k = len(cod_blocks)
    want_dom = d if dom_block == C_BLOCK else m
    expected = 1
    for x in dims:
        expected *= x
    if (f.dom_dim, f.cod_dim) != (want_dom, expected):
        raise DimensionError("map shape does not match the given blocks")
    cols: list[dict] = [{} for _ in range(D)]
    for j in range(f.dom_dim):
        col = {}
        for r, v in f.image(j).items():
            flat, rest = 0, r
            digits = []
            for dim in reversed(dims):
                rest, x = divmod(rest, dim)
                digits.append(x)
            for b, x in zip(cod_blocks, reversed(digits)):
                flat = flat * D + _block_index(b, x, d)
            col[flat] = v
        cols[_block_index(dom_block, j, d)] = col
    return CoHochCochain(k, LinearMap(SparseMatrix.from_columns(D**k, cols)))


def project(x: CoHochCochain, d: int, m: int) -> RBOCochain:
    """Restrict an ambient element to ``Hom(C, M^{(x)k})``."""
    D = d + m
    k = x.arity
    cols = []
    for j in range(d):
        col = {}
        for r, v in x.map.image(j).items():
            digits = []
            rest = r
            for _ in range(k):
                rest, y = divmod(rest, D)
                digits.append(y)
            if all(y >= d for y in digits):
                flat = 0
                for y in reversed(digits):
                    flat = flat * m + (y - d)
                col[flat] = v
        cols.append(col)
    return RBOCochain(k, LinearMap(SparseMatrix.from_columns(m**k, cols)))


def maurer_cartan_element(C: AssocCoalgebra, M: AssocBicomodule) -> CoHochCochain:
    d, m = C.dim, M.dim
    return (embed(C.delta, C_BLOCK, (C_BLOCK, C_BLOCK), d, m)
            + embed(M.delta_l, M_BLOCK, (C_BLOCK, M_BLOCK), d, m)
            + embed(M.delta_r, M_BLOCK, (M_BLOCK, C_BLOCK), d, m))


def check_maurer_cartan(C: AssocCoalgebra, M: AssocBicomodule) -> bool:
    """``[mu, mu] = 0`` for ``mu = delta + delta^l + delta^r`` in ``coEnd_{C (+) M}``."""
    mu = maurer_cartan_element(C, M)
    return bracket(CoEnd(C.dim + M.dim), mu, mu).is_zero()


def _lift(R: RelRBO, P: CoHochCochain) -> CoHochCochain:
    return embed(P.map, C_BLOCK, (M_BLOCK,) * P.arity, R.d, R.m)


def derived_bracket(R: RelRBO, P: CoHochCochain, Q: CoHochCochain) -> RBOCochain:
    """``[[P, Q]] = (-1)^m' [[mu, P], Q]`` computed in ``coEnd_{C (+) M}``."""
    op = CoEnd(R.d + R.m)
    mu = maurer_cartan_element(R.base, R.comodule)
    out = bracket(op, bracket(op, mu, _lift(R, P)), _lift(R, Q))
    out = project(out, R.d, R.m)
    return -out if P.arity % 2 else out


def explicit_derived_bracket(R: RelRBO, P: CoHochCochain, Q: CoHochCochain) -> RBOCochain:
    """Closed formula for ``[[P, Q]]`` with ``P`` of degree 1.

    ``(Q (x) id) delta^l P - (-1)^n (id (x) Q) delta^r P
    + (-1)^n sum_i (-1)^i (id^{i-1} (x) X (x) id^{n-i}) Q
    + (-1)^n (id (x) Q)(P (x) id) delta - (Q (x) id)(id (x) P) delta`` with
    ``X = (id (x) P) delta^r + (P (x) id) delta^l``.  The middle sum enters with
    ``+(-1)^n``; that is the sign for which it agrees with :func:`derived_bracket`
    and with ``d_T = (-1)^n delta_coHoch``.
    """
    if P.arity != 1:
        raise ValueError("the closed formula needs P of degree 1")
    C, M, m = R.base, R.comodule, R.m
    p, q, n = P.map, Q.map, Q.arity
    idm, idc = identity(m), identity(R.d)
    sn = -1 if n % 2 else 1
    out = compose(compose(tensor(q, idm), M.delta_l), p)
    out = out - compose(compose(tensor(idm, q), M.delta_r), p).scale(sn)
    x = compose(tensor(idm, p), M.delta_r) + compose(tensor(p, idm), M.delta_l)
    mid = zero_map(R.d, m ** (n + 1))
    for i in range(1, n + 1):
        term = compose(pad(x, i - 1, n - i, m), q)
        mid = mid - term if i % 2 else mid + term
    out = out + mid.scale(sn)
    out = out + compose(compose(tensor(idm, q), tensor(p, idc)), C.delta).scale(sn)
    out = out - compose(compose(tensor(q, idm), tensor(idc, p)), C.delta)
    return RBOCochain(n + 1, out)


def induced_coalgebra_on_M(R: RelRBO, *, validate: bool = True) -> AssocCoalgebra:
    D = induced_dendriform(R, validate=validate)
    return AssocCoalgebra(R.m, D.prec + D.succ)


def induced_bicomodule_on_C(R: RelRBO, *, validate: bool = True) -> AssocBicomodule:
    """``C`` over ``(M, delta_*)`` with ``delta^l_* = (T (x) id) o delta - delta^r o T``
    and ``delta^r_* = (id (x) T) o delta - delta^l o T``."""
    base = induced_coalgebra_on_M(R, validate=validate)
    C, M, T = R.base, R.comodule, R.T
    idc = identity(R.d)
    left = compose(tensor(T, idc), C.delta) - compose(M.delta_r, T)
    right = compose(tensor(idc, T), C.delta) - compose(M.delta_l, T)
    return AssocBicomodule(R.d, base, left, right)


def rbo_coboundary(R: RelRBO, f: CoHochCochain) -> RBOCochain:
    """The coHochschild coboundary of ``(M, delta_*)`` with coefficients in ``C``."""
    return _as_rbo_cochain(CoHochCoboundary(induced_bicomodule_on_C(R))(f))


def rbo_cohomology(R: RelRBO, max_degree: int) -> CohomologyTable:
    delta = CoHochCoboundary(induced_bicomodule_on_C(R))
    return cohomology_table(delta.matrix, delta.cochain_dim, max_degree)


def rbo_cohomology_dims(R: RelRBO, max_degree: int) -> list[int]:
    return rbo_cohomology(R, max_degree).h_dims


def theta(R: RelRBO, f: CoHochCochain) -> DendCochain:
    """``Theta_n(f)``: ``[1] -> (-1)^(n+1) (id (x) f) o delta^r``, ``[n+1] -> (f (x) id) o delta^l``, zero between."""
    M, m, n = R.comodule, R.m, f.arity
    if (f.map.dom_dim, f.map.cod_dim) != (R.d, m**n):
        raise DimensionError("cochain shape does not match the operator")
    idm = identity(m)
    first = compose(tensor(idm, f.map), M.delta_r)
    if n % 2 == 0:
        first = -first
    last = compose(tensor(f.map, idm), M.delta_l)
    z = zero_map(m, m ** (n + 1))
    return DendCochain(n + 1, [first, *itertools.repeat(z, n - 1), last])


def theta_bracket_defect(R: RelRBO, P: CoHochCochain, Q: CoHochCochain) -> DendCochain:
    """``Theta_{1+n}[[P, Q]] - [Theta_1 P, Theta_n Q]``, zero when the identity holds."""
    lhs = theta(R, derived_bracket(R, P, Q))
    rhs = bracket(LabeledCoEnd(R.m), theta(R, P), theta(R, Q))
    return lhs - rhs
