"""Truncated Dend-infinity coalgebras, their [1]-shift, splitting and the
structure induced by a Rota-Baxter operator.

The labelled identity for ``n`` and ``[theta]`` in ``C_n`` is

    sum_{r+s+t=n} (-1)^(rs+t) (id^r (x) delta_{s, R_{r+1}[theta]} (x) id^t)
                              o delta_{r+1+t, R_0[theta]}

where ``R_0``, ``R_{r+1}`` are the label maps for inserting arity ``s`` at
position ``r+1`` of arity ``r+1+t``.  On the desuspension every cooperation has
degree -1 and the prefactor ``(-1)^(rs+t)`` disappears.
"""

from __future__ import annotations

from typing import Mapping

from ..dendcoalg import DendCoalgebra, total
from ..labels import r0, ri
from ..linalg import LinearMap, SparseMatrix, compose, zero_map
from .ainf import TRUNCATED, AInfCoalgebra, IdentityReport, RBOInf, check_ainf, r_tensor
from .graded import GradedMap, GradedSpace, pad_graded

__all__ = [
    "DendInfCoalgebra",
    "from_dendriform",
    "dendinf_identity",
    "check_dendinf",
    "check_dendinf1",
    "shift_to_dendinf1",
    "shift_from_dendinf1",
    "shift_sign",
    "split",
    "induce_dendinf",
]


class DendInfCoalgebra:
    """Cooperations ``delta_{k,[r]}`` of a common degree per arity, ``1 <= r <= k <= max_arity``.

    ``degree_of(k)`` is ``k - 2`` for a Dend-infinity coalgebra and ``-1`` for a
    Dend-infinity[1] coalgebra (``shifted=True``).
    """

    def __init__(self, space: GradedSpace, ops: Mapping[tuple[int, int], GradedMap], max_arity: int,
                 *, shifted: bool = False):
        if max_arity < 1:
            raise ValueError("max_arity must be at least 1")
        self.space = space
        self.max_arity = max_arity
        self.shifted = shifted
        for (k, r), op in ops.items():
            if not 1 <= r <= k <= max_arity:
                raise ValueError(f"label [{r}] of arity {k} is out of range")
            if op.space != space or op.arity != k or op.shift != self.degree_of(k):
                raise ValueError(f"delta_({k},[{r}]) must be a degree-{self.degree_of(k)} map into C^(x){k}")
        self.ops = dict(ops)

    def degree_of(self, k: int) -> int:
        return -1 if self.shifted else k - 2

    def op(self, k: int, r: int) -> GradedMap:
        if k > self.max_arity:
            raise KeyError(f"arity {k} is beyond the truncation {self.max_arity}")
        return self.ops.get((k, r)) or GradedMap.zero(self.space, k, self.degree_of(k))

    def evaluate(self, k: int, labels: Mapping[int, int]) -> GradedMap:
        acc = GradedMap.zero(self.space, k, self.degree_of(k))
        for r, c in labels.items():
            acc = acc + (self.op(k, r) if c == 1 else self.op(k, r).scale(c))
        return acc


def from_dendriform(D: DendCoalgebra, max_arity: int = 4) -> DendInfCoalgebra:
    """An ungraded dendriform coalgebra in degree 0: ``delta_{2,[1]} = prec``, ``delta_{2,[2]} = succ``."""
    space = GradedSpace.concentrated(D.dim)
    ops = {(2, 1): GradedMap(space, 2, 0, D.prec), (2, 2): GradedMap(space, 2, 0, D.succ)}
    return DendInfCoalgebra(space, ops, max_arity)


def dendinf_identity(D: DendInfCoalgebra, n: int, theta: int) -> LinearMap:
    """Left side of the labelled identity; signs ``(-1)^(rs+t)`` only for the unshifted form."""
    N = D.space.dim
    acc = zero_map(N, N**n)
    for s in range(1, n + 1):
        for r in range(0, n - s + 1):
            t = n - s - r
            m = r + 1 + t
            outer = D.op(m, r0(m, s, r + 1, theta))
            if outer.is_zero():
                continue
            inner = D.evaluate(s, ri(m, s, r + 1, theta))
            if inner.is_zero():
                continue
            term = compose(pad_graded(inner, r, t), outer.map)
            if not D.shifted and (r * s + t) % 2:
                term = -term
            acc = acc + term
    return acc


def _check(D: DendInfCoalgebra, n_max: int) -> IdentityReport:
    report = IdentityReport()
    for n in range(1, n_max + 1):
        for theta in range(1, n + 1):
            if n > D.max_arity:
                report.add(n, theta, TRUNCATED)
            else:
                report.add(n, theta, "pass" if dendinf_identity(D, n, theta).is_zero() else "fail")
    return report


def check_dendinf(D: DendInfCoalgebra, n_max: int) -> IdentityReport:
    if D.shifted:
        raise ValueError("use check_dendinf1 for shifted structures")
    return _check(D, n_max)


def check_dendinf1(V: DendInfCoalgebra, n_max: int) -> IdentityReport:
    if not V.shifted:
        raise ValueError("use check_dendinf for unshifted structures")
    return _check(V, n_max)


def shift_sign(space: GradedSpace, k: int, flat: int) -> int:
    """Sign of ``(s^-1)^{(x)k}`` on the basis word ``a_1 .. a_k`` of ``A``: ``(-1)^{sum_i (k-i)|a_i|}``."""
    N = space.dim
    degs = space.degrees
    total_exp = 0
    for i in range(k, 0, -1):
        flat, x = divmod(flat, N)
        total_exp += (k - i) * degs[x]
    return -1 if total_exp % 2 else 1


def _conjugate(op: GradedMap, space: GradedSpace, new_space: GradedSpace, new_shift: int,
               source_sign: bool) -> GradedMap:
    """Apply the tensor-power sign to the output words, read with the degrees of ``space`` or ``new_space``."""
    k = op.arity
    sign_space = space if source_sign else new_space
    cols = []
    for col in op.map.matrix.columns():
        out = {}
        for r, v in col.items():
            out[r] = v if shift_sign(sign_space, k, r) == 1 else -v
        cols.append(out)
    m = LinearMap(SparseMatrix.from_columns(op.map.cod_dim, cols))
    return GradedMap(new_space, k, new_shift, m)


def _epsilon(k: int) -> int:
    # (-1)^{(k-1)(k-2)/2}; with it each shifted identity is +-1 times the conjugated
    # unshifted one, uniformly over all terms (pinned in tests)
    return -1 if ((k - 1) * (k - 2) // 2) % 2 else 1


def shift_to_dendinf1(D: DendInfCoalgebra) -> DendInfCoalgebra:
    """Transport to ``V = s^-1 A``: ``Delta_{k,[r]} = eps_k (s^-1)^{(x)k} o delta_{k,[r]} o s``."""
    if D.shifted:
        raise ValueError("structure is already shifted")
    V = D.space.shifted(-1)
    ops = {}
    for (k, r), op in D.ops.items():
        g = _conjugate(op, D.space, V, -1, True)
        ops[(k, r)] = g if _epsilon(k) == 1 else -g
    return DendInfCoalgebra(V, ops, D.max_arity, shifted=True)


def shift_from_dendinf1(V: DendInfCoalgebra) -> DendInfCoalgebra:
    """Inverse of :func:`shift_to_dendinf1`."""
    if not V.shifted:
        raise ValueError("structure is not shifted")
    A = V.space.shifted(1)
    ops = {}
    for (k, r), op in V.ops.items():
        g = _conjugate(op, V.space, A, k - 2, False)
        ops[(k, r)] = g if _epsilon(k) == 1 else -g
    return DendInfCoalgebra(A, ops, V.max_arity)


def split(D: DendInfCoalgebra, *, validate_upto: int | None = None) -> AInfCoalgebra:
    """``delta_k = delta_{k,[1]} + .. + delta_{k,[k]}``."""
    if validate_upto is not None and not check_dendinf(D, validate_upto).ok:
        raise ValueError("input is not a Dend-infinity coalgebra")
    ops = {}
    for k in range(1, D.max_arity + 1):
        acc = D.evaluate(k, {r: 1 for r in range(1, k + 1)})
        if not acc.is_zero():
            ops[k] = acc
    return AInfCoalgebra(D.space, ops, D.max_arity)


def induce_dendinf(C: AInfCoalgebra, R: RBOInf) -> DendInfCoalgebra:
    """``delta_{k,[r]} = (R .. id_r .. R) o delta_k``."""
    ops = {}
    for k in range(1, C.max_arity + 1):
        dk = C.op(k)
        if dk.is_zero():
            continue
        for r in range(1, k + 1):
            ops[(k, r)] = GradedMap(C.space, k, k - 2, compose(r_tensor(R.R.map, k, r), dk.map), validate=False)
    return DendInfCoalgebra(C.space, ops, C.max_arity)


def check_split(D: DendInfCoalgebra, n_max: int) -> IdentityReport:
    return check_ainf(split(D), n_max)


def total_matches(D: DendCoalgebra, S: AInfCoalgebra) -> bool:
    """``split`` of a degree-0 dendriform coalgebra equals its total coproduct."""
    return S.op(2).map == total(D).delta

