"""Truncated A-infinity coalgebras and weight-0 Rota-Baxter operators on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..coalg import AssocCoalgebra
from ..linalg import LinearMap, compose, identity, tensor, zero_map
from .graded import GradedMap, GradedSpace, pad_graded

__all__ = [
    "TRUNCATED",
    "IdentityReport",
    "AInfCoalgebra",
    "RBOInf",
    "ainf_identity",
    "check_ainf",
    "check_rbo_inf",
    "rbo_inf_defect",
    "from_coalgebra",
    "r_tensor",
]

TRUNCATED = "not checked (truncation)"


@dataclass
class IdentityReport:
    """Per-identity verdicts: ``(n, label, status)`` with status ``pass``, ``fail`` or :data:`TRUNCATED`."""

    entries: list[tuple[int, int | None, str]] = field(default_factory=list)

    def add(self, n: int, label: int | None, status: str):
        self.entries.append((n, label, status))

    @property
    def ok(self) -> bool:
        return all(s != "fail" for _, _, s in self.entries)

    @property
    def failures(self) -> list[tuple[int, int | None]]:
        return [(n, lab) for n, lab, s in self.entries if s == "fail"]

    @property
    def checked(self) -> int:
        return sum(1 for _, _, s in self.entries if s != TRUNCATED)

    def verdicts(self) -> dict:
        return {(n, lab): s for n, lab, s in self.entries}

    def as_rows(self) -> list[dict]:
        return [{"n": n, "label": lab, "status": s} for n, lab, s in self.entries]


class AInfCoalgebra:
    """Cooperations ``delta_k`` of degree ``k - 2`` for ``k <= max_arity``; missing ones are zero."""

    def __init__(self, space: GradedSpace, ops: Mapping[int, GradedMap], max_arity: int):
        if max_arity < 1:
            raise ValueError("max_arity must be at least 1")
        for k, op in ops.items():
            if not 1 <= k <= max_arity:
                raise ValueError(f"arity {k} outside 1..{max_arity}")
            if op.space != space or op.arity != k or op.shift != k - 2:
                raise ValueError(f"delta_{k} must be a degree-{k - 2} map into C^(x){k}")
        self.space = space
        self.ops = dict(ops)
        self.max_arity = max_arity

    def op(self, k: int) -> GradedMap:
        if k > self.max_arity:
            raise KeyError(f"arity {k} is beyond the truncation {self.max_arity}")
        return self.ops.get(k) or GradedMap.zero(self.space, k, k - 2)


def from_coalgebra(C: AssocCoalgebra, max_arity: int = 4) -> AInfCoalgebra:
    """An ungraded coalgebra in degree 0 as an A-infinity coalgebra with only ``delta_2``."""
    space = GradedSpace.concentrated(C.dim)
    return AInfCoalgebra(space, {2: GradedMap(space, 2, 0, C.delta)}, max_arity)


def ainf_identity(C: AInfCoalgebra, n: int) -> LinearMap:
    """``sum_{r+s+t=n} (-1)^(rs+t) (id^r (x) delta_s (x) id^t) o delta_{r+1+t}``."""
    N = C.space.dim
    acc = None
    for s in range(1, n + 1):
        for r in range(0, n - s + 1):
            t = n - s - r
            outer = C.op(r + 1 + t)
            if outer.is_zero():
                continue
            inner = C.op(s)
            if inner.is_zero():
                continue
            term = compose(pad_graded(inner, r, t), outer.map)
            if (r * s + t) % 2:
                term = -term
            acc = term if acc is None else acc + term
    if acc is None:
        return zero_map(N, N**n)
    return acc


def check_ainf(C: AInfCoalgebra, n_max: int) -> IdentityReport:
    """Identity ``n`` involves ``delta_k`` for ``k <= n``; it is checked when ``n <= max_arity``."""
    report = IdentityReport()
    for n in range(1, n_max + 1):
        if n > C.max_arity:
            report.add(n, None, TRUNCATED)
            continue
        report.add(n, None, "pass" if ainf_identity(C, n).is_zero() else "fail")
    return report


@dataclass(frozen=True, eq=False)
class RBOInf:
    R: GradedMap

    def __post_init__(self):
        if self.R.arity != 1 or self.R.shift != 0:
            raise ValueError("a Rota-Baxter operator is a degree-0 map C -> C")


def r_tensor(R: LinearMap, k: int, skip: int | None = None) -> LinearMap:
    """``R (x) .. (x) id (x) .. (x) R`` with ``id`` in position ``skip`` (1-based), or all ``R``."""
    N = R.dom_dim
    out = None
    for i in range(1, k + 1):
        f = identity(N) if i == skip else R
        out = f if out is None else tensor(out, f)
    return out


def rbo_inf_defect(C: AInfCoalgebra, R: RBOInf, k: int) -> LinearMap:
    """``R^{(x)k} o delta_k - (sum_i R..id_i..R) o delta_k o R``.

    ``R`` has degree 0, so no Koszul signs arise.
    """
    Rm = R.R.map
    dk = C.op(k).map
    lhs = compose(r_tensor(Rm, k), dk)
    mix = r_tensor(Rm, k, 1)
    for i in range(2, k + 1):
        mix = mix + r_tensor(Rm, k, i)
    return lhs - compose(compose(mix, dk), Rm)


def check_rbo_inf(C: AInfCoalgebra, R: RBOInf) -> IdentityReport:
    if R.R.space != C.space:
        raise ValueError("operator and coalgebra live on different spaces")
    report = IdentityReport()
    for k in range(1, C.max_arity + 1):
        report.add(k, None, "pass" if rbo_inf_defect(C, R, k).is_zero() else "fail")
    return report
