"""Truncated formal deformations of dendriform coalgebras.

A deformation of order ``N`` is ``delta_t = delta + delta_1 t + ... + delta_N t^N``
with each ``delta_i`` a degree-2 cochain ``([1] -> delta_prec_i, [2] -> delta_succ_i)``.
The deformation equations are ``sum_{i+j=n} delta_i . delta_j = 0`` in the
labelled operad.

Sign note: ``delta_c = -d_pi`` on degree-2 cochains, so the extension equation
``delta . X + X . delta = Ob`` reads ``delta_c(X) = -Ob``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .dendcoalg import DendCoalgebra, DendCoboundary, DendCochain, LabeledCoEnd, dend_multiplication, self_bicomodule
from .linalg import LinearMap, compose, identity, solve, tensor, zero_map
from .operadcore import dot, random_map

__all__ = [
    "TruncDeformation",
    "FormalIso",
    "CocycleError",
    "trivial_deformation",
    "deformation_defects",
    "check_deformation",
    "infinitesimal",
    "invert",
    "apply_equivalence",
    "check_equivalence",
    "random_formal_iso",
    "infinitesimal_deformation_from_cocycle",
    "obstruction",
    "extend",
]


class CocycleError(ValueError):
    """A cochain expected to be a cocycle is not; ``labels`` lists the offending components."""

    def __init__(self, message: str, labels: Sequence[int] = ()):
        super().__init__(message)
        self.labels = list(labels)


@dataclass(frozen=True, eq=False)
class TruncDeformation:
    base: DendCoalgebra
    order: int
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple(self.terms)
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(terms) != self.order:
            raise ValueError(f"order {self.order} needs {self.order} terms, got {len(terms)}")
        d = self.base.dim
        for t in terms:
            if not isinstance(t, DendCochain) or t.arity != 2 or (t.dom_dim, t.cod_dim) != (d, d * d):
                raise ValueError("each term must be a degree-2 cochain on the base")
        object.__setattr__(self, "terms", terms)

    @property
    def dim(self) -> int:
        return self.base.dim

    def term(self, i: int) -> DendCochain:
        """``delta_i``; ``delta_0`` is the base structure and terms past the order vanish."""
        if i == 0:
            return dend_multiplication(self.base)
        if i <= self.order:
            return self.terms[i - 1]
        return LabeledCoEnd(self.dim).zero(2)


@dataclass(frozen=True, eq=False)
class FormalIso:
    """``Phi_t = id + Phi_1 t + ... + Phi_N t^N``."""

    order: int
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple(self.terms)
        if len(terms) != self.order:
            raise ValueError(f"order {self.order} needs {self.order} terms, got {len(terms)}")
        if terms:
            d = terms[0].dom_dim
            for t in terms:
                if (t.dom_dim, t.cod_dim) != (d, d):
                    raise ValueError("formal isomorphism terms must be square of a common size")
        object.__setattr__(self, "terms", terms)

    def term(self, i: int, d: int) -> LinearMap:
        if i == 0:
            return identity(d)
        if i <= self.order:
            return self.terms[i - 1]
        return zero_map(d, d)


def trivial_deformation(C: DendCoalgebra, order: int) -> TruncDeformation:
    z = LabeledCoEnd(C.dim).zero(2)
    return TruncDeformation(C, order, (z,) * order)


def _equation(D: TruncDeformation, n: int) -> DendCochain:
    op = LabeledCoEnd(D.dim)
    acc = op.zero(3)
    for i in range(n + 1):
        acc = acc + dot(op, D.term(i), D.term(n - i))
    return acc


def deformation_defects(D: TruncDeformation) -> list[tuple[int, list[int]]]:
    """``(n, labels)`` for each order ``n <= N`` whose equation fails, with the failing labels."""
    out = []
    for n in range(D.order + 1):
        eq = _equation(D, n)
        bad = [r + 1 for r, p in enumerate(eq.parts) if not p.is_zero()]
        if bad:
            out.append((n, bad))
    return out


def check_deformation(D: TruncDeformation) -> bool:
    return not deformation_defects(D)


def _coboundary(C: DendCoalgebra) -> DendCoboundary:
    return DendCoboundary(self_bicomodule(C))


def infinitesimal(D: TruncDeformation) -> tuple[DendCochain, bool]:
    """``delta_1`` and whether it is a 2-cocycle."""
    x = D.term(1)
    return x, _coboundary(D.base)(x).is_zero()


def invert(Phi: FormalIso, d: int) -> FormalIso:
    """Truncated inverse: ``Psi_n = -sum_{j=1..n} Phi_j o Psi_{n-j}``."""
    psi = [identity(d)]
    for n in range(1, Phi.order + 1):
        acc = zero_map(d, d)
        for j in range(1, n + 1):
            acc = acc - compose(Phi.term(j, d), psi[n - j])
        psi.append(acc)
    return FormalIso(Phi.order, tuple(psi[1:]))


def _tensor_square(Phi: FormalIso, d: int, n: int) -> LinearMap:
    acc = zero_map(d * d, d * d)
    for i in range(n + 1):
        acc = acc + tensor(Phi.term(i, d), Phi.term(n - i, d))
    return acc


def apply_equivalence(Phi: FormalIso, D: TruncDeformation) -> TruncDeformation:
    """``delta'_t = (Phi_t (x) Phi_t) o delta_t o Phi_t^-1`` mod ``t^(N+1)``."""
    if Phi.order != D.order:
        raise ValueError(f"order mismatch: isomorphism {Phi.order}, deformation {D.order}")
    d, N = D.dim, D.order
    Psi = invert(Phi, d)
    squares = [_tensor_square(Phi, d, a) for a in range(N + 1)]
    terms = []
    for n in range(1, N + 1):
        parts = []
        for r in (0, 1):
            acc = zero_map(d, d * d)
            for a in range(n + 1):
                for b in range(n + 1 - a):
                    c = n - a - b
                    acc = acc + compose(compose(squares[a], D.term(b).parts[r]), Psi.term(c, d))
            parts.append(acc)
        terms.append(DendCochain(2, parts))
    return TruncDeformation(D.base, N, tuple(terms))


def check_equivalence(Phi: FormalIso, D: TruncDeformation, D2: TruncDeformation) -> bool:
    """``sum_{i+j=n} delta'_i[r] o Phi_j == sum_{i+j+k=n} (Phi_i (x) Phi_j) o delta_k[r]`` for ``n <= N``."""
    if not (Phi.order == D.order == D2.order):
        raise ValueError("order mismatch")
    if D.base.prec != D2.base.prec or D.base.succ != D2.base.succ:
        return False
    d = D.dim
    for n in range(D.order + 1):
        for r in (0, 1):
            lhs = zero_map(d, d * d)
            for i in range(n + 1):
                lhs = lhs + compose(D2.term(i).parts[r], Phi.term(n - i, d))
            rhs = zero_map(d, d * d)
            for k in range(n + 1):
                rhs = rhs + compose(_tensor_square(Phi, d, n - k), D.term(k).parts[r])
            if lhs != rhs:
                return False
    return True


def random_formal_iso(d: int, order: int, rng: random.Random, density: float = 0.4) -> FormalIso:
    return FormalIso(order, tuple(random_map(d, d, rng, density) for _ in range(order)))


def infinitesimal_deformation_from_cocycle(C: DendCoalgebra, z: DendCochain) -> TruncDeformation:
    """The order-1 deformation ``delta + z t`` over ``K[t]/(t^2)``; ``z`` must be a 2-cocycle."""
    if z.arity != 2:
        raise ValueError("an infinitesimal must be a degree-2 cochain")
    dz = _coboundary(C)(z)
    bad = [r + 1 for r, p in enumerate(dz.parts) if not p.is_zero()]
    if bad:
        raise CocycleError("not a 2-cocycle: delta_c(z) is nonzero at " + ", ".join(f"[{r}]" for r in bad), bad)
    return TruncDeformation(C, 1, (z,))


def obstruction(D: TruncDeformation) -> tuple[DendCochain, bool]:
    """``Ob = -sum_{i+j=N+1, i,j>=1} delta_i . delta_j`` and whether ``delta_c(Ob) = 0``."""
    if not check_deformation(D):
        raise ValueError("not a deformation: " + "; ".join(
            f"order {n} fails at " + ", ".join(f"[{r}]" for r in labels) for n, labels in deformation_defects(D)))
    op = LabeledCoEnd(D.dim)
    N = D.order
    ob = op.zero(3)
    for i in range(1, N + 1):
        ob = ob - dot(op, D.term(i), D.term(N + 1 - i))
    return ob, _coboundary(D.base)(ob).is_zero()


def extend(D: TruncDeformation) -> TruncDeformation | None:
    """An order-``N+1`` extension, or ``None`` when the obstruction class is nonzero.

    Solves ``delta . X + X . delta = Ob``, i.e. ``delta_c(X) = -Ob``.
    """
    ob, _ = obstruction(D)
    d = D.dim
    if ob.is_zero():
        x = LabeledCoEnd(d).zero(2)
    else:
        delta = _coboundary(D.base)
        rhs = {k: -v for k, v in ob.to_vector().items()}
        sol = solve(delta.matrix(2), rhs)
        if sol is None:
            return None
        x = DendCochain.from_vector(2, 2, d, d * d, sol)
    out = TruncDeformation(D.base, D.order + 1, D.terms + (x,))
    if not check_deformation(out):
        raise AssertionError("extension failed the deformation equations")
    return out
