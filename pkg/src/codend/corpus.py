"""Named, axiom-satisfying fixtures used by the tests, the benchmarks and the CLI.

Every generator is deterministic; the ones that draw random data take a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coalg import AssocBicomodule, AssocCoalgebra
from .coalg import self_bicomodule as assoc_self
from .dendalg import DendAlgebra, dualize
from .dendcoalg import (
    DendBicomodule,
    DendCoalgebra,
    self_bicomodule,
    semidirect,
    split_bicomodule,
    split_dendriform,
    zero_bicomodule,
)
from .linalg import LinearMap, zero_map

__all__ = [
    "group_like",
    "divided_power",
    "zero_coalgebra",
    "direct_sum",
    "diagonal_bicomodule",
    "integration_operator",
    "truncated_polynomial_algebra",
    "split_algebra",
    "zero_algebra",
    "zero_dendriform",
    "perturb",
    "dend_corpus",
    "bicomodule_corpus",
    "algebra_corpus",
]


def group_like(d: int) -> AssocCoalgebra:
    """``delta(e_i) = e_i (x) e_i``."""
    return AssocCoalgebra(d, LinearMap.from_images(d, d * d, [{i * d + i: 1} for i in range(d)]))


def divided_power(d: int) -> AssocCoalgebra:
    """``delta(c_n) = sum_{i+j=n} c_i (x) c_j`` on ``c_0 .. c_{d-1}``."""
    images = [{i * d + (n - i): 1 for i in range(n + 1)} for n in range(d)]
    return AssocCoalgebra(d, LinearMap.from_images(d, d * d, images))


def zero_coalgebra(d: int) -> AssocCoalgebra:
    return AssocCoalgebra(d, zero_map(d, d * d))


def direct_sum(C1: AssocCoalgebra, C2: AssocCoalgebra) -> AssocCoalgebra:
    d1, d2 = C1.dim, C2.dim
    d = d1 + d2
    images = []
    for j in range(d1):
        images.append({(r // d1) * d + r % d1: v for r, v in C1.delta.image(j).items()})
    for j in range(d2):
        images.append({(d1 + r // d2) * d + d1 + r % d2: v for r, v in C2.delta.image(j).items()})
    return AssocCoalgebra(d, LinearMap.from_images(d, d * d, images))


def diagonal_bicomodule(C: AssocCoalgebra, a: int, b: int, m: int = 1) -> AssocBicomodule:
    """``delta^l(x) = e_a (x) x`` and ``delta^r(x) = x (x) e_b`` over a group-like coalgebra."""
    d = C.dim
    left = LinearMap.from_images(m, d * m, [{a * m + k: 1} for k in range(m)])
    right = LinearMap.from_images(m, m * d, [{k * d + b: 1} for k in range(m)])
    return AssocBicomodule(m, C, left, right)


def integration_operator(d: int, scale=1) -> LinearMap:
    """``R(c_k) = scale * c_{k-1} / k`` and ``R(c_0) = 0`` on the divided-power coalgebra."""
    scale = Fraction(scale)
    return LinearMap.from_images(d, d, [{} if k == 0 else {k - 1: scale / k} for k in range(d)])


def truncated_polynomial_algebra(d: int = 3) -> DendAlgebra:
    """``span{x, .., x^d}`` with ``a < b = a R(b)`` and ``a > b = R(a) b``, ``R(x^k) = x^(k+1)/(k+1)``.

    Basis vector ``e_i`` is ``x^(i+1)``; products of degree above ``d`` vanish.
    """
    prec, succ = [], []
    for a in range(d):
        for b in range(d):
            p, q = a + 1, b + 1
            # x^p . R(x^q) = x^(p+q+1)/(q+1)
            deg = p + q + 1
            prec.append({deg - 1: Fraction(1, q + 1)} if deg <= d else {})
            succ.append({deg - 1: Fraction(1, p + 1)} if deg <= d else {})
    return DendAlgebra(d, LinearMap.from_images(d * d, d, prec), LinearMap.from_images(d * d, d, succ))


def split_algebra(d: int = 2) -> DendAlgebra:
    """``K^d`` with coordinatewise product as ``<`` and ``> = 0``."""
    prec = LinearMap.from_images(d * d, d, [{a: 1} if a == b else {} for a in range(d) for b in range(d)])
    return DendAlgebra(d, prec, zero_map(d * d, d))


def zero_algebra(d: int) -> DendAlgebra:
    return DendAlgebra(d, zero_map(d * d, d), zero_map(d * d, d))


def zero_dendriform(d: int) -> DendCoalgebra:
    z = zero_map(d, d * d)
    return DendCoalgebra(d, z, z)


def perturb(f: LinearMap, seed: int = 0) -> LinearMap:
    """Add 1 to one deterministic-random entry of ``f``."""
    rng = random.Random(seed)
    j = rng.randrange(f.dom_dim)
    r = rng.randrange(f.cod_dim)
    bump = LinearMap.from_triplets(f.dom_dim, f.cod_dim, [(j, r, 1)])
    return f + bump


def _rbo_induced():
    from .rota import RelRBO, induced_dendriform

    out = {}
    for d in (2, 3):
        C = divided_power(d)
        out[f"rbo-divided-{d}"] = induced_dendriform(RelRBO(C, assoc_self(C), integration_operator(d)))
    C = divided_power(3)
    out["rbo-divided-3-scaled"] = induced_dendriform(RelRBO(C, assoc_self(C), integration_operator(3, Fraction(-2, 3))))
    return out


def dend_corpus() -> dict[str, DendCoalgebra]:
    """Named dendriform coalgebras with ``d <= 3``."""
    corpus = {
        "zero-2": zero_dendriform(2),
        "split-grouplike-1": split_dendriform(group_like(1)),
        "split-grouplike-2-succ": split_dendriform(group_like(2), "succ"),
        "split-divided-3": split_dendriform(divided_power(3)),
        "split-divided-2-succ": split_dendriform(divided_power(2), "succ"),
    }
    corpus.update(_rbo_induced())
    corpus["dual-trunc-poly-3"] = dualize(truncated_polynomial_algebra(3))
    corpus["dual-trunc-poly-2"] = dualize(truncated_polynomial_algebra(2))
    corpus["dual-split-2"] = dualize(split_algebra(2))
    D1 = split_dendriform(group_like(1))
    corpus["semidirect-grouplike-1"] = semidirect(D1, self_bicomodule(D1))
    D2 = split_dendriform(divided_power(2))
    corpus["semidirect-divided-2-zero"] = semidirect(D2, zero_bicomodule(D2, 1))
    return corpus


def bicomodule_corpus() -> dict[str, DendBicomodule]:
    """Named bicomodules, ``d <= 3`` and ``m <= 3``, including non-self ones."""
    out = {name: self_bicomodule(D) for name, D in dend_corpus().items()}
    G = group_like(2)
    out["split-diagonal-2-1"] = split_bicomodule(diagonal_bicomodule(G, 0, 1, 2))
    out["split-diagonal-2-2-succ"] = split_bicomodule(diagonal_bicomodule(G, 1, 1, 1), "succ")
    out["zero-coaction-divided-3"] = zero_bicomodule(split_dendriform(divided_power(3)), 2)
    return out


def algebra_corpus() -> dict[str, DendAlgebra]:
    return {
        "trunc-poly-3": truncated_polynomial_algebra(3),
        "trunc-poly-2": truncated_polynomial_algebra(2),
        "split-2": split_algebra(2),
        "zero-2": zero_algebra(2),
    }
