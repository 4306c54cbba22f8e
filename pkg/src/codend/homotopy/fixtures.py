"""Small graded structures with known verdicts."""

from __future__ import annotations

from ..corpus import divided_power, integration_operator
from ..linalg import LinearMap
from .ainf import AInfCoalgebra, RBOInf, from_coalgebra
from .dendinf import DendInfCoalgebra
from .graded import GradedMap, GradedSpace

__all__ = ["interval_chains", "triangle_chains", "split_dg", "divided_power_ainf", "divided_power_rbo"]


def _chains(vertices: int, edges: list[tuple[int, int]], triangles: list[tuple[int, int, int]] = (),
            max_arity: int = 4) -> AInfCoalgebra:
    """Simplicial chains with the Alexander-Whitney coproduct and ``d = sum (-1)^i d_i``.

    Basis order: vertices (degree 0), edges (1), triangles (2).
    """
    simplices = [(v,) for v in range(vertices)] + [tuple(e) for e in edges] + [tuple(t) for t in triangles]
    index = {s: i for i, s in enumerate(simplices)}
    N = len(simplices)
    support = [(0, vertices), (1, len(edges)), (2, len(triangles))]
    space = GradedSpace(support)
    d_img, delta_img = [], []
    for s in simplices:
        img = {}
        if len(s) > 1:
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                img[index[face]] = img.get(index[face], 0) + (-1) ** i
        d_img.append({k: v for k, v in img.items() if v})
        co = {}
        for p in range(len(s)):
            co[index[s[: p + 1]] * N + index[s[p:]]] = 1
        delta_img.append(co)
    ops = {
        1: GradedMap(space, 1, -1, LinearMap.from_images(N, N, d_img)),
        2: GradedMap(space, 2, 0, LinearMap.from_images(N, N * N, delta_img)),
    }
    return AInfCoalgebra(space, ops, max_arity)


def interval_chains(max_arity: int = 4) -> AInfCoalgebra:
    return _chains(2, [(0, 1)], max_arity=max_arity)


def triangle_chains(max_arity: int = 4) -> AInfCoalgebra:
    return _chains(3, [(0, 1), (0, 2), (1, 2)], [(0, 1, 2)], max_arity=max_arity)


def split_dg(C: AInfCoalgebra, side: int = 1) -> DendInfCoalgebra:
    """``delta_{1,[1]} = delta_1`` and ``delta_{2,[side]} = delta_2``, the other label zero."""
    ops = {}
    if not C.op(1).is_zero():
        ops[(1, 1)] = C.op(1)
    if not C.op(2).is_zero():
        ops[(2, side)] = C.op(2)
    return DendInfCoalgebra(C.space, ops, C.max_arity)


def divided_power_ainf(d: int = 4, max_arity: int = 4) -> AInfCoalgebra:
    return from_coalgebra(divided_power(d), max_arity)


def divided_power_rbo(d: int = 4, scale=1) -> RBOInf:
    return RBOInf(GradedMap(GradedSpace.concentrated(d), 1, 0, integration_operator(d, scale)))
