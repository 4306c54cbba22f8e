"""Finite graded vector spaces and homogeneous maps into their tensor powers.

A :class:`GradedSpace` orders its homogeneous basis by the support list, so a
space with support ``[(0, 2), (1, 1)]`` has basis ``e_0, e_1`` in degree 0 and
``e_2`` in degree 1.  Tensor powers use the global flattening of
:mod:`codend.linalg`.

Koszul convention: ``(f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y)``, so
``id^r (x) f (x) id^t`` picks up ``(-1)^{|f| (|x_1| + .. + |x_r|)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ..linalg import DimensionError, LinearMap, pad, zero_map

__all__ = ["GradedSpace", "GradedMap", "DegreeError", "pad_graded", "word_degree", "random_graded_map"]


class DegreeError(ValueError):
    """A map has an entry that does not respect its declared degree."""


@dataclass(frozen=True)
class GradedSpace:
    support: tuple[tuple[int, int], ...]

    def __init__(self, support: Iterable[Sequence[int]]):
        items = []
        seen = set()
        for deg, dim in support:
            deg, dim = int(deg), int(dim)
            if dim < 0:
                raise ValueError("dimensions must be non-negative")
            if deg in seen:
                raise ValueError(f"degree {deg} listed twice")
            seen.add(deg)
            if dim:
                items.append((deg, dim))
        object.__setattr__(self, "support", tuple(items))

    @classmethod
    def concentrated(cls, dim: int, degree: int = 0) -> "GradedSpace":
        return cls([(degree, dim)])

    @property
    def dim(self) -> int:
        return sum(n for _, n in self.support)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each basis vector, in basis order."""
        return _degrees(self.support)

    def offset(self, degree: int) -> int:
        """Index of the first basis vector of the given degree."""
        off = 0
        for deg, n in self.support:
            if deg == degree:
                return off
            off += n
        raise KeyError(f"degree {degree} is not in the support")

    def shifted(self, k: int) -> "GradedSpace":
        """The space with every degree moved by ``k``; ``k = -1`` is the desuspension."""
        return GradedSpace([(deg + k, n) for deg, n in self.support])


@lru_cache(maxsize=None)
def _degrees(support) -> tuple[int, ...]:
    out = []
    for deg, n in support:
        out.extend([deg] * n)
    return tuple(out)


def word_degree(space: GradedSpace, flat: int, k: int) -> int:
    """Total degree of the ``k``-letter basis word with flat index ``flat``."""
    degs, N = space.degrees, space.dim
    total = 0
    for _ in range(k):
        flat, x = divmod(flat, N)
        total += degs[x]
    return total


class GradedMap:
    """A homogeneous map ``C -> C^{(x)k}`` of degree ``shift``."""

    __slots__ = ("space", "arity", "shift", "map")

    def __init__(self, space: GradedSpace, arity: int, shift: int, map: LinearMap, *, validate: bool = True):
        N = space.dim
        if (map.dom_dim, map.cod_dim) != (N, N**arity):
            raise DimensionError(f"map must be {N} -> {N ** arity}")
        self.space = space
        self.arity = arity
        self.shift = shift
        self.map = map
        if validate:
            self.check_degree()

    def check_degree(self):
        degs = self.space.degrees
        for j, col in enumerate(self.map.matrix.columns()):
            for r in col:
                if word_degree(self.space, r, self.arity) != degs[j] + self.shift:
                    raise DegreeError(
                        f"entry {j} -> {r} breaks degree {self.shift} (arity {self.arity})")

    @classmethod
    def zero(cls, space: GradedSpace, arity: int, shift: int) -> "GradedMap":
        return cls(space, arity, shift, zero_map(space.dim, space.dim**arity), validate=False)

    @classmethod
    def from_blocks(cls, space: GradedSpace, arity: int, shift: int, blocks) -> "GradedMap":
        """``blocks``: pairs ``(degree, triplets)`` with ``from`` local to the degree block
        and ``to`` a flat index into ``C^{(x)arity}``."""
        trip = []
        for deg, triplets in blocks:
            off = space.offset(deg)
            for a, b, v in triplets:
                trip.append((off + a, b, v))
        return cls(space, arity, shift, LinearMap.from_triplets(space.dim, space.dim**arity, trip))

    def blocks(self) -> list[tuple[int, list]]:
        out = []
        for deg, n in self.space.support:
            off = self.space.offset(deg)
            trip = []
            for j in range(off, off + n):
                for r, v in sorted(self.map.image(j).items()):
                    trip.append((j - off, r, v))
            if trip:
                out.append((deg, trip))
        return out

    def __add__(self, other: "GradedMap") -> "GradedMap":
        self._same(other)
        return GradedMap(self.space, self.arity, self.shift, self.map + other.map, validate=False)

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        self._same(other)
        return GradedMap(self.space, self.arity, self.shift, self.map - other.map, validate=False)

    def __neg__(self) -> "GradedMap":
        return GradedMap(self.space, self.arity, self.shift, -self.map, validate=False)

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.space, self.arity, self.shift, self.map.scale(c), validate=False)

    def _same(self, other: "GradedMap"):
        if (other.space, other.arity, other.shift) != (self.space, self.arity, self.shift):
            raise ValueError("graded maps differ in space, arity or degree")

    def is_zero(self) -> bool:
        return self.map.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.space, self.arity, self.shift) == (other.space, other.arity, other.shift) and self.map == other.map

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GradedMap(arity={self.arity}, shift={self.shift}, dim={self.space.dim})"


def pad_graded(f: GradedMap, r: int, t: int) -> LinearMap:
    """``id^r (x) f (x) id^t`` with the Koszul sign ``(-1)^{|f| (|x_1| + .. + |x_r|)}``."""
    space = f.space
    if f.shift % 2 == 0 or r == 0:
        return pad(f.map, r, t, space.dim)
    return pad(f.map, r, t, space.dim, lambda x: -1 if word_degree(space, x, r) % 2 else 1)


def random_graded_map(space: GradedSpace, arity: int, shift: int, rng, density: float = 0.5,
                      values=(-2, -1, 1, 2)) -> GradedMap:
    """Random homogeneous map with small integer entries."""
    degs = space.degrees
    N = space.dim
    by_degree: dict[int, list[int]] = {}
    for r in range(N**arity):
        by_degree.setdefault(word_degree(space, r, arity), []).append(r)
    trip = []
    for j in range(N):
        for r in by_degree.get(degs[j] + shift, ()):
            if rng.random() < density:
                trip.append((j, r, rng.choice(values)))
    return GradedMap(space, arity, shift, LinearMap.from_triplets(N, N**arity, trip), validate=False)
