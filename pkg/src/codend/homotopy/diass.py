"""The free diassociative algebra ``Diass(V) = TV (x) V (x) TV`` truncated at word length ``L``.

A basis word is ``(left, marked, right)`` with ``left``/``right`` tuples of basis
indices of ``V``; an element is a dict from words to rationals.  ``u -| v``
keeps the marker of ``u`` and ``u |- v`` keeps the marker of ``v``.

A family ``Delta_{k,[r]}`` of degree -1 maps gives ``Delta_k = sum_r Pi_r o Delta_{k,[r]}``,
extended to a derivation by the signed Leibniz rule.  For a Dend-infinity[1]
structure, ``D o D`` on ``1 (x) v (x) 1`` projected to words of length ``n``
with the marker at ``theta`` is the identity ``(n, theta)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..linalg import tensor_index
from .ainf import TRUNCATED, IdentityReport
from .dendinf import DendInfCoalgebra, dendinf_identity
from .graded import GradedSpace

__all__ = [
    "Word",
    "TruncationOverflow",
    "Diass",
    "check_D_squared",
    "DSquaredReport",
]

Word = tuple  # (left: tuple[int, ...], marked: int, right: tuple[int, ...])


class TruncationOverflow(RuntimeError):
    """A product or derivation image exceeded the word-length truncation inside a checked computation."""


def _length(w: Word) -> int:
    return len(w[0]) + 1 + len(w[2])


def _add(acc: dict, w: Word, c):
    x = acc.get(w, 0) + c
    if x:
        acc[w] = x
    else:
        acc.pop(w, None)


@dataclass
class Diass:
    space: GradedSpace
    L: int
    overflow: bool = field(default=False)

    def _keep(self, w: Word) -> bool:
        if _length(w) > self.L:
            self.overflow = True
            return False
        return True

    @staticmethod
    def generator(v: int) -> dict:
        return {((), v, ()): Fraction(1)}

    def left(self, u: dict, v: dict) -> dict:
        """``u -| v``."""
        out: dict = {}
        for (a, x, b), c in u.items():
            for (p, y, q), e in v.items():
                w = (a, x, b + p + (y,) + q)
                if self._keep(w):
                    _add(out, w, c * e)
        return out

    def right(self, u: dict, v: dict) -> dict:
        """``u |- v``."""
        out: dict = {}
        for (a, x, b), c in u.items():
            for (p, y, q), e in v.items():
                w = (a + (x,) + b + p, y, q)
                if self._keep(w):
                    _add(out, w, c * e)
        return out

    @staticmethod
    def pi(i: int, letters: Iterable[int]) -> Word:
        """``Pi_i(v_1 .. v_k) = v_1 .. v_{i-1} (x) v_i (x) v_{i+1} .. v_k``."""
        letters = tuple(letters)
        if not 1 <= i <= len(letters):
            raise ValueError(f"Pi_{i} needs at least {i} letters")
        return (letters[: i - 1], letters[i - 1], letters[i:])

    def words_of(self, vec: dict, k: int) -> list[tuple[tuple[int, ...], Fraction]]:
        N = self.space.dim
        return [(tensor_index(r, N, k), c) for r, c in sorted(vec.items())]

    def derivation(self, V: DendInfCoalgebra, k: int, x: dict) -> dict:
        """``tilde Delta_k`` applied to ``x``."""
        degs = self.space.degrees
        out: dict = {}
        images = {}
        for (a, m, b), c in x.items():
            letters = a + (m,) + b
            pos = len(a)
            sign_deg = 0
            for i, v in enumerate(letters):
                sign = -1 if sign_deg % 2 else 1
                sign_deg += degs[v]
                key = (v, i == pos)
                if key not in images:
                    images[key] = self._image(V, k, v, marked=i == pos)
                for (word, new_pos), e in images[key]:
                    before, after = letters[:i], letters[i + 1:]
                    full = before + word + after
                    if i == pos:
                        mp = i + new_pos
                    elif i < pos:
                        mp = pos + k - 1
                    else:
                        mp = pos
                    w = (full[:mp], full[mp], full[mp + 1:])
                    if self._keep(w):
                        _add(out, w, sign * c * e)
        return out

    def _image(self, V: DendInfCoalgebra, k: int, v: int, *, marked: bool):
        """``(letters, marker offset)`` terms of ``Delta_k(v)``; unmarked letters take the plain sum."""
        terms: dict = {}
        for r in range(1, k + 1):
            col = V.op(k, r).map.image(v)
            for word, c in self.words_of(col, k):
                key = (word, r - 1 if marked else 0)
                terms[key] = terms.get(key, 0) + c
        return [(key, c) for key, c in sorted(terms.items()) if c]


@dataclass
class DSquaredReport:
    identities: IdentityReport
    lemma_ok: bool
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.identities.ok


def check_D_squared(V: DendInfCoalgebra, L: int, n_max: int | None = None) -> DSquaredReport:
    """``D o D = 0`` on every generator, degree by degree, and agreement with the Lemma sums.

    Component ``n`` needs ``Delta_s`` and ``Delta_l`` with ``s + l = n + 1``; it is
    checked when ``n <= min(L, max_arity)`` and reported as truncated otherwise.
    """
    if not V.shifted:
        raise ValueError("D o D is defined for Dend-infinity[1] structures")
    n_max = L if n_max is None else n_max
    N = V.space.dim
    alg = Diass(V.space, L)
    bound = min(L, V.max_arity)
    # (D o D)(v) split by output length n = s + l - 1
    comps: dict[int, dict[int, dict]] = {}
    for v in range(N):
        g = Diass.generator(v)
        first = {l: alg.derivation(V, l, g) for l in range(1, bound + 1)}
        for n in range(1, bound + 1):
            acc: dict = {}
            for l in range(1, n + 1):
                s = n + 1 - l
                for w, c in alg.derivation(V, s, first[l]).items():
                    _add(acc, w, c)
            comps.setdefault(n, {})[v] = acc
    if alg.overflow:
        raise TruncationOverflow("word length exceeded L inside a checked component")
    report = IdentityReport()
    mismatches = []
    for n in range(1, n_max + 1):
        for theta in range(1, n + 1):
            if n > bound:
                report.add(n, theta, TRUNCATED)
                continue
            expected = dendinf_identity(V, n, theta)
            zero = True
            for v in range(N):
                got = {}
                for (a, m, b), c in comps[n][v].items():
                    if len(a) == theta - 1:
                        flat = 0
                        for x in a + (m,) + b:
                            flat = flat * N + x
                        got[flat] = c
                if got:
                    zero = False
                if got != dict(expected.image(v)):
                    mismatches.append((n, theta, v))
            report.add(n, theta, "pass" if zero else "fail")
    return DSquaredReport(report, not mismatches, mismatches)
