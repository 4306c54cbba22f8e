"""Combinatorial label maps between the finite sets ``C_n = {[1], ..., [n]}``.

Labels are 1-based ints.  A label sum (an element of ``K[C_n]``) is a dict
``{label: coefficient}``.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["r0", "ri", "full_sum", "check_label"]


def check_label(r: int, n: int):
    if not 1 <= r <= n:
        raise ValueError(f"label [{r}] is not in C_{n}")


def _check(m: int, n: int, i: int, r: int):
    if m < 1 or n < 1:
        raise ValueError("arities must be positive")
    if not 1 <= i <= m:
        raise ValueError(f"position {i} out of range 1..{m}")
    check_label(r, m + n - 1)


@lru_cache(maxsize=None)
def r0(m: int, n: int, i: int, r: int) -> int:
    """``R_0(m; 1,..,n,..,1)[r]`` with ``n`` in position ``i``: a label of ``C_m``."""
    _check(m, n, i, r)
    if r <= i - 1:
        return r
    if r <= i + n - 1:
        return i
    return r - n + 1


def full_sum(n: int) -> dict[int, int]:
    return {k: 1 for k in range(1, n + 1)}


@lru_cache(maxsize=None)
def _ri(m: int, n: int, i: int, r: int) -> tuple:
    _check(m, n, i, r)
    if i <= r <= i + n - 1:
        return ((r - (i - 1), 1),)
    return tuple((k, 1) for k in range(1, n + 1))


def ri(m: int, n: int, i: int, r: int) -> dict[int, int]:
    """``R_i(m; 1,..,n,..,1)[r]``: a label sum in ``K[C_n]``."""
    return dict(_ri(m, n, i, r))
