"""Compare the compiled elimination kernels with the pure-Python ones.

Coboundary matrices from the corpus and small random integer matrices are
reduced by both backends; the results must agree exactly.  Random matrices
of moderate size overflow the 64-bit kernel and are reported as such (the
dispatcher then falls back to Python integers).

    python benchmarks/bench_kernels.py [--seed 0] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit
from math import lcm

from codend.linalg import _kernels_py

try:
    from codend.linalg import _kernels as compiled
except ImportError:
    compiled = None


def dense_case(rng: random.Random, n: int, density: float, bound: int = 5):
    rows = [[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
    return "echelon_dense", rows, n


def sparse_case(rng: random.Random, n: int, density: float, bound: int = 5):
    rows = []
    for _ in range(n):
        row = {j: rng.choice([v for v in range(-bound, bound + 1) if v]) for j in range(n) if rng.random() < density}
        rows.append(row)
    return "echelon_sparse", rows, n


def coboundary_case(name: str, degree: int):
    from codend.corpus import bicomodule_corpus
    from codend.dendcoalg import DendCoboundary

    M = DendCoboundary(bicomodule_corpus()[name]).matrix(degree)
    rows = []
    for row in M.row_dicts():
        if row:
            scale = lcm(*(v.denominator for v in row.values()))
            rows.append({c: int(v * scale) for c, v in row.items()})
    return "echelon_sparse", rows, M.cols


def _copy(rows):
    return [dict(r) if isinstance(r, dict) else list(r) for r in rows]


def _normal(result):
    return [(p, dict(r) if isinstance(r, dict) else list(r)) for p, r in result]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if compiled is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
        return 1
    rng = random.Random(args.seed)
    cases = [
        ("dense 8x8", dense_case(rng, 8, 0.8)),
        ("dense 40x40", dense_case(rng, 40, 0.8)),
        ("sparse 200x200", sparse_case(rng, 200, 0.03)),
        ("split-div-3 deg 3", coboundary_case("split-divided-3", 3)),
        ("split-div-3 deg 4", coboundary_case("split-divided-3", 4)),
        ("rbo-div-3 deg 4", coboundary_case("rbo-divided-3", 4)),
    ]
    print(f"{'case':<20} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}  rank")
    for name, (fn, rows, ncols) in cases:
        py_fn, c_fn = getattr(_kernels_py, fn), getattr(compiled, fn)
        expected = py_fn(_copy(rows), ncols, True)
        t_py = min(timeit.repeat(lambda: py_fn(_copy(rows), ncols, True), number=1, repeat=args.repeat))
        try:
            got = c_fn(_copy(rows), ncols, True)
        except OverflowError:
            # the dispatcher falls back to the Python kernel here
            print(f"{name:<20} {t_py:>11.4f} {'overflow':>13} {'-':>8}  {len(expected)}")
            continue
        if _normal(got) != _normal(expected):
            print(f"{name}: backends disagree")
            return 1
        t_c = min(timeit.repeat(lambda: c_fn(_copy(rows), ncols, True), number=1, repeat=args.repeat))
        print(f"{name:<20} {t_py:>11.4f} {t_c:>13.4f} {t_py / t_c:>7.1f}x  {len(expected)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
