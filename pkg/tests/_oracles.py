"""Independent dense reference computations used by several test modules."""

from fractions import Fraction


def dense_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def dense_cohomology(apply, basis_element, dim_of, max_degree):
    """``dim H^n`` from dense coboundary matrices built column by column."""
    ranks = []
    for n in range(1, max_degree + 1):
        cols = []
        for j in range(dim_of(n)):
            img = apply(basis_element(n, j)).to_vector()
            cols.append(img)
        rows_n = max((max(c) for c in cols if c), default=-1) + 1
        dense = [[c.get(i, 0) for c in cols] for i in range(rows_n)] or [[0] * len(cols)]
        ranks.append(dense_rank(dense))
    return [dim_of(n) - ranks[n - 1] - (ranks[n - 2] if n > 1 else 0) for n in range(1, max_degree + 1)]
