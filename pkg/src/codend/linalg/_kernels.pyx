# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled elimination kernels over 64-bit integers.

Same contract as ``_kernels_py``.  Entries are kept within +-2**62 so that a
two-term combination fits in a 128-bit intermediate; anything larger raises
OverflowError and the caller retries with the arbitrary-precision kernels.
"""

from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.utility cimport pair

BACKEND = "compiled"

cdef extern from *:
    """
    #include <stdint.h>
    #define CODEND_LIMIT ((int64_t)1 << 62)
    static inline int codend_combo(int64_t a, int64_t x, int64_t b, int64_t y, int64_t *out) {
        __int128 r = (__int128)a * x - (__int128)b * y;
        if (r >= (__int128)CODEND_LIMIT || r <= -(__int128)CODEND_LIMIT) return 1;
        *out = (int64_t)r;
        return 0;
    }
    static inline int64_t codend_gcd(int64_t a, int64_t b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { int64_t t = a % b; a = b; b = t; }
        return a;
    }
    """
    int codend_combo(int64_t a, int64_t x, int64_t b, int64_t y, int64_t *out) nogil
    int64_t codend_gcd(int64_t a, int64_t b) nogil
    int64_t CODEND_LIMIT

ctypedef pair[int, int64_t] entry_t
ctypedef vector[entry_t] srow_t


cdef inline int64_t _checked(object v) except? -1:
    if v >= CODEND_LIMIT or v <= -CODEND_LIMIT:
        raise OverflowError("entry exceeds 64-bit kernel range")
    return <int64_t>v


# ---------------------------------------------------------------- sparse

cdef void _primitive_s(srow_t &row) noexcept nogil:
    cdef int64_t g = 0
    cdef size_t k
    for k in range(row.size()):
        g = codend_gcd(g, row[k].second)
        if g == 1:
            break
    if row[0].second < 0:
        g = -g
    if g != 1:
        for k in range(row.size()):
            row[k].second = row[k].second // g


cdef int _eliminate_s(const srow_t &row, const srow_t &piv, int c, srow_t &out) noexcept nogil:
    """out = a*row - b*piv eliminating column c. Returns 1 on overflow."""
    cdef int64_t a = 0, b = 0, g, x
    cdef size_t i = 0, j = 0
    for i in range(piv.size()):
        if piv[i].first == c:
            a = piv[i].second
            break
    for i in range(row.size()):
        if row[i].first == c:
            b = row[i].second
            break
    g = codend_gcd(a, b)
    a = a // g
    b = b // g
    out.clear()
    i = 0
    j = 0
    while i < row.size() or j < piv.size():
        if j == piv.size() or (i < row.size() and row[i].first < piv[j].first):
            if codend_combo(a, row[i].second, 0, 0, &x):
                return 1
            out.push_back(entry_t(row[i].first, x))
            i += 1
        elif i == row.size() or piv[j].first < row[i].first:
            if codend_combo(0, 0, b, piv[j].second, &x):
                return 1
            out.push_back(entry_t(piv[j].first, x))
            j += 1
        else:
            if codend_combo(a, row[i].second, b, piv[j].second, &x):
                return 1
            if x != 0:
                out.push_back(entry_t(row[i].first, x))
            i += 1
            j += 1
    return 0


def echelon_sparse(list rows, int ncols, bint reduce=False):
    cdef vector[srow_t] piv_rows
    cdef vector[int] piv_of = vector[int](ncols, -1)
    cdef srow_t row, tmp
    cdef int c, p, k
    cdef size_t e
    cdef object key
    for pyrow in rows:
        row.clear()
        for key in sorted(pyrow):
            v = pyrow[key]
            if v:
                row.push_back(entry_t(<int>key, _checked(v)))
        while row.size() > 0:
            c = row[0].first
            p = piv_of[c]
            if p < 0:
                _primitive_s(row)
                piv_of[c] = <int>piv_rows.size()
                piv_rows.push_back(row)
                break
            if _eliminate_s(row, piv_rows[p], c, tmp):
                raise OverflowError("64-bit kernel overflow")
            row.swap(tmp)
    if reduce:
        for c in range(ncols - 1, -1, -1):
            p = piv_of[c]
            if p < 0:
                continue
            e = 1
            while e < piv_rows[p].size():
                k = piv_rows[p][e].first
                if piv_of[k] >= 0:
                    if _eliminate_s(piv_rows[p], piv_rows[piv_of[k]], k, tmp):
                        raise OverflowError("64-bit kernel overflow")
                    piv_rows[p].swap(tmp)
                    e = 1
                else:
                    e += 1
            _primitive_s(piv_rows[p])
    out = []
    for c in range(ncols):
        p = piv_of[c]
        if p >= 0:
            out.append((c, {piv_rows[p][e].first: piv_rows[p][e].second
                            for e in range(piv_rows[p].size())}))
    return out


# ----------------------------------------------------------------- dense

cdef void _primitive_d(int64_t *row, int ncols, int lead) noexcept nogil:
    cdef int64_t g = 0
    cdef int k
    for k in range(lead, ncols):
        if row[k]:
            g = codend_gcd(g, row[k])
            if g == 1:
                break
    if row[lead] < 0:
        g = -g
    if g != 1:
        for k in range(lead, ncols):
            row[k] = row[k] // g


cdef int _eliminate_d(int64_t *row, const int64_t *piv, int ncols, int c) noexcept nogil:
    cdef int64_t a = piv[c], b = row[c], g, x
    cdef int k
    g = codend_gcd(a, b)
    a = a // g
    b = b // g
    for k in range(ncols):
        if codend_combo(a, row[k], b, piv[k], &x):
            return 1
        row[k] = x
    return 0


def echelon_dense(list rows, int ncols, bint reduce=False):
    cdef int nrows = len(rows)
    cdef vector[int64_t] buf = vector[int64_t](<size_t>max(nrows, 1) * max(ncols, 1), 0)
    cdef vector[int] piv_of = vector[int](ncols, -1)
    cdef int i, j, c, p, c2
    cdef int64_t *row
    for i in range(nrows):
        pyrow = rows[i]
        for j in range(ncols):
            buf[<size_t>i * ncols + j] = _checked(pyrow[j])
    for i in range(nrows):
        row = &buf[<size_t>i * ncols]
        c = 0
        while True:
            while c < ncols and row[c] == 0:
                c += 1
            if c == ncols:
                break
            p = piv_of[c]
            if p < 0:
                _primitive_d(row, ncols, c)
                piv_of[c] = i
                break
            if _eliminate_d(row, &buf[<size_t>p * ncols], ncols, c):
                raise OverflowError("64-bit kernel overflow")
    if reduce:
        for c in range(ncols - 1, -1, -1):
            p = piv_of[c]
            if p < 0:
                continue
            row = &buf[<size_t>p * ncols]
            for c2 in range(c + 1, ncols):
                if piv_of[c2] >= 0 and row[c2] != 0:
                    if _eliminate_d(row, &buf[<size_t>piv_of[c2] * ncols], ncols, c2):
                        raise OverflowError("64-bit kernel overflow")
            _primitive_d(row, ncols, c)
    out = []
    for c in range(ncols):
        p = piv_of[c]
        if p >= 0:
            out.append((c, [buf[<size_t>p * ncols + j] for j in range(ncols)]))
    return out
