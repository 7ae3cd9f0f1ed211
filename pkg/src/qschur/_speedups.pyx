# cython: language_level=3
"""Compiled twin of qschur._kernels_py (same algorithm, same results).

Coefficients stay Python ints (they must: elimination grows them past
machine words), so the gain over the pure kernel is interpreter overhead
only.  benchmarks/bench_kernels.py measures the difference.
"""

from math import gcd

BACKEND = "cython"


cdef dict _reduce_content(dict row):
    cdef object g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def rank_of_int_rows(rows):
    """Rank over Q of the span of integer rows (iterable of col->int dicts)."""
    cdef dict pivots = {}
    cdef Py_ssize_t rank = 0
    cdef dict row, piv, new
    cdef object a, b, c, k, v, w
    for r in sorted(rows, key=len):
        row = dict(r)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                row = _reduce_content(row)
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                pivots[c] = row
                rank += 1
                break
            a = piv[c]
            b = row.pop(c)
            new = {k: v * a for k, v in row.items()}
            for k, v in piv.items():
                if k == c:
                    continue
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _reduce_content(new)
    return rank
