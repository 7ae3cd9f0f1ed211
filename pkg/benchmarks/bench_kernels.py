#!/usr/bin/env python3
"""Benchmark the pure-Python vs compiled elimination kernel.

Workloads:
  * synthetic sparse integer systems (seeded),
  * the real commutant constraint rows of the heaviest acceptance cells
    (classical osp and quantum gl at r = 3).

The compiled kernel keeps Python big-int arithmetic, so the expected win
is interpreter overhead only.  Run after `python setup.py build_ext
--inplace`; if the compiled kernel is absent only the pure timing prints.
"""

from __future__ import annotations

import random
import statistics
import time

from qschur import _kernels_py

try:
    from qschur import _speedups
except ImportError:
    _speedups = None

from qschur.centralizer import assemble_commutant_rows, _glq_generator_mats
from qschur.osp import leibniz_tensor, natural_space, osp_basis, sigma
from qschur.rootdata import distinguished
from qschur.superspace import _int_row, kron_chain
from fractions import Fraction


def synthetic_rows(seed: int, ncols: int, nrows: int, per_row: int):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        row = {}
        for _ in range(per_row):
            row[rng.randrange(ncols)] = rng.randint(-9, 9) or 1
        rows.append(row)
    return rows


def osp_commutant_rows(m: int, n: int, r: int):
    gens = [leibniz_tensor(X, r) for X in osp_basis(m, n)]
    gens.append(kron_chain([sigma(m, n)] * r))
    dim = natural_space(m, n).dim ** r
    _, rows = assemble_commutant_rows(gens, dim)
    return [_int_row(row) for row in rows]


def glq_commutant_rows(m: int, n: int, r: int):
    datum = distinguished("gl", m, n)
    gens = [g.specialize(Fraction(7, 5)) for g in _glq_generator_mats(datum, r)]
    dim = len(datum.module_weights()) ** r
    _, rows = assemble_commutant_rows(gens, dim)
    return [_int_row(row) for row in rows]


def timed(fn, rows, repeats=3):
    best = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(rows)
        best.append(time.perf_counter() - t0)
    return result, min(best), statistics.mean(best)


def bench(name, rows):
    print(f"{name}: {len(rows)} rows, "
          f"{sum(len(r) for r in rows)} entries")
    r_py, t_py, _ = timed(_kernels_py.rank_of_int_rows, rows)
    print(f"  python kernel: rank {r_py:6d}   best {t_py * 1000:9.1f} ms")
    if _speedups is not None:
        r_cy, t_cy, _ = timed(_speedups.rank_of_int_rows, rows)
        assert r_cy == r_py, "backends disagree"
        print(f"  cython kernel: rank {r_cy:6d}   best {t_cy * 1000:9.1f} ms "
              f"  speedup x{t_py / t_cy:.2f}")
    else:
        print("  cython kernel: not built (python setup.py build_ext --inplace)")
    print()


def main():
    # random sparse systems fill in densely under elimination; keep them
    # small enough that big-int growth stays representative, not punitive
    bench("synthetic 300x450, ~4 nnz/row", synthetic_rows(1, 300, 450, 4))
    bench("synthetic 150x600, ~6 nnz/row", synthetic_rows(2, 150, 600, 6))
    bench("osp(3|4) commutant r=3 (343^2 unknowns)", osp_commutant_rows(3, 2, 3))
    bench("osp(4|2) commutant r=3 (216^2 unknowns)", osp_commutant_rows(4, 1, 3))
    bench("quantum gl(2|1) commutant r=3 at q=7/5", glq_commutant_rows(2, 1, 3))


if __name__ == "__main__":
    main()
