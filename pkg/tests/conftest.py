"""Shared test helpers: independent dense oracles and random generators.

The dense rank/nullity oracle here is deliberately separate from the
package's sparse elimination kernel, so the two sides of every rank
comparison are computed by different code paths.
"""

from __future__ import annotations

import random
from fractions import Fraction

from qschur.superspace import SparseMat, SuperSpace


def dense_rank(rows, ncols: int) -> int:
    """Plain Gaussian elimination over Fraction, dense, no pivot tricks."""
    mat = []
    for row in rows:
        dense = [Fraction(0)] * ncols
        for c, v in row.items():
            dense[c] = Fraction(v)
        mat.append(dense)
    rank = 0
    col = 0
    nrows = len(mat)
    while rank < nrows and col < ncols:
        piv = next((r for r in range(rank, nrows) if mat[r][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [v / pv for v in mat[rank]]
        for r in range(nrows):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def dense_nullity(rows, ncols: int) -> int:
    return ncols - dense_rank(rows, ncols)


def random_homogeneous(space: SuperSpace, parity: int,
                       rng: random.Random, density: float = 0.5) -> SparseMat:
    """Random parity-homogeneous operator with small integer entries."""
    entries = {}
    for r in range(space.dim):
        for c in range(space.dim):
            if (space.parities[r] + space.parities[c]) % 2 != parity:
                continue
            if rng.random() < density:
                v = rng.randint(-3, 3)
                if v:
                    entries[(r, c)] = v
    return SparseMat(space, space, entries)


def random_space(rng: random.Random, dim: int, weight_len: int = 2) -> SuperSpace:
    labels = tuple(f"b{i}" for i in range(dim))
    parities = tuple(rng.randint(0, 1) for _ in range(dim))
    weights = tuple(tuple(rng.randint(-1, 1) for _ in range(weight_len))
                    for _ in range(dim))
    return SuperSpace(labels, parities, weights)
