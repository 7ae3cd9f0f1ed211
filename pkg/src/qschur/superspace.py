"""Z2-graded spaces and exact sparse matrices.

A SuperSpace is an ordered basis; each vector carries a parity bit and an
integer weight vector.  A SparseMat maps a source space to a target space
and stores only nonzero entries; scalars may be RatFunc, Fraction or int
(the three interoperate).  Tensor products of operators use the graded
(Koszul) rule

    (A (x) B)(v (x) w) = (-1)^{[B][v]} Av (x) Bw,

applied per parity-homogeneous entry of B, so the odd part of B picks up
signs against odd source vectors.  Indexing of V (x) W is row-major:
(a, c) -> a*dim(W) + c, and operators vectorize the same way.

Rank and nullity are exact: entries are specialised at rational points
(RatFunc) or taken as-is (Fraction/int), rows are cleared to integers and
handed to the elimination kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
import random

from .kernels import rank_of_int_rows
from .scalar import RatFunc

__all__ = [
    "SuperSpace", "SparseMat", "unit_space", "tau", "graded_kron",
    "rank_at", "ranks_at", "nullspace_dim_at", "vectorize",
    "DEFAULT_POINTS", "fresh_points", "PointDisagreement",
]

#: Default specialisation points: nonzero rationals away from 0, +-1 and
#: small roots of unity, so generic ranks survive specialisation.
DEFAULT_POINTS = (Fraction(7, 5), Fraction(13, 9), Fraction(23, 17))


class PointDisagreement(ArithmeticError):
    """Specialised ranks differ between points (non-generic collision)."""


def fresh_points(seed: int, count: int = 3, avoid=()) -> tuple[Fraction, ...]:
    """Deterministic replacement points p/r with small odd primes."""
    rng = random.Random(seed)
    primes = [5, 7, 9, 11, 13, 17, 19, 23, 29, 31]
    out = []
    banned = set(avoid) | {Fraction(0), Fraction(1), Fraction(-1)}
    while len(out) < count:
        a, b = rng.choice(primes), rng.choice(primes)
        pt = Fraction(a + b, b)
        if pt not in banned:
            out.append(pt)
            banned.add(pt)
    return tuple(out)


@dataclass(frozen=True)
class SuperSpace:
    """Finite ordered homogeneous basis with parities and weights."""

    labels: tuple[str, ...]
    parities: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        if not (len(self.labels) == len(self.parities) == len(self.weights)):
            raise ValueError("labels, parities and weights must align")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def tensor(self, other: "SuperSpace") -> "SuperSpace":
        labels = tuple(f"{a}.{b}" for a in self.labels for b in other.labels)
        parities = tuple((p + r) % 2 for p in self.parities for r in other.parities)
        weights = tuple(tuple(x + y for x, y in zip(u, v))
                        for u in self.weights for v in other.weights)
        return SuperSpace(labels, parities, weights)

    def dual(self) -> "SuperSpace":
        labels = tuple(f"{a}*" for a in self.labels)
        weights = tuple(tuple(-x for x in w) for w in self.weights)
        name = f"{self.name}*" if self.name else ""
        return SuperSpace(labels, self.parities, weights, name)

    def compatible(self, other: "SuperSpace") -> bool:
        return self.parities == other.parities

    def tensor_power(self, r: int) -> "SuperSpace":
        out = self
        for _ in range(r - 1):
            out = out.tensor(self)
        return out

    def describe(self) -> str:
        return self.name or f"dim {self.dim} (parities {''.join(map(str, self.parities))})"


def unit_space(weight_len: int = 0) -> SuperSpace:
    """The 1-dimensional even unit object."""
    return SuperSpace(("1",), (0,), ((0,) * weight_len,), name="unit")


class SparseMat:
    """Sparse exact matrix between SuperSpaces; entries (row, col) -> scalar."""

    __slots__ = ("src", "dst", "entries")

    def __init__(self, src: SuperSpace, dst: SuperSpace, entries=None):
        self.src = src
        self.dst = dst
        self.entries = {}
        if entries:
            for (r, c), v in (entries.items() if isinstance(entries, dict) else entries):
                if not (0 <= r < dst.dim and 0 <= c < src.dim):
                    raise IndexError(f"entry ({r},{c}) out of bounds")
                if v:
                    self.entries[(r, c)] = v

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, space: SuperSpace) -> "SparseMat":
        return cls(space, space, {(i, i): 1 for i in range(space.dim)})

    @classmethod
    def zero(cls, src: SuperSpace, dst: SuperSpace) -> "SparseMat":
        return cls(src, dst)

    # -- ring structure ---------------------------------------------------

    @property
    def rows(self) -> int:
        return self.dst.dim

    @property
    def cols(self) -> int:
        return self.src.dim

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        keys = self.entries.keys() | other.entries.keys()
        return all(self.entries.get(k, 0) == other.entries.get(k, 0) for k in keys)

    def __add__(self, other: "SparseMat") -> "SparseMat":
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        res = SparseMat(self.src, self.dst)
        res.entries = out
        return res

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + (-other)

    def __neg__(self) -> "SparseMat":
        res = SparseMat(self.src, self.dst)
        res.entries = {k: -v for k, v in self.entries.items()}
        return res

    def scale(self, s) -> "SparseMat":
        res = SparseMat(self.src, self.dst)
        if s:
            res.entries = {k: s * v for k, v in self.entries.items()}
        return res

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        """Composition self o other (other acts first)."""
        if other.dst.dim != self.src.dim:
            raise ValueError(
                f"dimension mismatch: {self.cols} != {other.rows} in product")
        rows_of_other = {}
        for (k, j), v in other.entries.items():
            rows_of_other.setdefault(k, []).append((j, v))
        out = {}
        for (i, k), a in self.entries.items():
            rw = rows_of_other.get(k)
            if not rw:
                continue
            for j, b in rw:
                key = (i, j)
                w = out.get(key, 0) + a * b
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        res = SparseMat(other.src, self.dst)
        res.entries = out
        return res

    def __pow__(self, k: int) -> "SparseMat":
        if self.src.dim != self.dst.dim:
            raise ValueError("power of a non-square matrix")
        out = SparseMat.identity(self.src)
        for _ in range(k):
            out = self @ out
        return out

    def transpose(self) -> "SparseMat":
        res = SparseMat(self.dst, self.src)
        res.entries = {(c, r): v for (r, c), v in self.entries.items()}
        return res

    def map_values(self, fn) -> "SparseMat":
        res = SparseMat(self.src, self.dst)
        for k, v in self.entries.items():
            w = fn(v)
            if w:
                res.entries[k] = w
        return res

    def specialize(self, point: Fraction) -> "SparseMat":
        """Evaluate RatFunc entries at q = point (exact; raises on poles)."""
        return self.map_values(
            lambda v: v.specialize(point) if isinstance(v, RatFunc) else v)

    # -- graded operations ------------------------------------------------

    def supertrace(self):
        if self.src.dim != self.dst.dim:
            raise ValueError("supertrace of a non-square matrix")
        total = 0
        par = self.dst.parities
        for a in range(self.dst.dim):
            v = self.entries.get((a, a))
            if v:
                total = total + (-v if par[a] else v)
        return total

    def graded_kron(self, other: "SparseMat") -> "SparseMat":
        return graded_kron(self, other)

    def scalar_value(self):
        """The single entry of a 1x1 matrix (0 if empty)."""
        if self.rows != 1 or self.cols != 1:
            raise ValueError("not a scalar (1x1) matrix")
        return self.entries.get((0, 0), 0)

    # -- inverse (small matrices; exact field elimination) ----------------

    def inverse(self) -> "SparseMat":
        n = self.src.dim
        if n != self.dst.dim:
            raise ValueError("inverse of a non-square matrix")
        aug = [[self.entries.get((r, c), 0) for c in range(n)]
               + [1 if c == r else 0 for c in range(n)] for r in range(n)]
        aug = [[_as_field(v) for v in row] for row in aug]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = _field_inv(aug[col][col])
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        res = SparseMat(self.dst, self.src)
        for r in range(n):
            for c in range(n):
                v = aug[r][n + c]
                if v:
                    res.entries[(r, c)] = v
        return res

    # -- dump format --------------------------------------------------------

    def dump(self) -> str:
        """Sparse triplet text: header naming spaces, then 'row col value'."""
        lines = [f"# rows={self.rows} cols={self.cols} "
                 f"dst={self.dst.describe()} src={self.src.describe()}"]
        for (r, c) in sorted(self.entries):
            lines.append(f"{r} {c} {self.entries[(r, c)]}")
        return "\n".join(lines)

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, nnz={len(self.entries)})"


def _as_field(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise TypeError(f"unsupported scalar {v!r}")


def _field_inv(v):
    if isinstance(v, RatFunc):
        return v.inverse()
    return 1 / v


def graded_kron(a: SparseMat, b: SparseMat) -> SparseMat:
    """Graded tensor product of operators.

    For parity-even b this is the ordinary Kronecker product; the odd part
    of b contributes (-1)^{[b-entry][v]} against odd source vectors v of a.
    """
    src = a.src.tensor(b.src)
    dst = a.dst.tensor(b.dst)
    bsd, bdd = b.src.dim, b.dst.dim
    pa_src = a.src.parities
    pb_src, pb_dst = b.src.parities, b.dst.parities
    out = {}
    for (i, f), va in a.entries.items():
        f_odd = pa_src[f]
        for (c, g), vb in b.entries.items():
            v = va * vb
            if f_odd and (pb_dst[c] + pb_src[g]) % 2:
                v = -v
            out[(i * bdd + c, f * bsd + g)] = v
    res = SparseMat(src, dst)
    res.entries = out
    return res


def kron_chain(mats) -> SparseMat:
    """Left-associated graded Kronecker product of a sequence."""
    mats = list(mats)
    out = mats[0]
    for m in mats[1:]:
        out = graded_kron(out, m)
    return out


def tau(V: SuperSpace, W: SuperSpace) -> SparseMat:
    """Signed flip V (x) W -> W (x) V, v (x) w -> (-1)^{[v][w]} w (x) v."""
    out = SparseMat(V.tensor(W), W.tensor(V))
    for v in range(V.dim):
        for w in range(W.dim):
            sign = -1 if V.parities[v] and W.parities[w] else 1
            out.entries[(w * V.dim + v, v * W.dim + w)] = sign
    return out


# ---------------------------------------------------------------------------
# Exact rank / nullity.

def vectorize(m: SparseMat) -> dict:
    """Row-major vectorization of an operator: (r, c) -> r*cols + c."""
    cols = m.cols
    return {r * cols + c: v for (r, c), v in m.entries.items()}


def _int_row(row: dict) -> dict:
    """Clear denominators and content of a Fraction/int row."""
    mult = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            mult = lcm(mult, v.denominator)
    out = {}
    for k, v in row.items():
        w = int(v * mult) if mult != 1 else (
            int(v) if isinstance(v, Fraction) else v)
        if w:
            out[k] = w
    return out


def _rows_of(mat_or_rows):
    if isinstance(mat_or_rows, SparseMat):
        grouped = {}
        for (r, c), v in mat_or_rows.entries.items():
            grouped.setdefault(r, {})[c] = v
        return list(grouped.values())
    return list(mat_or_rows)


def _specialize_row(row, point):
    return {k: (v.specialize(point) if isinstance(v, RatFunc) else v)
            for k, v in row.items()}


def int_rank(rows) -> int:
    """Exact rank over Q of Fraction/int rows."""
    return rank_of_int_rows([_int_row(r) for r in rows])


def ranks_at(mat_or_rows, points) -> list[int]:
    """Exact rank of the specialised matrix at each point, in order."""
    points = list(points)
    if not points:
        raise ValueError("at least one specialisation point is required")
    rows = _rows_of(mat_or_rows)
    needs_points = any(isinstance(v, RatFunc) for r in rows for v in r.values())
    if not needs_points:
        return [int_rank(rows)] * len(points)
    return [int_rank([_specialize_row(r, p) for r in rows]) for p in points]


def rank_at(mat_or_rows, points=DEFAULT_POINTS) -> int:
    """Max specialised rank over the given points.

    Specialisation can only drop rank, so the max is a lower bound for the
    generic rank that is tight at generic points.  Disagreements between
    points are reported as warnings; use `ranks_at` to inspect them.
    """
    ranks = ranks_at(mat_or_rows, points)
    if len(set(ranks)) != 1:
        import warnings
        warnings.warn(f"specialised ranks disagree across points: {ranks}")
    return max(ranks)


def nullspace_dim_at(constraint: SparseMat) -> int:
    """Exact nullity over Q of a constraint matrix with Fraction/int entries."""
    for v in constraint.entries.values():
        if isinstance(v, RatFunc):
            raise TypeError("nullspace_dim_at expects a matrix over Q; "
                            "specialise first")
    return constraint.cols - int_rank(_rows_of(constraint))
