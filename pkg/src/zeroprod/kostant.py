"""Interval multiplicities, rank patterns, and the exact orbit codimension.

A chain of linear maps C^{d_0} -> C^{d_1} -> ... -> C^{d_n} decomposes into
elementary strands supported on column intervals [k, l].  A *Kostant
partition* records how many strands occupy each interval; its column sums
must reproduce the dimension vector.  Orbits of the base-change group acting
on such chains are classified by these partitions, the closure of an orbit
is cut out by rank conditions read off the induced *rank pattern*

    r_ij = sum of m_kl over all intervals [k, l] containing [i, j],

and the codimension of an orbit is the bilinear expression

    sum_{ij, uv} m_ij * m_uv * ext(ij, uv)

where ext(ij, uv) is 1 exactly when i+1 <= u <= j+1 <= v and 0 otherwise.

Everything in this module is exact integer arithmetic; all values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import NotAPartition, NotAPattern


class DimensionVector(tuple):
    """Sizes (d_0, ..., d_n) of the spaces in a chain; n >= 1, entries >= 0."""

    def __new__(cls, entries: Iterable[int]):
        dims = tuple(int(x) for x in entries)
        if len(dims) < 2:
            raise ValueError("dimension vector needs at least two entries")
        if any(x < 0 for x in dims):
            raise ValueError(f"dimension vector has a negative entry: {dims}")
        return super().__new__(cls, dims)

    @property
    def n(self) -> int:
        return len(self) - 1

    def sorted(self) -> "DimensionVector":
        return DimensionVector(sorted(self))

    def min_position(self) -> int:
        """Smallest index carrying the minimal entry."""
        return self.index(min(self))


class Interval(NamedTuple):
    """Column interval [k, l] with 0 <= k <= l."""

    k: int
    l: int


def intervals(n: int) -> list[Interval]:
    """All intervals [k, l] with 0 <= k <= l <= n, in lexicographic order."""
    return [Interval(k, l) for k in range(n + 1) for l in range(k, n + 1)]


def interval_index(n: int, k: int, l: int) -> int:
    # position of (k, l) in the lexicographic interval list
    if not 0 <= k <= l <= n:
        raise ValueError(f"interval ({k},{l}) out of range for n={n}")
    return k * (n + 1) - k * (k - 1) // 2 + (l - k)


def _triangle_size(n: int) -> int:
    return (n + 1) * (n + 2) // 2


class _Triangular:
    """Dense upper-triangular integer array indexed by intervals (k, l)."""

    __slots__ = ("n", "_flat")

    def __init__(self, n: int, values: Mapping[tuple[int, int], int] | Sequence[int]):
        if n < 1:
            raise ValueError("order must be at least 1")
        self.n = n
        if isinstance(values, Mapping):
            flat = [0] * _triangle_size(n)
            for (k, l), v in values.items():
                flat[interval_index(n, k, l)] = int(v)
            self._flat = tuple(flat)
        else:
            flat = tuple(int(v) for v in values)
            if len(flat) != _triangle_size(n):
                raise ValueError("flat value list has the wrong length")
            self._flat = flat

    def __getitem__(self, kl: tuple[int, int]) -> int:
        k, l = kl
        return self._flat[interval_index(self.n, k, l)]

    def flat(self) -> tuple[int, ...]:
        return self._flat

    def items(self) -> Iterator[tuple[Interval, int]]:
        """Nonzero entries with their intervals, in lexicographic order."""
        for iv, v in zip(intervals(self.n), self._flat):
            if v:
                yield iv, v

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {tuple(iv): v for iv, v in self.items()}

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and self.n == other.n
            and self._flat == other._flat
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self._flat))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, {self.as_dict()!r})"


class KostantPartition(_Triangular):
    """Multiplicities m_kl of strands on intervals [k, l]; absent means 0."""

    def __init__(self, n, values):
        super().__init__(n, values)
        if any(v < 0 for v in self._flat):
            raise ValueError("multiplicities must be non-negative")

    def column_sums(self) -> tuple[int, ...]:
        """Per-column totals: entry i is the sum of m_kl over k <= i <= l."""
        sums = [0] * (self.n + 1)
        for (k, l), v in self.items():
            for t in range(k, l + 1):
                sums[t] += v
        return tuple(sums)

    def is_partition_of(self, d: Sequence[int]) -> bool:
        return self.column_sums() == tuple(d)

    def require_partition_of(self, d: Sequence[int]) -> None:
        if not self.is_partition_of(d):
            raise NotAPartition(
                f"column sums {self.column_sums()} != dimension vector {tuple(d)}"
            )

    def to_json(self) -> list[list[int]]:
        """Nonzero entries as [k, l, multiplicity] triples."""
        return [[iv.k, iv.l, v] for iv, v in self.items()]


class RankPattern(_Triangular):
    """Triangular array r_ij bounding the rank of each partial product."""

    def __init__(self, n, values):
        super().__init__(n, values)
        if any(v < 0 for v in self._flat):
            raise ValueError("rank bounds must be non-negative")

    def rows(self) -> list[list[int]]:
        """Row i is [r_ii, r_{i,i+1}, ..., r_in]."""
        return [
            [self[i, j] for j in range(i, self.n + 1)] for i in range(self.n + 1)
        ]

    def to_json(self) -> list[list[int]]:
        return self.rows()


def rank_pattern(m: KostantPartition) -> RankPattern:
    """Rank pattern of a partition: r_ij = sum of m_kl over [k,l] >= [i,j]."""
    n = m.n
    r = [0] * _triangle_size(n)
    for (k, l), v in m.items():
        for i in range(k, l + 1):
            for j in range(i, l + 1):
                r[interval_index(n, i, j)] += v
    return RankPattern(n, r)


def partition_from_rank(r: RankPattern) -> KostantPartition:
    """Invert `rank_pattern` by finite differences.

    m_kl = r_kl - r_{k-1,l} - r_{k,l+1} + r_{k-1,l+1}, reading out-of-range
    entries as 0.  Raises NotAPattern when any recovered multiplicity is
    negative, i.e. when r does not come from a partition.
    """
    n = r.n

    def at(k: int, l: int) -> int:
        if k < 0 or l > n:
            return 0
        return r[k, l]

    m: dict[tuple[int, int], int] = {}
    for k in range(n + 1):
        for l in range(k, n + 1):
            v = at(k, l) - at(k - 1, l) - at(k, l + 1) + at(k - 1, l + 1)
            if v < 0:
                raise NotAPattern(f"recovered multiplicity m[{k},{l}] = {v} < 0")
            if v:
                m[(k, l)] = v
    return KostantPartition(n, m)


def ext_dim_indecomposable(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Extension dimension between single strands on [i,j] and [u,v].

    Equals 1 exactly when i+1 <= u <= j+1 <= v, else 0.  In particular it
    vanishes whenever b starts at column 0 or a ends at the last column.
    """
    i, j = a
    u, v = b
    if i > j or u > v or i < 0 or u < 0:
        raise ValueError(f"not intervals: {a}, {b}")
    return 1 if (i + 1 <= u <= j + 1 <= v) else 0


def ext_weight_table(n: int) -> list[list[int]]:
    """Symmetrised table W[s][t] = ext(I_s, I_t) + ext(I_t, I_s) over the
    lexicographic interval list; the diagonal is all zero."""
    ivs = intervals(n)
    return [
        [
            ext_dim_indecomposable(a, b) + ext_dim_indecomposable(b, a)
            for b in ivs
        ]
        for a in ivs
    ]


def orbit_codimension(m: KostantPartition) -> int:
    """Codimension of the orbit coded by m: the ext-weighted double sum."""
    entries = list(m.items())
    total = 0
    for a, va in entries:
        for b, vb in entries:
            if ext_dim_indecomposable(a, b):
                total += va * vb
    return total


def lies_in_sigma(m: KostantPartition) -> bool:
    """Whether the orbit of m sits inside the zero-product locus.

    The generic rank of the full product on the orbit closure is
    r_0n = m_0n, so the product vanishes exactly when the full interval
    [0, n] carries no strand.
    """
    return m[0, m.n] == 0


def enumerate_partitions(d: Sequence[int]) -> Iterator[KostantPartition]:
    """All Kostant partitions of d, each exactly once.

    Backtracks over intervals in lexicographic (k, l) order, pruning any
    branch that overdraws a column budget.  The multiplicity of the last
    interval [k, n] of each row is forced by the residual budget of column
    k, since no later interval reaches that column.  Output order is
    ascending lexicographic in the flat multiplicity vector.
    """
    dims = DimensionVector(d)
    n = dims.n
    ivs = intervals(n)
    budgets = list(dims)
    mult = [0] * len(ivs)

    def rec(pos: int) -> Iterator[KostantPartition]:
        if pos == len(ivs):
            yield KostantPartition(n, tuple(mult))
            return
        k, l = ivs[pos]
        if l == n:
            v = budgets[k]
            if any(budgets[t] < v for t in range(k + 1, n + 1)):
                return
            mult[pos] = v
            for t in range(k, n + 1):
                budgets[t] -= v
            yield from rec(pos + 1)
            for t in range(k, n + 1):
                budgets[t] += v
            mult[pos] = 0
            return
        hi = min(budgets[t] for t in range(k, l + 1))
        for v in range(hi + 1):
            mult[pos] = v
            for t in range(k, l + 1):
                budgets[t] -= v
            yield from rec(pos + 1)
            for t in range(k, l + 1):
                budgets[t] += v
        mult[pos] = 0

    return rec(0)
