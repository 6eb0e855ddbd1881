"""Exact integer matrices: 0/1 orbit representatives and their ranks.

A lace diagram yields a chain of 0/1 matrices by identifying the dots of
column x, counted bottom-up, with the standard basis of C^{d_x}: every
segment contributes a single 1, dots without a right segment give zero
columns.  The chain lies in the orbit coded by the diagram's partition, so
the ranks of its partial products reproduce the rank pattern.

Ranks are computed by fraction-free (Bareiss) elimination over the
integers; no floating point anywhere.
"""

from __future__ import annotations

from typing import Sequence

from .kostant import DimensionVector, RankPattern, _triangle_size, interval_index
from .lace import LaceDiagram


class IntMatrix:
    """Immutable integer matrix, row-major entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[int]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        es = tuple(int(x) for x in entries)
        if len(es) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(es)}")
        self.rows = rows
        self.cols = cols
        self.entries = es

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(
            size, size, tuple(1 if i == j else 0 for i in range(size) for j in range(size))
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(x for row in rows for x in row))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: ({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})"
            )
        out = [0] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for t in range(self.cols):
                a = self.entries[base + t]
                if a:
                    obase = t * other.cols
                    for j in range(other.cols):
                        out[i * other.cols + j] += a * other.entries[obase + j]
        return IntMatrix(self.rows, other.cols, out)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and (self.rows, self.cols, self.entries)
            == (other.rows, other.cols, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix.from_rows({self.to_rows()!r})"


def exact_rank(matrix: IntMatrix) -> int:
    """Rank over the rationals via fraction-free Gaussian elimination.

    Bareiss pivoting keeps every intermediate value an exact integer;
    Python integers are unbounded, so there is no overflow to detect.
    """
    a = matrix.to_rows()
    rows, cols = matrix.rows, matrix.cols
    rank = 0
    prev = 1
    for col in range(cols):
        pivot_row = next((i for i in range(rank, rows) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, rows):
            factor = a[i][col]
            for j in range(col, cols):
                a[i][j] = (a[i][j] * pivot - factor * a[rank][j]) // prev
        prev = pivot
        rank += 1
        if rank == rows:
            break
    return rank


def representative_tuple(g: LaceDiagram) -> tuple[IntMatrix, ...]:
    """0/1 matrix chain representing the orbit of a diagram.

    The x-th matrix has shape d_x x d_{x-1}; each segment between columns
    x-1 and x puts a 1 at (index of right dot, index of left dot), indices
    counted bottom-up within their columns.
    """
    mats = []
    for x in range(1, g.n + 1):
        rows = len(g.columns[x])
        cols = len(g.columns[x - 1])
        entries = [0] * (rows * cols)
        for (ax, ay), (bx, by) in g.segments:
            if ax == x - 1:
                entries[g.dot_index(bx, by) * cols + g.dot_index(ax, ay)] = 1
        mats.append(IntMatrix(rows, cols, entries))
    return tuple(mats)


def _chain_dims(t: Sequence[IntMatrix]) -> DimensionVector:
    if not t:
        raise ValueError("empty matrix chain")
    for i in range(1, len(t)):
        if t[i].cols != t[i - 1].rows:
            raise ValueError(
                f"chain broken between factors {i} and {i + 1}: "
                f"{t[i].cols} columns vs {t[i - 1].rows} rows"
            )
    return DimensionVector((t[0].cols,) + tuple(m.rows for m in t))


def partial_products_ranks(t: Sequence[IntMatrix]) -> RankPattern:
    """Rank of every partial product of the chain.

    Entry (k, l) with k < l is the exact rank of the product of factors
    k+1 through l; the diagonal holds the chain dimensions themselves.
    """
    dims = _chain_dims(t)
    n = dims.n
    r = [0] * _triangle_size(n)
    for i in range(n + 1):
        r[interval_index(n, i, i)] = dims[i]
    for k in range(n):
        prod = t[k]
        r[interval_index(n, k, k + 1)] = exact_rank(prod)
        for l in range(k + 2, n + 1):
            prod = t[l - 1] @ prod
            r[interval_index(n, k, l)] = exact_rank(prod)
    return RankPattern(n, r)


def product_is_zero(t: Sequence[IntMatrix]) -> bool:
    """Whether the full product of the chain is the zero matrix."""
    dims = _chain_dims(t)
    prod = t[0]
    for m in t[1:]:
        if prod.is_zero():
            return True
        prod = m @ prod
    return prod.is_zero()
