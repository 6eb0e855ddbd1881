"""Two equivalent quadratic integer programs over a simplex of compositions.

Both programs minimise a positive-semidefinite quadratic over the lattice
points of a simplex and share their optimum C; the number of optimal points
is the component count theta.

* The *sorted program* works on the weakly increasing rearrangement
  d' of the dimension vector and scores a composition (e_1, ..., e_n) of
  d'_0 by

      G(e) = sum_{1 <= j <= i <= n} e_i * (e_j + d'_j - d'_{j-1}).

* The *rising program* works on the original vector.  A candidate is a
  rising vector: values e_i at every position except a placeholder at a
  position k of minimal dimension, summing to d_k, scored by

      F(e) = sum_{i != k} e_i * (d_i - d_k)
           + sum_{i <= j, both != k} e_i * e_j.

  Both indices of the quadratic part range over the non-placeholder
  positions and the diagonal i = j is included.

A sorting permutation transports solution sets of the first program onto
solution sets of the second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InfeasibleVector, NotAMinimumPosition
from .kostant import DimensionVector


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`,
    in ascending lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        ext = (-1,) + bars + (total + parts - 1,)
        yield tuple(ext[i + 1] - ext[i] - 1 for i in range(parts))


@dataclass(frozen=True)
class RisingVector:
    """Values at every position except a placeholder at position k.

    The placeholder marks a position of minimal dimension; the remaining
    values are non-negative and sum to that minimal dimension.
    """

    k: int
    values: tuple  # length n+1, None at position k

    def __post_init__(self):
        if not 0 <= self.k < len(self.values):
            raise ValueError("placeholder position out of range")
        if self.values[self.k] is not None:
            raise ValueError("placeholder position must hold None")
        if any(
            not isinstance(v, int) or v < 0
            for i, v in enumerate(self.values)
            if i != self.k
        ):
            raise ValueError("entries must be non-negative integers")

    @classmethod
    def of(cls, k: int, values: Sequence) -> "RisingVector":
        vals = list(values)
        vals[k] = None
        return cls(k, tuple(vals))

    @classmethod
    def parse(cls, text: str) -> "RisingVector":
        """Parse e.g. "0,1,*,0,4,0" with a single '*' placeholder."""
        parts = [p.strip() for p in text.split(",")]
        stars = [i for i, p in enumerate(parts) if p == "*"]
        if len(stars) != 1:
            raise ValueError("expected exactly one '*' placeholder")
        k = stars[0]
        return cls(k, tuple(None if i == k else int(p) for i, p in enumerate(parts)))

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def entry_sum(self) -> int:
        return sum(v for i, v in enumerate(self.values) if i != self.k)

    def require_feasible_for(self, d: Sequence[int]) -> None:
        dims = DimensionVector(d)
        if self.n != dims.n:
            raise InfeasibleVector(
                f"vector has order {self.n}, dimension vector has {dims.n}"
            )
        if dims[self.k] != min(dims):
            raise NotAMinimumPosition(
                f"position {self.k} carries {dims[self.k]}, minimum is {min(dims)}"
            )
        if self.entry_sum() != dims[self.k]:
            raise InfeasibleVector(
                f"entries sum to {self.entry_sum()}, need {dims[self.k]}"
            )

    def sort_key(self) -> tuple[int, ...]:
        return tuple(-1 if v is None else v for v in self.values)

    def to_json(self) -> list:
        return ["*" if v is None else v for v in self.values]

    def __str__(self) -> str:
        return "(" + ",".join("*" if v is None else str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class QipSolutionSet:
    """Optimum of a program together with every vector attaining it."""

    minimum: int
    solutions: tuple

    @property
    def theta(self) -> int:
        return len(self.solutions)


def objective_sorted(d_sorted: Sequence[int], e: Sequence[int]) -> int:
    """G(e) for the sorted program; e = (e_1, ..., e_n) composes d'_0."""
    dp = DimensionVector(d_sorted)
    if list(dp) != sorted(dp):
        raise ValueError("sorted program needs a weakly increasing vector")
    ev = tuple(int(x) for x in e)
    if len(ev) != dp.n:
        raise InfeasibleVector(f"need {dp.n} entries, got {len(ev)}")
    if any(x < 0 for x in ev) or sum(ev) != dp[0]:
        raise InfeasibleVector(f"{ev} is not a composition of {dp[0]}")
    total = 0
    for i in range(1, dp.n + 1):
        for j in range(1, i + 1):
            total += ev[i - 1] * (ev[j - 1] + dp[j] - dp[j - 1])
    return total


def objective_rising(d: Sequence[int], v: RisingVector) -> int:
    """F(e) for the rising program on the original dimension vector."""
    dims = DimensionVector(d)
    v.require_feasible_for(dims)
    k = v.k
    positions = [i for i in range(dims.n + 1) if i != k]
    linear = sum(v.values[i] * (dims[i] - dims[k]) for i in positions)
    quad = 0
    for a in range(len(positions)):
        for b in range(a, len(positions)):
            quad += v.values[positions[a]] * v.values[positions[b]]
    return linear + quad


def solve_sorted(d: Sequence[int]) -> QipSolutionSet:
    """Exhaustively minimise the sorted program.

    Sorts d internally, scores every composition of the smallest entry into
    n parts, and returns the minimum with all minimisers in ascending
    lexicographic order.
    """
    dims = DimensionVector(d).sorted()
    best = None
    sols: list[tuple[int, ...]] = []
    for e in compositions(dims[0], dims.n):
        g = objective_sorted(dims, e)
        if best is None or g < best:
            best, sols = g, [e]
        elif g == best:
            sols.append(e)
    return QipSolutionSet(best, tuple(sols))


def solve_rising(d: Sequence[int], k: int) -> QipSolutionSet:
    """Exhaustively minimise the rising program with the placeholder at k."""
    dims = DimensionVector(d)
    if not 0 <= k <= dims.n:
        raise NotAMinimumPosition(f"position {k} out of range")
    if dims[k] != min(dims):
        raise NotAMinimumPosition(
            f"position {k} carries {dims[k]}, minimum is {min(dims)}"
        )
    positions = [i for i in range(dims.n + 1) if i != k]
    best = None
    sols: list[RisingVector] = []
    for combo in compositions(dims[k], len(positions)):
        values: list = [None] * (dims.n + 1)
        for pos, val in zip(positions, combo):
            values[pos] = val
        v = RisingVector(k, tuple(values))
        f = objective_rising(dims, v)
        if best is None or f < best:
            best, sols = f, [v]
        elif f == best:
            sols.append(v)
    sols.sort(key=RisingVector.sort_key)
    return QipSolutionSet(best, tuple(sols))


def sorting_permutation(d: Sequence[int], k: int) -> tuple[int, ...]:
    """Permutation sigma with d_i = d'_sigma(i) and sigma(k) = 0.

    Stable: entries of equal value keep their relative order, except that
    position k is swapped into slot 0 among the positions of minimal value.
    """
    dims = DimensionVector(d)
    if dims[k] != min(dims):
        raise NotAMinimumPosition(
            f"position {k} carries {dims[k]}, minimum is {min(dims)}"
        )
    order = sorted(range(dims.n + 1), key=lambda i: (dims[i], i))
    sigma = [0] * (dims.n + 1)
    for slot, pos in enumerate(order):
        sigma[pos] = slot
    if sigma[k] != 0:
        j0 = order[0]
        sigma[j0], sigma[k] = sigma[k], 0
    return tuple(sigma)


def transport_solutions(
    d: Sequence[int], k: int, s: QipSolutionSet
) -> list[RisingVector]:
    """Carry sorted-program solutions to rising vectors at placeholder k.

    A solution (e_1, ..., e_n) maps to the rising vector whose entry at
    position i != k is e_sigma(i), with sigma the sorting permutation.
    The image set equals the rising program's solution set.
    """
    dims = DimensionVector(d)
    sigma = sorting_permutation(dims, k)
    out = []
    for e in s.solutions:
        values: list = [None] * (dims.n + 1)
        for i in range(dims.n + 1):
            if i != k:
                values[i] = e[sigma[i] - 1]
        out.append(RisingVector(k, tuple(values)))
    out.sort(key=RisingVector.sort_key)
    return out
