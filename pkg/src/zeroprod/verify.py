"""Brute-force oracles, the component pipeline, and cross-method checks.

`brute_force_components` finds the minimal-codimension orbits inside the
zero-product locus by exhausting Kostant partitions, fully independently of
the rising-vector construction.  `components` runs that construction and
certifies each resulting component internally.  `cross_check` compares the
component count and codimension across up to four methods and reports any
disagreement instead of raising: a disagreement is the interesting output.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .closedform import closed_form
from .errors import SearchSpaceTooLarge, ZeroProdError
from .kostant import (
    DimensionVector,
    KostantPartition,
    RankPattern,
    ext_weight_table,
    intervals,
    lies_in_sigma,
    orbit_codimension,
    rank_pattern,
)
from .lace import LaceDiagram, diagram_from_rising, partition_of_diagram
from .qip import QipSolutionSet, RisingVector, solve_rising, solve_sorted
from .qseries import component_series, leading_term
from .represent import (
    IntMatrix,
    partial_products_ranks,
    product_is_zero,
    representative_tuple,
)

DEFAULT_CAP = 10_000_000

METHODS = ("qip", "qseries", "closedform", "bruteforce")


class Equation(NamedTuple):
    """Rank condition rk(product of factors k+1 .. l) <= bound."""

    k: int
    l: int
    bound: int


@dataclass(frozen=True)
class BruteForceResult:
    minimum: int
    minimizers: tuple[KostantPartition, ...]


def brute_force_components(
    d: Sequence[int],
    cap: int = DEFAULT_CAP,
    prune: bool = True,
) -> BruteForceResult:
    """Minimal codimension over all partitions with no full-width strand.

    Backtracks over interval multiplicities exactly like the partition
    enumerator, keeping the codimension incrementally up to date.  Adding a
    strand never decreases the codimension, so with `prune` enabled any
    branch already above the best value seen is cut; the returned minimum
    and minimizer set are identical either way.  Visiting more than `cap`
    search nodes raises SearchSpaceTooLarge.
    """
    dims = DimensionVector(d)
    n = dims.n
    ivs = intervals(n)
    count = len(ivs)
    weights = ext_weight_table(n)
    full_interval = ivs.index((0, n))
    budgets = list(dims)
    mult = [0] * count
    pair_weight = [0] * count  # running interaction of assigned strands
    nodes = 0
    best: int | None = None
    mins: list[tuple[int, ...]] = []

    def assign(pos: int, v: int) -> None:
        k, l = ivs[pos]
        for t in range(k, l + 1):
            budgets[t] -= v
        mult[pos] = v
        if v:
            w = weights[pos]
            for t in range(count):
                pair_weight[t] += v * w[t]

    def unassign(pos: int, v: int) -> None:
        k, l = ivs[pos]
        for t in range(k, l + 1):
            budgets[t] += v
        mult[pos] = 0
        if v:
            w = weights[pos]
            for t in range(count):
                pair_weight[t] -= v * w[t]

    def rec(pos: int, codim: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > cap:
            raise SearchSpaceTooLarge(
                f"enumeration for {tuple(dims)} exceeded cap of {cap} nodes"
            )
        if pos == count:
            if best is None or codim < best:
                best = codim
                mins.clear()
            if codim == best:
                mins.append(tuple(mult))
            return
        k, l = ivs[pos]
        if l == n:
            v = budgets[k]
            if pos == full_interval and v != 0:
                return  # a full-width strand would make the product nonzero
            if v and any(budgets[t] < v for t in range(k + 1, n + 1)):
                return
            delta = v * pair_weight[pos]
            if prune and best is not None and codim + delta > best:
                return
            assign(pos, v)
            rec(pos + 1, codim + delta)
            unassign(pos, v)
            return
        hi = min(budgets[t] for t in range(k, l + 1))
        for v in range(hi + 1):
            delta = v * pair_weight[pos]
            if prune and best is not None and codim + delta > best:
                break  # delta grows with v
            assign(pos, v)
            rec(pos + 1, codim + delta)
            unassign(pos, v)

    rec(0, 0)
    assert best is not None  # the all-singletons partition always qualifies
    return BruteForceResult(
        best, tuple(KostantPartition(n, m) for m in sorted(mins))
    )


def generic_rank(d: Sequence[int], k: int, l: int) -> int:
    """Rank of the product of factors k+1 .. l at a generic chain."""
    return min(d[t] for t in range(k, l + 1))


def reduced_equations(r: RankPattern, d: Sequence[int]) -> tuple[Equation, ...]:
    """Minimal set of rank conditions cutting the orbit closure out of the
    zero-product locus.

    A window (k, l) is a candidate when its bound is strictly below the
    generic rank; the full window (0, n) is the locus membership itself and
    is never listed.  A candidate is dropped when a strictly smaller
    candidate window carries a bound that is at most as large, since a
    product through the smaller window bounds the longer product.
    """
    dims = DimensionVector(d)
    n = dims.n
    cands = [
        (k, l)
        for k in range(n + 1)
        for l in range(k + 1, n + 1)
        if (k, l) != (0, n) and r[k, l] < generic_rank(dims, k, l)
    ]
    kept = []
    for k, l in cands:
        implied = any(
            (k2, l2) != (k, l) and k <= k2 and l2 <= l and r[k2, l2] <= r[k, l]
            for (k2, l2) in cands
        )
        if not implied:
            kept.append(Equation(k, l, r[k, l]))
    return tuple(kept)


@dataclass(frozen=True)
class ComponentRecord:
    rising_vector: RisingVector
    diagram: LaceDiagram
    partition: KostantPartition
    ranks: RankPattern
    equations: tuple[Equation, ...]
    representative: tuple[IntMatrix, ...]


@dataclass(frozen=True)
class ComponentReport:
    d: DimensionVector
    k: int
    C: int
    theta: int
    records: tuple[ComponentRecord, ...]

    def partitions(self) -> frozenset[KostantPartition]:
        return frozenset(rec.partition for rec in self.records)


def components(d: Sequence[int], k: int | None = None) -> ComponentReport:
    """Construct the maximal-dimensional components of the zero-product locus.

    Solves the rising program at placeholder k (default: first position of
    minimal dimension), builds each solution's diagram, partition, rank
    pattern, reduced equations, and 0/1 representative, and asserts the
    internal consistency of every record.
    """
    dims = DimensionVector(d)
    if k is None:
        k = dims.min_position()
    sols = solve_rising(dims, k)
    records = []
    for v in sols.solutions:
        diagram = diagram_from_rising(dims, v)
        part = partition_of_diagram(diagram, dims)
        ranks = rank_pattern(part)
        rep = representative_tuple(diagram)
        # every record must certify itself; a failure here is a defect
        assert lies_in_sigma(part)
        assert orbit_codimension(part) == sols.minimum
        assert product_is_zero(rep)
        assert partial_products_ranks(rep) == ranks
        records.append(
            ComponentRecord(
                rising_vector=v,
                diagram=diagram,
                partition=part,
                ranks=ranks,
                equations=reduced_equations(ranks, dims),
                representative=rep,
            )
        )
    return ComponentReport(
        d=dims, k=k, C=sols.minimum, theta=len(records), records=tuple(records)
    )


@dataclass(frozen=True)
class MethodResult:
    method: str
    C: int
    theta: int
    seconds: float


@dataclass(frozen=True)
class CrossCheckReport:
    d: DimensionVector
    results: tuple[MethodResult, ...]
    agree: bool
    partitions_match: bool | None  # None when brute force was not run

    @property
    def ok(self) -> bool:
        return self.agree and self.partitions_match is not False


def series_count(d: DimensionVector, truncation: int | None) -> tuple[int, int]:
    # default window: two degrees past the closed-form codimension, so the
    # leading term always fits; an explicit window overrides
    if truncation is None:
        truncation = closed_form(d).C + 2
    lead = leading_term(component_series(d, truncation))
    if lead is None:
        raise ZeroProdError(
            f"series window {truncation} holds no nonzero coefficient; "
            "retry with a larger truncation"
        )
    return lead


def cross_check(
    d: Sequence[int],
    methods: Sequence[str] = METHODS,
    truncation: int | None = None,
    cap: int = DEFAULT_CAP,
) -> CrossCheckReport:
    """Compute (C, theta) by each selected method and compare.

    With brute force selected, additionally checks that the pipeline's
    partitions coincide with the brute-force minimizer set.  Disagreements
    are reported in the flags, never raised.
    """
    dims = DimensionVector(d)
    chosen = list(dict.fromkeys(methods))
    unknown = [m for m in chosen if m not in METHODS]
    if unknown:
        raise ValueError(f"unknown methods: {unknown}; pick from {METHODS}")
    if len(chosen) < 2:
        raise ValueError("cross-check needs at least two methods")

    results = []
    brute: BruteForceResult | None = None
    for method in chosen:
        start = time.perf_counter()
        if method == "qip":
            s = solve_sorted(dims)
            c, theta = s.minimum, s.theta
        elif method == "qseries":
            c, theta = series_count(dims, truncation)
        elif method == "closedform":
            res = closed_form(dims)
            c, theta = res.C, res.theta
        else:
            brute = brute_force_components(dims, cap=cap)
            c, theta = brute.minimum, len(brute.minimizers)
        results.append(
            MethodResult(method, c, theta, time.perf_counter() - start)
        )

    agree = len({(r.C, r.theta) for r in results}) == 1
    partitions_match = None
    if brute is not None:
        pipeline = components(dims)
        partitions_match = pipeline.partitions() == frozenset(brute.minimizers)
    return CrossCheckReport(
        d=dims, results=tuple(results), agree=agree, partitions_match=partitions_match
    )
