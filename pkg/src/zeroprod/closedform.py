"""Closed forms for the minimal codimension C and the component count theta.

Sort the dimension vector weakly increasingly into d'.  The *threshold
index* is the largest l in {1, ..., n} with d'_0 + ... + d'_l >= l * d'_l
(l = 1 always qualifies), and S is the head sum d'_0 + ... + d'_t up to the
threshold t.  Writing {x} for the fractional part,

    C = t/2 * {S/t} * (1 - {S/t}) - t(t-1)/2 * (S/t)^2
        + sum_{0 <= i < j <= t} d'_i d'_j,

evaluated in exact rational arithmetic (the result is always an integer),
and

    theta = binomial(t, S mod t).

The binomial index is the residue of S modulo the threshold; by the
symmetry binomial(t, rho) = binomial(t, t - rho) this agrees with reading
the index as the distance from S to the nearest multiple of t whenever that
distance is non-negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IntegralityViolation, NotIncreasing
from .kostant import DimensionVector


@dataclass(frozen=True)
class ClosedFormResult:
    threshold: int
    head_sum: int
    C: int
    theta: int


def threshold_index(d_sorted: Sequence[int]) -> int:
    """Largest l with d'_0 + ... + d'_l >= l * d'_l; always in [1, n]."""
    dims = DimensionVector(d_sorted)
    if list(dims) != sorted(dims):
        raise NotIncreasing(f"{tuple(dims)} is not weakly increasing")
    best = 1
    head = dims[0] + dims[1]
    for l in range(1, dims.n + 1):
        if l > 1:
            head += dims[l]
        if head >= l * dims[l]:
            best = l
    return best


def closed_form(d: Sequence[int]) -> ClosedFormResult:
    """Evaluate C and theta for any dimension vector."""
    dims = DimensionVector(d).sorted()
    t = threshold_index(dims)
    s = sum(dims[: t + 1])
    frac = Fraction(s % t, t)
    c = (
        Fraction(t, 2) * frac * (1 - frac)
        - Fraction(t * (t - 1), 2) * Fraction(s, t) ** 2
        + sum(dims[i] * dims[j] for i in range(t + 1) for j in range(i + 1, t + 1))
    )
    if c.denominator != 1:
        raise IntegralityViolation(f"closed form gave non-integer {c} for {tuple(d)}")
    return ClosedFormResult(threshold=t, head_sum=s, C=int(c), theta=math.comb(t, s % t))
