"""Truncated integer power series and the component-counting series.

All series live in Z[[q]] truncated at a fixed order N: a value stores
exactly the coefficients of q^0 .. q^N and arithmetic never reads beyond
that window.  Coefficients are exact Python integers.

The component-counting series of a dimension vector d is

    sum_{s=0}^{min d} (-1)^s q^{s(s-1)/2} * P_s * prod_i P_{d_i - s}

with P_s = 1 / ((1-q)(1-q^2)...(1-q^s)).  Its lowest-degree term is
theta * q^C where C is the codimension of the maximal-dimensional
components of the zero-product locus and theta is their number.
"""

from __future__ import annotations

from typing import Sequence

from .kostant import DimensionVector


class TruncatedSeries:
    """Integer power series known up to and including degree N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def shifted(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e, keeping the same window."""
        if e < 0:
            raise ValueError("shift must be non-negative")
        n = self.order
        return TruncatedSeries((0,) * min(e, n + 1) + self.coeffs[: max(n + 1 - e, 0)])

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"


def geometric_inverse(k: int, order: int) -> TruncatedSeries:
    """The series of 1/(1 - q^k): coefficient 1 at every multiple of k."""
    if k < 1:
        raise ValueError("period must be positive")
    return TruncatedSeries(
        tuple(1 if i % k == 0 else 0 for i in range(order + 1))
    )


def inverse_pochhammer(s: int, order: int) -> TruncatedSeries:
    """P_s = 1 / ((1-q)(1-q^2)...(1-q^s)); the empty product for s = 0."""
    if s < 0:
        raise ValueError("index must be non-negative")
    out = TruncatedSeries.one(order)
    for k in range(1, s + 1):
        out = out * geometric_inverse(k, order)
    return out


def component_series(d: Sequence[int], order: int) -> TruncatedSeries:
    """The signed sum of inverse-Pochhammer products for d, truncated.

    Summands whose q-power prefactor q^{s(s-1)/2} already exceeds the window
    contribute nothing and are skipped.
    """
    dims = DimensionVector(d)
    total = TruncatedSeries.zero(order)
    for s in range(min(dims) + 1):
        prefix = s * (s - 1) // 2
        if prefix > order:
            break
        term = inverse_pochhammer(s, order)
        for di in dims:
            term = term * inverse_pochhammer(di - s, order)
        term = term.shifted(prefix)
        total = total + (-term if s % 2 else term)
    return total


def leading_term(f: TruncatedSeries) -> tuple[int, int] | None:
    """Lowest degree with a nonzero coefficient, and that coefficient.

    Returns None when every stored coefficient is zero; the caller should
    retry with a larger truncation order.
    """
    for i, c in enumerate(f.coeffs):
        if c:
            return i, c
    return None
