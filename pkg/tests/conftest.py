"""Shared frozen reference data and independent oracles for the test suite.

The reference values below were computed with standalone oracles (cartesian
product-and-filter partition counting, rank-pattern-space enumeration,
sympy polynomial expansion for the q-series, exhaustive scoring for the
integer programs) before the library was written, and are frozen here.
"""

from fractions import Fraction

import pytest

from zeroprod import IntMatrix

# --- the codimension-23 orbit of d = (8, 7, 5, 9, 5, 8) -------------------
# multiplicities, the induced rank pattern, and the optimal rising vectors
D_875958 = (8, 7, 5, 9, 5, 8)
M_875958 = {(0, 0): 1, (0, 1): 3, (0, 3): 4, (2, 5): 1, (3, 5): 4, (5, 5): 3}
R_875958_ROWS = [
    [8, 7, 4, 4, 0, 0],
    [7, 4, 4, 0, 0],
    [5, 5, 1, 1],
    [9, 5, 5],
    [5, 5],
    [8],
]
RISING_875958 = {
    "(0,1,*,0,4,0)",
    "(0,2,*,0,3,0)",
    "(0,1,*,0,3,1)",
    "(1,1,*,0,3,0)",
}

# --- d = (2, 3, 2, 3): C = 4, theta = 3 ------------------------------------
D_2323 = (2, 3, 2, 3)
MINIMIZERS_2323 = [
    {(0, 1): 2, (1, 3): 1, (2, 3): 1, (3, 3): 1},
    {(0, 0): 1, (0, 1): 1, (1, 3): 2, (3, 3): 1},
    {(0, 1): 1, (0, 2): 1, (1, 3): 1, (3, 3): 2},
]
# a representative of the third minimizer, in a basis where the rank
# conditions rk(A3) <= 1 and rk(A2 A1) <= 1 are visible at a glance
REP_2323 = (
    IntMatrix.from_rows([[0, 0], [1, 0], [0, 1]]),
    IntMatrix.from_rows([[1, 0, 0], [0, 1, 0]]),
    IntMatrix.from_rows([[0, 0], [0, 0], [1, 0]]),
)

# --- d = (5, 5, 7, 8, 8, 9): the four optimal compositions ----------------
D_557889 = (5, 5, 7, 8, 8, 9)
SOLUTIONS_557889 = {
    (4, 1, 0, 0, 0),
    (3, 2, 0, 0, 0),
    (3, 1, 1, 0, 0),
    (3, 1, 0, 1, 0),
}

# --- d = (5, 5, 6, 6, 6, 6): C = 19 with five components ------------------
D_556666 = (5, 5, 6, 6, 6, 6)
M_556666 = {
    (0, 0): 1, (0, 1): 1, (0, 2): 1, (0, 3): 1, (0, 4): 1,
    (1, 5): 1, (2, 5): 2, (3, 5): 1, (4, 5): 1, (5, 5): 1,
}

# --- frozen partition counts and codimension spectra -----------------------
PARTITION_COUNTS = {(1, 1): 2, (1, 1, 1): 4, (2, 2, 2): 10, (2, 3, 2, 3): 46}
SIGMA_SPECTRUM_222 = [3, 4, 4, 5, 5, 8]

# --- frozen q-series coefficient windows (sympy oracle) --------------------
SERIES_COEFFS = {
    (1, 1): (0, 1, 2, 3, 4),
    (1, 1, 1): (0, 2, 5, 9, 14),
    (2, 2, 2): (0, 0, 0, 1, 6, 16, 38),
    (2, 3, 2, 3): (0, 0, 0, 0, 3, 15, 54, 149),
}

# --- frozen closed-form tuples (threshold, head_sum, C, theta) -------------
CLOSED_FORMS = {
    (1, 1): (1, 2, 1, 1),
    (1, 1, 1): (2, 3, 1, 2),
    (2, 2, 2): (2, 6, 3, 1),
    (2, 3, 2, 3): (3, 10, 4, 3),
    (8, 7, 5, 9, 5, 8): (4, 33, 23, 4),
    (5, 5, 7, 8, 8, 9): (4, 33, 23, 4),
    (5, 5, 6, 6, 6, 6): (5, 34, 19, 5),
}


def rank_by_fractions(matrix: IntMatrix) -> int:
    """Independent rank oracle: plain Gaussian elimination over Fractions."""
    rows = [[Fraction(x) for x in row] for row in matrix.to_rows()]
    rank = 0
    for col in range(matrix.cols):
        pivot = next((i for i in range(rank, matrix.rows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(matrix.rows):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def count_partitions_by_filter(d) -> int:
    """Independent partition counter: full product of per-interval ranges,
    filtered by exact column sums.  Only usable for tiny d."""
    import itertools

    n = len(d) - 1
    ivs = [(k, l) for k in range(n + 1) for l in range(k, n + 1)]
    ranges = [range(min(d[k : l + 1]) + 1) for (k, l) in ivs]
    count = 0
    for combo in itertools.product(*ranges):
        sums = [0] * (n + 1)
        for (k, l), v in zip(ivs, combo):
            for t in range(k, l + 1):
                sums[t] += v
        if sums == list(d):
            count += 1
    return count


@pytest.fixture
def rng():
    import random

    return random.Random(20240811)
