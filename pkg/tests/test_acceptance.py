"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Every comparison is exact; the only tolerances are wall-clock budgets.
"""

import contextlib
import random
import time

from zeroprod import (
    Equation,
    KostantPartition,
    brute_force_components,
    closed_form,
    component_series,
    components,
    compositions,
    cross_check,
    diagram_from_rising,
    diagram_increasing_case,
    enumerate_partitions,
    ext_dim_indecomposable,
    intervals,
    leading_term,
    lies_in_sigma,
    objective_rising,
    open_orbit_diagram,
    orbit_codimension,
    partial_products_ranks,
    partition_from_rank,
    partition_of_diagram,
    product_is_zero,
    rank_pattern,
    representative_tuple,
    solve_rising,
    solve_sorted,
)
from zeroprod.qip import RisingVector
from conftest import (
    D_556666,
    D_557889,
    D_875958,
    M_556666,
    M_875958,
    MINIMIZERS_2323,
    R_875958_ROWS,
    RISING_875958,
    SIGMA_SPECTRUM_222,
    SOLUTIONS_557889,
)


@contextlib.contextmanager
def criterion(num, description, budget_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {num}: FAIL — {description}")
        raise
    elapsed = time.perf_counter() - start
    verdict = "PASS" if elapsed < budget_seconds else "FAIL (over budget)"
    print(
        f"[acceptance] criterion {num}: {verdict} in {elapsed:.2f} s "
        f"(budget {budget_seconds} s) — {description}"
    )
    assert elapsed < budget_seconds


def test_criterion_1_2323_all_methods_and_equations():
    with criterion(1, "(2,3,2,3): four-way agreement, partitions, equations", 1.0):
        report = cross_check((2, 3, 2, 3))
        assert [(r.C, r.theta) for r in report.results] == [(4, 3)] * 4
        assert report.agree and report.partitions_match

        pipeline = components((2, 3, 2, 3), 0)
        brute = brute_force_components((2, 3, 2, 3))
        assert pipeline.theta == 3
        assert pipeline.partitions() == frozenset(brute.minimizers)
        assert pipeline.partitions() == {
            KostantPartition(3, m) for m in MINIMIZERS_2323
        }

        expected = {Equation(2, 3, 1), Equation(0, 2, 1)}
        assert any(set(rec.equations) == expected for rec in pipeline.records)


def test_criterion_2_222_spectrum():
    with criterion(2, "(2,2,2): codimension spectrum and unique minimum", 1.0):
        spectrum = sorted(
            orbit_codimension(m)
            for m in enumerate_partitions((2, 2, 2))
            if lies_in_sigma(m)
        )
        assert spectrum == SIGMA_SPECTRUM_222
        assert spectrum.count(3) == 1 and spectrum.count(4) == 2

        res = brute_force_components((2, 2, 2))
        assert res.minimum == 3 and len(res.minimizers) == 1


def test_criterion_3_556666():
    with criterion(3, "(5,5,6,6,6,6): C=19, theta=5, fast methods", 1.0):
        cf = closed_form(D_556666)
        assert (cf.C, cf.theta) == (19, 5)
        s = solve_sorted(D_556666)
        assert (s.minimum, len(s.solutions)) == (19, 5)

    with criterion(3, "(5,5,6,6,6,6): brute force confirms", 60.0):
        brute = brute_force_components(D_556666)
        assert brute.minimum == 19 and len(brute.minimizers) == 5
        assert KostantPartition(5, M_556666) in set(brute.minimizers)


def test_criterion_4_875958_pipeline():
    with criterion(4, "(8,7,5,9,5,8): rising vectors, partition, ranks, C=23", 5.0):
        report = components(D_875958)
        assert report.theta == 4
        assert {str(r.rising_vector) for r in report.records} == RISING_875958

        target = next(
            r for r in report.records if str(r.rising_vector) == "(0,1,*,0,4,0)"
        )
        assert target.partition == KostantPartition(5, M_875958)
        assert target.ranks.rows() == R_875958_ROWS

        assert closed_form(D_875958).C == 23
        assert solve_sorted(D_875958).minimum == 23
        assert report.C == 23


def test_criterion_5_557889_two_constructions():
    with criterion(5, "(5,5,7,8,8,9): solutions and equal partition sets", 1.0):
        s = solve_sorted(D_557889)
        assert set(s.solutions) == SOLUTIONS_557889

        deletion = {
            partition_of_diagram(diagram_increasing_case(D_557889, e), D_557889)
            for e in s.solutions
        }
        staircase = {
            partition_of_diagram(
                diagram_from_rising(D_557889, RisingVector.of(0, (None,) + e)),
                D_557889,
            )
            for e in s.solutions
        }
        assert deletion == staircase and len(deletion) == 4


def _all_rising_vectors(d, k):
    n = len(d) - 1
    positions = [i for i in range(n + 1) if i != k]
    for combo in compositions(d[k], len(positions)):
        values = [None] * (n + 1)
        for pos, val in zip(positions, combo):
            values[pos] = val
        yield RisingVector(k, tuple(values))


def test_criterion_6_randomized_suite():
    with criterion(6, "200 random vectors: methods, identities, consistency", 600.0):
        rng = random.Random(652023)
        for _ in range(200):
            n = rng.randint(1, 4)
            d = tuple(rng.randint(0, 4) for _ in range(n + 1))
            k = d.index(min(d))

            # (a) four-way agreement, brute force included
            report = cross_check(d)
            assert report.agree and report.partitions_match is not False, d

            cf = closed_form(d)

            # (e) series coefficients vanish strictly below the codimension
            window = component_series(d, cf.C + 2)
            assert all(c == 0 for c in window.coeffs[: cf.C]), d
            assert leading_term(window) == (cf.C, cf.theta), d

            # (b), (c), (d) over every feasible rising vector, optimal or not
            seen = {}
            for v in _all_rising_vectors(d, k):
                g = diagram_from_rising(d, v)
                m = partition_of_diagram(g, d)
                assert orbit_codimension(m) == objective_rising(d, v), (d, str(v))
                assert m not in seen, (d, str(v))
                seen[m] = v
                rep = representative_tuple(g)
                assert partial_products_ranks(rep) == rank_pattern(m), (d, str(v))
                assert product_is_zero(rep) == (m[0, n] == 0), (d, str(v))


def test_criterion_7_structural_invariants():
    with criterion(7, "round trips, ext vanishing, open orbits", 60.0):
        rng = random.Random(90125)
        for _ in range(300):
            n = rng.randint(1, 4)
            m = KostantPartition(
                n, {iv: rng.randint(0, 4) for iv in intervals(n)}
            )
            assert partition_from_rank(rank_pattern(m)) == m

        for n in range(1, 7):
            for (i, j) in intervals(n):
                for q in range(n + 1):
                    assert ext_dim_indecomposable((i, j), (0, q)) == 0
                    assert ext_dim_indecomposable((q, n), (i, j)) == 0

        for _ in range(100):
            n = rng.randint(1, 5)
            d = tuple(rng.randint(0, 8) for _ in range(n + 1))
            m = partition_of_diagram(open_orbit_diagram(d), d)
            assert orbit_codimension(m) == 0
