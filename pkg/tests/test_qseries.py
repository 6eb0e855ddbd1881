import pytest

from zeroprod import (
    TruncatedSeries,
    component_series,
    geometric_inverse,
    inverse_pochhammer,
    leading_term,
)
from conftest import SERIES_COEFFS


def test_geometric_inverse():
    assert geometric_inverse(1, 3).coeffs == (1, 1, 1, 1)
    assert geometric_inverse(2, 5).coeffs == (1, 0, 1, 0, 1, 0)
    assert geometric_inverse(3, 2).coeffs == (1, 0, 0)
    with pytest.raises(ValueError):
        geometric_inverse(0, 3)


def test_inverse_pochhammer():
    assert inverse_pochhammer(0, 4).coeffs == (1, 0, 0, 0, 0)
    assert inverse_pochhammer(1, 4).coeffs == (1, 1, 1, 1, 1)
    assert inverse_pochhammer(2, 3).coeffs == (1, 1, 2, 2)


def test_inverse_pochhammer_times_its_denominator_is_one():
    order = 12
    for s in range(5):
        product = inverse_pochhammer(s, order)
        for k in range(1, s + 1):
            factor = [1] + [0] * order
            factor[k] = -1  # the polynomial 1 - q^k
            product = product * TruncatedSeries(factor)
        assert product == TruncatedSeries.one(order)


@pytest.mark.parametrize("d", sorted(SERIES_COEFFS))
def test_component_series_frozen_windows(d):
    coeffs = SERIES_COEFFS[d]
    assert component_series(d, len(coeffs) - 1).coeffs == coeffs


def test_component_series_zero_entry():
    # a zero dimension kills every signed summand but the first: the series
    # degenerates to the plain product of inverse Pochhammer factors
    f = component_series((0, 3, 2), 4)
    expected = inverse_pochhammer(0, 4) * inverse_pochhammer(3, 4) * inverse_pochhammer(2, 4)
    assert f == expected
    assert leading_term(f) == (0, 1)


def test_leading_term():
    assert leading_term(TruncatedSeries((0, 1, 2, 0))) == (1, 1)
    assert leading_term(component_series((2, 3, 2, 3), 6)) == (4, 3)
    assert leading_term(TruncatedSeries((0, 0, 0))) is None


def test_series_ring_axioms(rng):
    def random_series():
        return TruncatedSeries(tuple(rng.randint(-4, 4) for _ in range(9)))

    for _ in range(40):
        f, g, h = random_series(), random_series(), random_series()
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_shifted():
    f = TruncatedSeries((1, 2, 3))
    assert f.shifted(1).coeffs == (0, 1, 2)
    assert f.shifted(5).coeffs == (0, 0, 0)
    with pytest.raises(ValueError):
        f.shifted(-1)


def test_window_never_grows():
    f = TruncatedSeries((1, 1, 1, 1))
    g = TruncatedSeries((1, 1))
    assert (f * g).order == 1
    assert (f + g).order == 1
