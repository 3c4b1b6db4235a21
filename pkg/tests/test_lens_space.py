"""
Tests for slopes, the cone index and the lens space correction terms.
"""

from fractions import Fraction
from math import gcd

import pytest

from hf_surgery.floer import Slope, cone_index, lens_d, DomainError
from hf_surgery.floer.lens_space import lens_d_trace


def test_slope_normalization():
    assert Slope(3, -2) == Slope(-3, 2)
    assert Slope.parse('-2/3') == Slope(-2, 3)
    assert Slope.parse(' 5 ') == Slope(5, 1)
    assert str(Slope(-4)) == '-4/1'
    assert -Slope(7, 3) == Slope(-7, 3)
    assert Slope(-5, 2).h1_order == 5
    assert list(Slope(-3, 2).spinc_range()) == [0, 1, 2]


@pytest.mark.parametrize('p, q', [(1, 0), (2, 4), (0, 3)])
def test_bad_slopes(p, q):
    with pytest.raises(DomainError):
        Slope(p, q)


def test_bad_slope_text():
    with pytest.raises(DomainError):
        Slope.parse('one/two')
    with pytest.raises(DomainError):
        Slope(0).spinc_range()
    with pytest.raises(DomainError):
        Slope(3).check_index(3)


def test_cone_index():
    assert cone_index(1, 4, 1, 0) == 1
    assert cone_index(1, -4, 1, 1) == -3
    assert cone_index(2, 3, 2, -1) == -1


def test_lens_d_l41():
    assert [lens_d(4, 1, i) for i in range(4)] == \
        [Fraction(3, 4), Fraction(0), Fraction(-1, 4), Fraction(0)]
    assert [lens_d(-4, 1, i) for i in range(4)] == \
        [Fraction(-3, 4), Fraction(0), Fraction(1, 4), Fraction(0)]


@pytest.mark.parametrize('p', range(1, 11))
def test_lens_d_integer_slopes(p):
    for i in range(p):
        assert lens_d(p, 1, i) == Fraction(-1, 4) + Fraction((2 * i - p) ** 2, 4 * p)


def test_lens_d_sphere():
    for q in range(1, 6):
        assert lens_d(1, q, 0) == 0
        assert lens_d(-1, q, 0) == 0


def test_lens_d_orientation_and_denominator():
    for p in range(1, 11):
        for q in range(1, 6):
            if gcd(p, q) != 1:
                continue
            for i in range(p):
                d = lens_d(p, q, i)
                assert lens_d(-p, q, i) == -d
                assert (4 * p * q) % d.denominator == 0


def test_lens_d_trace():
    assert lens_d_trace(5, 2, 3) == [(5, 2, 3), (2, 1, 1), (1, 0, 0)]
    with pytest.raises(DomainError):
        lens_d(4, 2, 0)
    with pytest.raises(DomainError):
        lens_d(4, 1, 4)
