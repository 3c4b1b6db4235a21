"""
Tests for the Alexander polynomial enumeration.
"""

from fractions import Fraction

import pytest

from hf_surgery.floer import AlexanderPolynomial, teragaito_manifold
from hf_surgery.obstructions import enumerate_from_bound, \
    enumerate_alternating_alexander
from hf_surgery.obstructions.alexander_search import torsion_sequences, \
    murasugi_nonvanishing, no_three_zero_torsion


def brute_force(c):
    # a_L, a_{L-1}, ... are chosen in turn; fixing a_m fixes
    # t_{m-1} = sum_j j a_{m-1+j}, and |a_i| <= |t_{i-1}| + 2|t_i| + |t_{i+1}| <= 2c
    length = int(3 * c)
    bound = int(2 * c)
    found = set()

    def extend(tail, spent):
        if len(tail) == length:
            alex = AlexanderPolynomial([1 - 2 * sum(tail)] + tail)
            if murasugi_nonvanishing(alex) and no_three_zero_torsion(alex):
                found.add(alex)
            return
        for a in range(-bound, bound + 1):
            head = [a] + tail
            t = sum(j * x for j, x in enumerate(head, start=1))
            if spent + abs(t) <= c:
                extend(head, spent + abs(t))

    extend([], 0)
    return found


def test_small_bound_gives_trivial_polynomial():
    for c in (Fraction(0), Fraction(1, 2), Fraction(2, 3)):
        assert enumerate_from_bound(c).polynomials() == [AlexanderPolynomial.one()]


def test_bound_one():
    polys = enumerate_from_bound(Fraction(1)).polynomials()
    assert AlexanderPolynomial([-1, 1]) in polys
    assert AlexanderPolynomial([3, -1]) in polys
    assert AlexanderPolynomial([1, 0, -2]) not in polys
    assert polys[0] == AlexanderPolynomial.one()


@pytest.mark.parametrize('c', [Fraction(1), Fraction(4, 3), Fraction(3, 2), Fraction(2),
                               Fraction(5, 2), Fraction(3)])
def test_agrees_with_brute_force(c):
    assert set(enumerate_from_bound(c).polynomials()) == brute_force(c)


def test_candidates_pass_the_filters():
    result = enumerate_from_bound(Fraction(2))
    assert not result.truncated
    for cand in result.candidates:
        assert cand.alexander.is_normalized()
        assert murasugi_nonvanishing(cand.alexander)
        assert no_three_zero_torsion(cand.alexander)
        assert sum(abs(t) for t in cand.torsion) <= 2
        assert cand.determinant == cand.alexander.determinant()


def test_truncation():
    result = enumerate_from_bound(Fraction(1), max_candidates=2)
    assert result.truncated
    assert len(result.candidates) == 2
    assert result.to_dict()['truncated'] is True


def test_torsion_sequences():
    seqs = list(torsion_sequences(2, 1))
    assert len(seqs) == 5
    assert len(set(seqs)) == 5
    assert all(abs(a) + abs(b) <= 1 for a, b in seqs)


def test_teragaito_enumeration_is_finite():
    y = teragaito_manifold()
    result = enumerate_alternating_alexander(y, pool_size=3)
    assert result.length == 7
    assert not result.truncated
    assert result.polynomials() == enumerate_alternating_alexander(y).polynomials()
    doc = result.to_dict()
    assert doc['c'] == '5/2'
    assert doc['count'] == len(result.candidates)
