"""
Tests for the closed-form surgery engine: the K_0 surgery with the same
HF^+ as the Teragaito manifold, the K_n family, lens spaces from the
unknot, the rank formula and the grading recurrences of the cone.
"""

from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from hf_surgery.floer import Slope, GradedModule, VHData, ReducedGroupTable, \
    KnotSurgeryModel, full_surgery, positive_surgery, negative_surgery, \
    zero_surgery, reduced_rank_formula, d_invariant_profile, lspace_slope, \
    cone_slots, lens_d, unknot_model, trefoil_model, torus_two_model, \
    kn_family_model, teragaito_manifold, random_model, validate, mirror, \
    mirror_is_exact, WrongDispatchError, InconsistentModelError, DomainError


def slopes(max_p=7, max_q=4):
    return st.tuples(st.integers(-max_p, max_p).filter(lambda p: p != 0),
                     st.integers(1, max_q)) \
        .filter(lambda pq: gcd(*pq) == 1) \
        .map(lambda pq: Slope(*pq))


def test_k0_minus_four_matches_teragaito():
    y = full_surgery(kn_family_model(0), Slope(-4))
    target = teragaito_manifold()
    assert y.h1_order == 4
    assert [s.module for s in y.structures] == [s.module for s in target.structures]
    assert y.d_invariants() == [Fraction(-3, 4), 0, Fraction(1, 4), 0]
    assert y.structure(1).module == GradedModule([0], [(0, 1)])
    assert y.total_reduced_dim == 2
    assert y.u_exponent() == 1


@pytest.mark.parametrize('n', [0, 1, 2])
def test_kn_family(n):
    model = kn_family_model(n)
    assert validate(model) == []
    assert model.genus == 2 * n + 2
    torsion = [model.t(k) for k in range(model.genus + 1)]
    assert torsion == [-1 if k == 2 * n + 1 else 0 for k in range(model.genus + 1)]
    assert full_surgery(model, Slope(-4)).total_reduced_dim == 2 == model.delta


def test_k0_alexander_polynomial():
    assert kn_family_model(0).alex.coefficients() == [-1, 2, -1]


def test_unknot_surgeries_are_lens_spaces():
    unknot = unknot_model()
    for p in range(-10, 11):
        for q in range(1, 6):
            if p == 0 or gcd(p, q) != 1:
                continue
            y = full_surgery(unknot, Slope(p, q))
            assert y.is_lspace()
            assert [s.module for s in y.structures] == \
                [GradedModule([lens_d(p, q, i)]) for i in range(abs(p))]


def test_trefoil_surgeries():
    trefoil = trefoil_model()
    poincare = full_surgery(trefoil, Slope(1))
    assert poincare.structures[0].module == GradedModule([-2])
    minus_one = full_surgery(trefoil, Slope(-1))
    assert minus_one.structures[0].d == 0
    assert minus_one.total_reduced_dim == 1
    zero = full_surgery(trefoil, Slope(0))
    assert zero.h1_order == 0
    assert [s.index for s in zero.structures] == [0]
    assert zero.structures[0].module == GradedModule([Fraction(-1, 2), Fraction(-3, 2)])


def test_zero_surgery_on_k0():
    y = full_surgery(kn_family_model(0), Slope(0))
    assert [s.index for s in y.structures] == [-1, 0, 1]
    assert y.structure(1).z2 == {0: 0, 1: 1}
    assert y.structure(-1).z2 == {0: 0, 1: 1}
    assert y.structure(0).module == GradedModule([Fraction(-1, 2), Fraction(1, 2)])
    assert y.total_reduced_dim == 2
    with pytest.raises(DomainError):
        zero_surgery(kn_family_model(0), Fraction(1, 2))


def test_lspace_slopes():
    trefoil, t52 = trefoil_model(), torus_two_model(5)
    assert lspace_slope(trefoil, Slope(1))
    assert not lspace_slope(trefoil, Slope(1, 2))
    assert lspace_slope(t52, Slope(3))
    assert not lspace_slope(t52, Slope(2))
    assert not lspace_slope(kn_family_model(0), Slope(100))


def test_dispatch():
    trefoil = trefoil_model()
    with pytest.raises(WrongDispatchError):
        positive_surgery(trefoil, -4, 1, 0)
    with pytest.raises(WrongDispatchError):
        negative_surgery(trefoil, 4, 1, 0)
    with pytest.raises(DomainError):
        positive_surgery(trefoil, 4, 1, 4)
    with pytest.raises(DomainError):
        reduced_rank_formula(trefoil, Slope(0))


def test_missing_cancelling_summand():
    model = KnotSurgeryModel(VHData.from_tail([1]), ReducedGroupTable(),
                             mirror_v=VHData.from_tail([1]))
    with pytest.raises(InconsistentModelError):
        negative_surgery(model, -1, 1, 0)


@pytest.mark.parametrize('model', [unknot_model(), kn_family_model(0), kn_family_model(1)])
@pytest.mark.parametrize('slope', [Slope(-1), Slope(-2), Slope(-4), Slope(-3, 2),
                                   Slope(-5, 3), Slope(-7)])
def test_orientation_reversal(model, slope):
    assert mirror_is_exact(model)
    negative = full_surgery(model, slope)
    positive = full_surgery(mirror(model), -slope)
    assert negative.d_invariants() == [-d for d in positive.d_invariants()]
    assert negative.total_reduced_dim == positive.total_reduced_dim


def test_mirror_of_lspace_knot_is_not_exact():
    assert not mirror_is_exact(trefoil_model())
    assert not mirror_is_exact(torus_two_model(5))
    assert validate(mirror(trefoil_model()))


def test_d_invariant_profile():
    profile = d_invariant_profile(kn_family_model(0), Slope(-4))
    assert [e.d for e in profile] == [Fraction(-3, 4), 0, Fraction(1, 4), 0]
    assert {e.case for e in profile} == {'N'}
    t52 = torus_two_model(5)
    assert [e.case for e in d_invariant_profile(t52, Slope(2))] == ['V', 'V']
    assert d_invariant_profile(t52, Slope(2))[0].d == lens_d(2, 1, 0) - 2


def test_pool_matches_inline():
    t52 = torus_two_model(5)
    assert full_surgery(t52, Slope(5, 2), pool_size=3) == full_surgery(t52, Slope(5, 2))


def test_k0_cone_slots():
    slots = {s.n: s for s in cone_slots(kn_family_model(0), Slope(-4), 1, range(-1, 3))}
    assert [slots[n].k for n in range(-1, 3)] == [5, 1, -3, -7]
    assert slots[1].b_grading == 0
    assert slots[0].a_grading == -1


@given(st.integers(0, 2 ** 32 - 1), slopes())
@settings(max_examples=500, deadline=None)
def test_rank_identity(seed, slope):
    model = random_model(np.random.default_rng(seed))
    y = full_surgery(model, slope)
    assert y.total_reduced_dim == reduced_rank_formula(model, slope)
    assert y.u_exponent() <= max(model.genus, model.v(0))
    assert y.d_invariants() == [e.d for e in d_invariant_profile(model, slope)]


@given(st.integers(0, 2 ** 32 - 1), slopes())
@settings(max_examples=100, deadline=None)
def test_grading_recurrence(seed, slope):
    model = random_model(np.random.default_rng(seed))
    p, q = slope
    v, h = model.v, model.h
    for i in slope.spinc_range():
        slots = {s.n: s for s in cone_slots(model, slope, i, range(-4, 5))}
        base = slots[0].a_grading
        if p > 0:
            assert base == lens_d(p, q, i) - 2 * v(i // q)
            if v(i // q) >= h((i - p) // q):
                assert positive_surgery(model, p, q, i).d == base
        else:
            assert base == lens_d(p, q, i) + 1 - 2 * h(i // q)
        for n in range(1, 5):
            plus = base + 2 * sum(h((i + k * p) // q) - v((i + (k + 1) * p) // q)
                                  for k in range(n))
            minus = base + 2 * sum(v((i - k * p) // q) - h((i - (k + 1) * p) // q)
                                   for k in range(n))
            assert slots[n].a_grading == plus
            assert slots[-n].a_grading == minus


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=50, deadline=None)
def test_zero_surgery_structures(seed):
    model = random_model(np.random.default_rng(seed))
    y = full_surgery(model, Slope(0))
    g = model.genus
    assert [s.index for s in y.structures] == (list(range(-(g - 1), g)) if g else [0])
    assert len(y.structure(0).module.towers) == 2
