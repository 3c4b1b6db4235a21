"""
Tests for the ready-made models and the random model generator.
"""

from fractions import Fraction

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from hf_surgery.floer import AlexanderPolynomial, torus_two_model, trefoil_model, \
    unknot_model, kn_family_model, teragaito_manifold, random_model, validate, \
    DomainError


def test_torus_two_models():
    assert torus_two_model(1) == unknot_model()
    assert torus_two_model(3) == trefoil_model()
    t52 = torus_two_model(5)
    assert t52.alex == AlexanderPolynomial([1, -1, 1])
    assert t52.vh.tail() == [1, 1]
    assert torus_two_model(7).vh.tail() == [2, 1, 1]
    for p in (2, -3, 0):
        with pytest.raises(DomainError):
            torus_two_model(p)


def test_kn_family_arguments():
    with pytest.raises(DomainError):
        kn_family_model(-1)
    assert kn_family_model(1).alex == AlexanderPolynomial({0: 1, 2: -1, 3: 2, 4: -1})


def test_teragaito_manifold():
    y = teragaito_manifold()
    assert y.h1_order == 4
    assert y.total_reduced_dim == 2
    assert y.d_invariants() == [Fraction(-3, 4), 0, Fraction(1, 4), 0]


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=200, deadline=None)
def test_random_models_are_valid(seed):
    model = random_model(np.random.default_rng(seed))
    assert validate(model) == []
    assert model.genus <= 5
    assert model.v(0) <= 6


def test_random_model_mirror_shift():
    rng = np.random.default_rng(3)
    model = random_model(rng, max_genus=4, mirror_shift=True)
    while model.genus == 0:
        model = random_model(rng, max_genus=4, mirror_shift=True)
    assert model.mirror_v.v(0) == 1
    assert (2 * model.v(0), 1) in model.red.summands(0)
    plain = random_model(np.random.default_rng(3), mirror_shift=False)
    assert plain.mirror_v is None or plain.mirror_v.v(0) == 0


def test_random_model_is_reproducible():
    a = random_model(np.random.default_rng(11))
    b = random_model(np.random.default_rng(11))
    assert a == b
    assert a.name == b.name
