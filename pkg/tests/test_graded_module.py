"""
Tests for the graded F[U]-modules: summands, the grading table, the
U-annihilation exponent and the Z/2 gradings.
"""

from fractions import Fraction

import pytest

from hf_surgery.floer import TowerSummand, FiniteCyclic, GradedModule, \
    direct_sum, u_annihilation_exponent, z2_euler_characteristic, z2_dimensions, \
    InvalidGradingError, SchemaError
from hf_surgery.floer.graded_module import check_denominator


def test_finite_cyclic_gradings():
    f = FiniteCyclic(Fraction(-1, 2), 3)
    assert f.gradings() == [Fraction(-1, 2), Fraction(3, 2), Fraction(7, 2)]
    assert f.top == Fraction(7, 2)
    assert str(f) == "tau_{-1/2}(3)"
    assert str(TowerSummand(0)) == "T_{0/1}"


def test_summands_refuse_bad_input():
    with pytest.raises(InvalidGradingError):
        FiniteCyclic(0, 0)
    with pytest.raises(InvalidGradingError):
        FiniteCyclic(0, 1.0)
    with pytest.raises(InvalidGradingError):
        TowerSummand(0.25)


def test_module_equality_ignores_order():
    a = GradedModule([0], [(1, 2), (Fraction(1, 2), 1)])
    b = GradedModule([TowerSummand(0)], [FiniteCyclic(Fraction(1, 2), 1),
                                         FiniteCyclic(1, 2)])
    assert a == b
    assert hash(a) == hash(b)
    assert a.reduced_dim == 3
    assert a.d == 0


def test_d_needs_exactly_one_tower():
    assert GradedModule([], [(0, 1)]).d is None
    assert GradedModule([Fraction(-1, 2), Fraction(1, 2)]).d is None


def test_direct_sum():
    a = GradedModule([0], [(0, 1)])
    b = GradedModule([], [(2, 1)])
    assert direct_sum(a, b) == GradedModule([0], [(0, 1), (2, 1)])
    assert a + b == direct_sum(a, b)


def test_grading_table():
    m = GradedModule([Fraction(-3, 4)], [(Fraction(5, 4), 2)])
    table = m.grading_table(ceiling=Fraction(5, 4))
    assert table[Fraction(-3, 4)] == 1
    assert table[Fraction(1, 4)] == 0
    assert table[Fraction(5, 4)] == 2
    assert table[Fraction(13, 4)] == 0
    # without a ceiling only the reduced part is listed
    assert sum(m.grading_table().values()) == 2


def test_u_annihilation_exponent():
    assert u_annihilation_exponent(GradedModule([0])) == 0
    assert u_annihilation_exponent(GradedModule([0], [(0, 1), (2, 3)])) == 3


def test_z2_gradings():
    m = GradedModule([0], [(0, 2), (1, 1)])
    assert z2_dimensions(m, 0) == {0: 2, 1: 1}
    assert z2_dimensions(m, 0, flip=True) == {0: 1, 1: 2}
    assert z2_euler_characteristic(m, 0) == 1
    with pytest.raises(InvalidGradingError):
        z2_dimensions(m, Fraction(1, 2))


def test_list_roundtrip_and_schema_errors():
    m = GradedModule([Fraction(1, 4)], [(Fraction(-7, 4), 2)])
    assert GradedModule.from_list(m.to_list()) == m
    with pytest.raises(SchemaError):
        GradedModule.from_list([{'kind': 'tower'}])
    with pytest.raises(SchemaError) as e:
        GradedModule.from_list([{'kind': 'ladder', 'd': '0/1'}], 'structures[2].summands')
    assert e.value.field == 'structures[2].summands[0]'


def test_check_denominator():
    check_denominator(Fraction(1, 4), 16)
    with pytest.raises(InvalidGradingError):
        check_denominator(Fraction(1, 3), 16)
