"""
Tests for the schema 1 documents, the bundled example data and the table
renderer.
"""

import yaml

import pytest

from hf_surgery.floer import Slope, full_surgery, kn_family_model, trefoil_model, \
    torus_two_model, unknot_model, teragaito_manifold, knot_to_document, \
    knot_from_document, manifold_to_document, manifold_from_document, \
    render_table, validate, SchemaError
from hf_surgery.utils import load_document, dump_document, example_path


@pytest.mark.parametrize('name, n', [('K0', 0), ('K1', 1), ('K2', 2)])
def test_bundled_kn_models(name, n):
    model = knot_from_document(load_document(example_path(name)))
    assert model == kn_family_model(n)
    assert model.name == name
    assert validate(model) == []


@pytest.mark.parametrize('name, expected', [('trefoil', trefoil_model()),
                                            ('T52', torus_two_model(5)),
                                            ('unknot', unknot_model())])
def test_bundled_lspace_models(name, expected):
    model = knot_from_document(load_document(example_path(name)))
    assert (model.vh, model.red, model.alex, model.mirror_v) == \
        (expected.vh, expected.red, expected.alex, expected.mirror_v)
    assert validate(model) == []


def test_bundled_teragaito():
    y = manifold_from_document(load_document(example_path('teragaito')))
    assert y == teragaito_manifold()
    assert y.name == 'teragaito'


def test_knot_roundtrip():
    for model in (kn_family_model(1), trefoil_model(), unknot_model()):
        doc = yaml.safe_load(dump_document(knot_to_document(model)))
        assert knot_from_document(doc) == model


def test_alexander_as_mapping():
    doc = knot_to_document(kn_family_model(0))
    doc['alexander'] = {0: -1, 1: 2, 2: -1}
    model = knot_from_document(yaml.safe_load(dump_document(doc)))
    assert model == kn_family_model(0)
    assert validate(model) == []

    doc['alexander'] = {0: -1, 1: 'two', 2: -1}
    with pytest.raises(SchemaError) as e:
        knot_from_document(doc)
    assert e.value.field == 'alexander'


def test_manifold_roundtrip():
    for model, slope in ((kn_family_model(0), Slope(-4)), (torus_two_model(5), Slope(5, 2)),
                         (kn_family_model(0), Slope(0))):
        y = full_surgery(model, slope)
        text = dump_document(manifold_to_document(y))
        assert text == dump_document(manifold_to_document(full_surgery(model, slope)))
        back = manifold_from_document(yaml.safe_load(text))
        assert back == y
        assert back.slope == slope


def test_rationals_are_printed_in_lowest_terms():
    doc = manifold_to_document(full_surgery(unknot_model(), Slope(7, 3)))
    assert doc['slope'] == '7/3'
    for entry in doc['structures']:
        num, den = entry['d'].split('/')
        assert int(den) > 0


def test_knot_schema_errors():
    doc = knot_to_document(trefoil_model())
    del doc['genus']
    with pytest.raises(SchemaError) as e:
        knot_from_document(doc)
    assert e.value.field == 'genus'

    doc = knot_to_document(trefoil_model())
    doc['kind'] = 'manifold'
    with pytest.raises(SchemaError):
        knot_from_document(doc)

    doc = knot_to_document(trefoil_model())
    doc['V_window'] = [1, 0]
    with pytest.raises(SchemaError):
        knot_from_document(doc)

    doc = knot_to_document(kn_family_model(0))
    doc['reduced'] = {1: [[1]]}
    with pytest.raises(SchemaError) as e:
        knot_from_document(doc)
    assert e.value.field == 'reduced.1'


def test_manifold_schema_errors():
    doc = manifold_to_document(teragaito_manifold())
    doc['total_reduced_dim'] = 3
    with pytest.raises(SchemaError) as e:
        manifold_from_document(doc)
    assert e.value.field == 'total_reduced_dim'

    doc = manifold_to_document(teragaito_manifold())
    doc['structures'][2]['d'] = 0.25
    with pytest.raises(SchemaError) as e:
        manifold_from_document(doc)
    assert e.value.field == 'structures[2].d'

    doc = manifold_to_document(teragaito_manifold())
    del doc['structures'][0]['summands']
    with pytest.raises(SchemaError):
        manifold_from_document(doc)


def test_render_table():
    text = render_table(full_surgery(kn_family_model(0), Slope(-4)))
    lines = text.splitlines()
    assert len(lines) == 6
    assert '-3/4' in lines[2]
    assert 'tau_{0/1}(1)' in lines[3]
    zero = render_table(full_surgery(trefoil_model(), Slope(0)))
    assert 'T_{-1/2}' in zero
