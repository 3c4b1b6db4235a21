"""
Tests for the hf-surgery command line tool.
"""

import os

import pytest
import yaml

from hf_surgery.surgery_tool import run, get_args, EXIT_OK, EXIT_CHECK_FAILED, \
    EXIT_BAD_INPUT
from hf_surgery.utils import example_path, load_document

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


def test_compute_table(capsys):
    assert run(['compute', '--input', example_path('K0'), '--slope=-4']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'tau_{0/1}(1)' in out
    assert '-3/4' in out


def test_compute_doc(capsys):
    status = run(['compute', '--input', example_path('trefoil'), '--slope', '1',
                  '--format', 'doc'])
    assert status == EXIT_OK
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc['kind'] == 'manifold'
    assert doc['h1_order'] == 1
    assert doc['structures'][0]['d'] == '-2/1'


def test_compute_several_slopes(capsys):
    status = run(['compute', '--input', example_path('unknot'), '--slope', '1',
                  '--slope', '7/3', '--format', 'doc'])
    assert status == EXIT_OK
    docs = list(yaml.safe_load_all(capsys.readouterr().out))
    assert [d['slope'] for d in docs] == ['1/1', '7/3']


def test_compute_unknot_gives_lens_space(capsys):
    status = run(['compute', '--input', example_path('unknot'), '--slope', '7/3',
                  '--format', 'doc'])
    assert status == EXIT_OK
    doc = yaml.safe_load(capsys.readouterr().out)
    assert len(doc['structures']) == 7
    assert doc['total_reduced_dim'] == 0
    for s in doc['structures']:
        assert s['summands'] == [{'kind': 'tower', 'd': s['d']}]


def test_compute_single_structure(capsys):
    status = run(['compute', '--input', example_path('K0'), '--slope=-4', '--spinc', '1',
                  '--format', 'doc'])
    assert status == EXIT_OK
    doc = yaml.safe_load(capsys.readouterr().out)
    assert [s['index'] for s in doc['structures']] == [1]


def test_output_is_deterministic(tmp_path):
    outputs = []
    for name in ('a.yaml', 'b.yaml'):
        path = str(tmp_path / name)
        assert run(['compute', '--input', example_path('K1'), '--slope=-4',
                    '--format', 'doc', '--out', path, '--pool-size', '3']) == EXIT_OK
        with open(path) as f:
            outputs.append(f.read())
    assert outputs[0] == outputs[1]


def test_bad_documents(tmp_path):
    path = tmp_path / 'bad_schema.yaml'
    path.write_text('schema: 2\nkind: knot\n')
    assert run(['compute', '--input', str(path), '--slope', '1']) == EXIT_BAD_INPUT

    with open(example_path('trefoil')) as f:
        doc = yaml.safe_load(f)
    doc['alexander'] = [1, 1]
    path = tmp_path / 'invalid.yaml'
    path.write_text(yaml.safe_dump(doc))
    assert run(['compute', '--input', str(path), '--slope', '1']) == EXIT_BAD_INPUT

    missing = str(tmp_path / 'missing.yaml')
    assert run(['compute', '--input', missing, '--slope', '1']) == EXIT_BAD_INPUT


def test_obstruct(capsys):
    status = run(['obstruct', '--input', example_path('K0'),
                  '--input', example_path('teragaito'), '--slope=-4', '--format', 'doc'])
    assert status == EXIT_CHECK_FAILED
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc['c'] == '5/2'
    assert doc['n'] == 6
    assert doc['slopes'][0]['matches'] is True


def test_obstruct_candidate_slopes(capsys):
    run(['obstruct', '--input', example_path('K0'), '--input', example_path('teragaito')])
    out = capsys.readouterr().out
    assert 'n(Y) = 6' in out
    for slope in ('4/1', '4/3', '4/5', '-4/1', '-4/3', '-4/5'):
        assert f"slope {slope}:" in out


def test_enumerate(capsys):
    status = run(['enumerate', '--input', example_path('teragaito'),
                  '--max-candidates', '3'])
    assert status == EXIT_OK
    assert capsys.readouterr().out.startswith('c(Y) = 5/2')


def test_recover(tmp_path, capsys):
    path = str(tmp_path / 't52.yaml')
    assert run(['compute', '--input', example_path('T52'), '--slope=-3/2',
                '--format', 'doc', '--out', path]) == EXIT_OK
    assert run(['recover', '--input', path, '--format', 'doc']) == EXIT_OK
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc['alexander'] == [1, -1, 1]

    status = run(['recover', '--input', example_path('teragaito'), '--slope=-4',
                  '--format', 'doc'])
    assert status == EXIT_CHECK_FAILED
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc['error'] == 'not-an-L-space-knot-surgery'


def test_oracle(capsys):
    status = run(['oracle', '--input', example_path('trefoil'), '--slope', '3'])
    assert status == EXIT_OK
    assert capsys.readouterr().out.count('pass') == 3


def test_config_overrides_defaults(tmp_path, capsys):
    config = tmp_path / 'config.yaml'
    config.write_text('oracle:\n  characteristic: 3\n  seed: 11\npool_size: 1\n')
    status = run(['--config', str(config), 'oracle', '--input', example_path('K0'),
                  '--slope=-4', '--spinc', '1', '--format', 'doc'])
    assert status == EXIT_OK
    doc = yaml.safe_load(capsys.readouterr().out)
    assert doc['reports'][0]['characteristic'] == 3
    assert doc['reports'][0]['seed'] == 11


def test_examples(tmp_path):
    first, second = str(tmp_path / 'one'), str(tmp_path / 'two')
    assert run(['examples', '--out', first]) == EXIT_OK
    assert run(['examples', '--out', second, '--pool-size', '2']) == EXIT_OK
    names = sorted(os.listdir(first))
    assert names == sorted(os.listdir(second))
    assert 'K0_m4_1.yaml' in names
    assert 'T92_1_1.yaml' in names
    assert 'teragaito_obstructions.yaml' in names
    for name in names:
        with open(os.path.join(first, name)) as a, open(os.path.join(second, name)) as b:
            assert a.read() == b.read()

    golden = sorted(os.listdir(GOLDEN_DIR))
    assert set(golden) <= set(names)
    for name in golden:
        assert load_document(os.path.join(first, name)) == \
            load_document(os.path.join(GOLDEN_DIR, name)), name

    obstructions = load_document(os.path.join(first, 'teragaito_obstructions.yaml'))
    assert (obstructions['c'], obstructions['n'], obstructions['genus_bound']) == \
        ('5/2', 6, 7)
    assert [e['slope'] for e in obstructions['slopes']] == \
        ['4/1', '4/3', '4/5', '-4/1', '-4/3', '-4/5']
    assert obstructions['slopes'][3]['matches'] is True
    candidates = load_document(os.path.join(first, 'teragaito_alexander_candidates.yaml'))
    assert candidates['c'] == '5/2'
    assert candidates['torsion_length'] == 7
    assert candidates['count'] == len(candidates['candidates'])


@pytest.mark.parametrize('argv', [
    ['compute', '--slope', '1'],
    ['compute', '--input', 'x.yaml', '--slope', '1', '--slope', '2', '--spinc', '0'],
    ['oracle', '--trials', '3', '--input', 'x.yaml'],
    ['compute', '--input', 'x.yaml', '--slope', '1/0'],
])
def test_argument_errors(argv):
    with pytest.raises(SystemExit):
        get_args(argv)


def test_no_command_prints_help(capsys):
    assert run([]) == EXIT_OK
    assert 'usage' in capsys.readouterr().out
