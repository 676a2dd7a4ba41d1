#!/usr/bin/env python3

import os
import json

import pytest

from mintk.scenario import Scenario, ScnReader, Builder, run_scenario, main, task_types

cwd = os.path.dirname(os.path.abspath(__file__))


def test_alternating():
    report = run_scenario('example_4_9a')
    assert report.status == 'verified'
    assert report.exit_code == 0
    lines = report.to_text().splitlines()
    assert lines[0] == '== alternating (minors) =='
    assert '  I(n=1, r=1) = m [certified]' in lines
    assert '  I(n=2, r=1) = (x^2) ⊊ m [certified]' in lines
    assert lines[-2] == 'alternating: verified'
    assert lines[-1] == 'scenario example_4_9a, seed 1: verified'

    records = [json.loads(line) for line in report.to_records().splitlines()]
    assert len(records) == 13
    assert [rec['n'] for rec in records[:12]] == list(range(1, 13))
    assert records[1]['ideal'] == '(x^2)'
    assert records[-1]['summary'] == 'verified'
    assert records[-1]['type'] == 'minors'


def test_artinian_fiber_product():
    report = run_scenario('fp_artinian_cyclic')
    first, later = report.results
    assert first.status == 'verified'
    assert later.status == 'verified'
    assert report.exit_code == 0


def test_empty():
    report = run_scenario('empty', seed=5)
    assert report.results == []
    assert report.seed == 5
    assert report.to_text() == ''
    assert report.to_records() == ''
    assert report.exit_code == 0


def test_failures():
    report = run_scenario(os.path.join(cwd, 'files', 'wrong_expect.scn'))
    wrong, unknown = report.results
    assert wrong.status == 'falsified'
    assert '  n = 1: expected (x^2)' in wrong.lines
    assert '  n = 2: expected (x^2)' not in wrong.lines
    assert unknown.status == 'error'
    assert unknown.lines == ['ERROR unknown: Unknown task type nonsense']
    assert report.status == 'error'
    assert report.exit_code == 1


def test_builder_over_base():
    scn = Scenario.open(os.path.join(cwd, 'files', 'deform_base.scn'))
    builder = Builder(scn, degree_cap=9)
    assert builder.seed == 7
    assert builder.degree_cap == 9
    pair = builder.pair('R')
    assert builder.ring('R') is pair.total
    Q = builder.module('Q')
    assert Q.ring is pair.base
    assert Q.name == 'Q'
    assert builder.module('kR').ring is pair.total
    res = builder.resolution('Q', 4)
    assert res.betti == [1] * 5
    assert builder.resolution('Q', 2) is res
    with pytest.raises(ValueError):
        builder.pair('B')


def test_shamash_task():
    report = run_scenario(os.path.join(cwd, 'files', 'deform_base.scn'))
    result = report.results[0]
    assert result.status == 'verified'
    assert result.summary['betti'] == [1, 2, 2, 2, 2]
    assert result.summary['sigma_nonzero'] == []
    assert '  sigma vanishes' in result.lines


def test_task_errors():
    scn = ScnReader.from_string('ring R = plain { variables = [x], relations = [x^2] }\n'
                                'module k = residue { ring = R }\n'
                                'task t = minors { module = k, r = 1 }\n')
    report = run_scenario(scn)
    assert report.results[0].status == 'error'
    assert report.results[0].summary['error'] == 'Missing integer parameter n_max'


def test_main(capsys):
    path = os.path.join(cwd, 'files', 'wrong_expect.scn')
    assert main(['run', 'example_4_9a']) == 0
    out = capsys.readouterr().out
    assert out.endswith('scenario example_4_9a, seed 1: verified\n')

    assert main(['run', 'example_4_9a', '--report', 'structured', '--seed', '3']) == 0
    out = capsys.readouterr().out
    assert all(json.loads(line)['task'] == 'alternating' for line in out.splitlines())

    assert main(['run', path]) == 1
    assert main(['run', 'no_such_scenario']) == 1
    assert capsys.readouterr().out.endswith('ERROR no_such_scenario: Scenario file not found: no_such_scenario\n')

    duplicate = os.path.join(cwd, 'files', 'duplicate_name.scn')
    assert main(['run', duplicate]) == 1
    assert capsys.readouterr().out == 'ERROR %s: line 3, column 1: R declared twice\n' % duplicate

    with pytest.raises(SystemExit):
        main([])


def test_task_types():
    types = task_types()
    assert types == sorted(types)
    for t in ['resolve', 'betti', 'minors', 'exactness', 'moore', 'verify_fp', 'verify_sg', 'socle_witness',
              'shamash', 'verify_lift', 'property_suite', 'minors_in_mr']:
        assert t in types
