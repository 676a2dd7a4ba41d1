#!/usr/bin/env python3

import os

import pytest

from mintk.scenario import Scenario, ScnReader, Declaration
from mintk.errors import ScenarioParseError, NameClashError

cwd = os.path.dirname(os.path.abspath(__file__))

TEXT = '''# cubic ring
setting field = 7
setting seed = -3
ring R = plain { variables = [x], relations = [x^3] }
module k = residue { ring = R }
task t = minors { module = k, n_max = 12, r = 1, expect = ["(x)", "(x^2)"] }
'''


def test_parse():
    scn = ScnReader.from_string(TEXT, 'cubic')
    assert scn.name == 'cubic'
    assert scn.get_settings()['field'] == 7
    assert scn.seed == -3
    assert scn.degree_cap is None
    assert list(scn.rings) == ['R']
    assert scn.rings['R'].body == {'variables': ['x'], 'relations': ['x^3']}
    assert scn.rings['R'].line == 4
    assert scn.modules['k'].type == 'residue'
    task = scn.tasks[0]
    assert task.kind == 'task'
    assert task.body == {'module': 'k', 'n_max': 12, 'r': 1, 'expect': ['(x)', '(x^2)']}


def test_multiline_block():
    scn = ScnReader.from_string('ring S = plain {\n  variables = [x, y]\n  relations = [x^2 - y^2, x*y]\n}\n')
    assert scn.rings['S'].body['relations'] == ['x^2 - y^2', 'x*y']


def _parse_error(text):
    with pytest.raises(ScenarioParseError) as e:
        ScnReader.from_string(text)
    return e.value


def test_errors():
    e = _parse_error('# comment\nring R = plain { variables = [x] relations = [x^2] }\n')
    assert (e.line, e.column) == (2, 34)
    assert 'Expect "," or "}"' in str(e)

    e = _parse_error('ring R = plain { variables = [x] }\nmodule k = residue { ring = S }\n')
    assert (e.line, e.column) == (2, 1)
    assert 'undeclared ring S' in str(e)

    e = _parse_error('setting seed = 3 }\n')
    assert (e.line, e.column) == (1, 18)

    assert _parse_error('\n\nfoo R = plain\n').line == 3
    assert 'Unknown ring type' in str(_parse_error('ring R = polynomial { variables = [x] }'))
    assert 'Invalid setting' in str(_parse_error('setting colour = 3'))
    assert 'expects int' in str(_parse_error('setting seed = abc'))
    assert 'Unterminated string' in str(_parse_error('task t = minors { expect = ["(x)\n"] }'))
    assert 'Duplicated key' in str(_parse_error('ring R = plain { variables = [x], variables = [y] }'))
    assert 'Missing value' in str(_parse_error('ring R = plain { variables = }'))

    e = _parse_error('ring R = plain { variables = [x] }\nmodule R = residue { ring = R }\n')
    assert (e.line, e.column) == (2, 1)
    assert str(e) == 'line 2, column 1: R declared twice'
    e = _parse_error('task t = resolve { }\n  task t = betti { }\n')
    assert (e.line, e.column) == (2, 3)
    assert 'Task t declared twice' in str(e)


def test_declare_twice():
    scn = ScnReader.from_string(TEXT)
    with pytest.raises(NameClashError):
        scn.declare(Declaration('module', 'k', 'residue', {'ring': 'R'}))


def test_open():
    scn = Scenario.open('example_4_9a')
    assert scn.name == 'example_4_9a'
    assert [t.name for t in scn.tasks] == ['alternating']
    scn = Scenario.open(os.path.join(cwd, 'files', 'deform_base.scn'))
    assert scn.field == 32003
    assert scn.rings['B'].body == {'variables': ['x', 'y'], 'relations': ['x*y']}
    assert scn.modules['Q'].body['over'] == 'base'
    with pytest.raises(FileNotFoundError):
        Scenario.open('no_such_scenario')


def test_bundled():
    names = [os.path.basename(p) for p in Scenario.bundled()]
    assert names == sorted(names)
    assert 'example_4_9a.scn' in names
    assert 'empty.scn' in names
    for path in Scenario.bundled():
        Scenario.open(path)
