from __future__ import unicode_literals

import io
import json

import pytest

from hiddensym import workflows
from hiddensym.entry_points.run_hiddensym import main
from hiddensym.enums import REPORT_SCHEMA, ExitCode, Verdict
from hiddensym.main import Session


@pytest.fixture
def session():
    return Session(environ={})


def run(func, *a, **kw):
    out = io.StringIO()
    code = func(*a, out=out, **kw)
    return code, out.getvalue()


def run_json(func, *a, **kw):
    code, text = run(func, *a, **kw)
    return code, json.loads(text)


# Config commands.

def test_defaults(session):
    assert session.seed == 0
    assert session.lie_method == 'auto'
    assert session.strict_family is True
    assert session.messages == []
    assert sorted(session.catalog.graphs) == ['H', 'J', 'K2', 'K3', 'P3']
    assert sorted(session.catalog.families) == ['Q']


def test_set_option(session):
    session.handle_command('set-option seed 17')
    session.handle_command('set-option tolerance 1e-8')
    session.handle_command('set-option lie-method float')
    session.handle_command('set-option census-timings on')
    session.handle_command('set-option strict-family OFF')
    assert session.messages == []
    assert session.seed == 17
    assert session.tolerance == 1e-8
    assert session.lie_method == 'float'
    assert session.census_timings is True
    assert session.strict_family is False


@pytest.mark.parametrize('command,message', [
    ('set-option seed -1', 'Expecting an integer.'),
    ('set-option max-unknowns many', 'Expecting an integer.'),
    ('set-option tolerance 0', 'Expecting a positive number.'),
    ('set-option lie-method symbolic', 'Expecting one of: auto, exact, float.'),
    ('set-option census-timings yes', 'Expecting "on" or "off".'),
    ('set-option colour blue', 'Invalid option: colour'),
    ('frobnicate', 'Invalid command: frobnicate'),
    ('set-option seed', 'Usage: set-option <option> <value>'),
])
def test_invalid_commands(session, command, message):
    session.handle_command(command)
    assert session.messages == [message]


def test_unbalanced_quotes(session):
    session.handle_command('define-graph -N "open X 2 1-2')
    assert len(session.messages) == 1
    assert session.messages[0].startswith('Invalid command')


def test_comments_ignored(session):
    session.handle_command('# set-option seed 5')
    session.handle_command('   ')
    assert session.messages == []
    assert session.seed == 0


def test_aliases(session):
    session.handle_command('set seed 3')
    session.handle_command('graph P4 4 1-2 2-3 3-4')
    session.handle_command('family -l 2 -m 9 R')
    assert session.messages == []
    assert session.seed == 3
    assert session.catalog.get_graph('P4').graph.n == 4
    assert session.catalog.get_family('R').leaf == 2

    session.handle_command('show')
    assert 'set-option seed 3' in session.output
    session.output[:] = []
    session.handle_command('lsg')
    assert 'define-graph P4 4 1-2 2-3 3-4' in session.output
    assert 'define-family -l 2 -m 9 R' in session.output


def test_show_options_round_trip(session):
    session.handle_command('set-option tolerance 2.5e-9')
    session.handle_command('set-option census-timings on')
    session.handle_command('set-option checkpoint-dir "/tmp/with space"')
    session.handle_command('show-options')
    assert 'set-option census-timings on' in session.output
    assert 'set-option checkpoint-dir "/tmp/with space"' in session.output

    other = Session(environ={})
    for line in session.output:
        other.handle_command(line)
    assert other.messages == []
    for option in session.options.values():
        assert option.get_value(other) == option.get_value(session)


def test_define_graph(session):
    session.handle_command('define-graph -b 0 -p 0-2 -N "zero based" T 3 0-1 1-2')
    assert session.messages == []
    entry = session.catalog.get_graph('T')
    assert entry.graph.edge_list() == [(0, 1), (1, 2)]
    assert entry.pairs == ((0, 2), )
    assert entry.labels == {0: 0, 1: 1, 2: 2}
    assert entry.note == 'zero based'


def test_define_options_in_any_order(session):
    session.handle_command('define-graph -N "note first" -b 0 T 3 0-1 1-2')
    session.handle_command('define-family -m 9 -l 2 R')
    session.handle_command('define-graph -p')
    assert session.messages == ['Usage: define-graph [-p <pairs>] [-b <base>] [-N <note>] '
                                '<name> <n> <edges>...']
    assert session.catalog.get_graph('T').note == 'note first'
    assert session.catalog.get_graph('T').graph.edge_list() == [(0, 1), (1, 2)]
    session.handle_command('list-graphs')
    assert 'define-family -l 2 -m 9 R' in session.output


@pytest.mark.parametrize('command', [
    'define-graph X 3 1-2 2-4',
    'define-graph X 3 1-1',
    'define-graph X 3 1+2',
    'define-graph -p 1-1 X 3 1-2',
    'define-graph X three 1-2',
    'define-family -l 0 X',
])
def test_define_errors(session, command):
    session.handle_command(command)
    assert len(session.messages) == 1
    assert 'X' not in session.catalog


def test_list_graphs_round_trip(session):
    session.handle_command('define-graph -N "with spaces" -p 1-4 C4 4 1-2 2-3 3-4 1-4')
    session.handle_command('list-graphs')
    assert 'define-family -l 3 -m 7 Q' in session.output
    (line_h, ) = [l for l in session.output if ' H 7 ' in l]
    assert line_h.startswith('define-graph -p 1-3,2-7,4-6 ')

    other = Session(environ={})
    for line in session.output:
        other.handle_command(line)
    assert other.messages == []
    for name, entry in session.catalog.graphs.items():
        copy = other.catalog.get_graph(name)
        assert copy.graph == entry.graph
        assert copy.pairs == entry.pairs
        assert copy.note == entry.note


def test_source_file(tmpdir):
    config = tmpdir.join('hiddensym.conf')
    config.write('# Test configuration.\n'
                 'set-option seed 11\n'
                 'set-option checkpoint-dir %s\n'
                 'define-graph S 2 1-2\n' % tmpdir)
    session = Session(source_file=str(config), environ={})
    assert session.messages == []
    assert session.seed == 11
    assert session.checkpoint_path('a.jsonl') == str(tmpdir.join('a.jsonl'))
    assert 'S' in session.catalog


def test_missing_source_file(tmpdir):
    session = Session(source_file=str(tmpdir.join('missing.conf')), environ={})
    assert len(session.messages) == 1
    assert session.messages[0].startswith('IOError')


def test_environment_overrides(tmpdir):
    config = tmpdir.join('hiddensym.conf')
    config.write('set-option seed 11\n')
    session = Session(source_file=str(config), environ={
        'HIDDENSYM_SEED': '5',
        'HIDDENSYM_CHECKPOINT_DIR': str(tmpdir),
    })
    assert session.seed == 5
    assert session.checkpoint_dir == str(tmpdir)

    session = Session(environ={'HIDDENSYM_SEED': 'five'})
    assert session.messages == ['Expecting an integer.']


def test_rng_follows_seed(session):
    session.handle_command('set-option seed 9')
    assert session.rng().integers(0, 2 ** 30) == session.rng().integers(0, 2 ** 30)


# Workflows.

def test_analyze(session):
    code, report = run_json(workflows.cmd_analyze, session, 'K2')
    assert code == ExitCode.OK
    assert report['schema'] == REPORT_SCHEMA
    assert report['seed'] == 0
    assert report['n'] == 2
    assert report['aut_order'] == 2
    assert report['verdict'] == Verdict.NOT_UNIVERSAL
    assert report['hidden'] is False
    assert report['generator_set'] == 'full'
    assert set(report['timings']) == set(['automorphisms', 'universality'])
    assert all(isinstance(t, int) and t >= 0 for t in report['timings'].values())


def test_analyze_graph6_with_blocks(session):
    code, report = run_json(workflows.cmd_analyze, session, 'Bw', blocks=True, lie=True)
    assert code == ExitCode.OK
    assert report['graph6'] == 'Bw'
    assert report['aut_order'] == 6
    assert sum(report['block_dims']) == 8
    assert report['lie_dim'] is not None


def test_analyze_edge_list_file(session, tmpdir):
    path = tmpdir.join('p3.txt')
    path.write('# Path.\n3\n0 1\n1 2\n')
    code, report = run_json(workflows.cmd_analyze, session, str(path))
    assert code == ExitCode.OK
    assert report['n'] == 3
    assert report['aut_order'] == 2


def test_analyze_extra(session, tmpdir):
    path = tmpdir.join('extra.txt')
    path.write('1 0 XI\n---\n1 0 IY\n')
    code, report = run_json(workflows.cmd_analyze, session, 'K2', extra_file=str(path))
    assert code == ExitCode.OK
    assert report['extra'] == 2


@pytest.mark.parametrize('graph_text', [
    'not-a-graph~~',
    'A?',
    'unknown.txt',
])
def test_analyze_input_errors(session, graph_text):
    code, report = run_json(workflows.cmd_analyze, session, graph_text)
    assert code == ExitCode.INPUT_ERROR
    assert report['error']
    assert report['seed'] == 0


def test_analyze_disconnected(session):
    # Two isolated vertices.
    code, report = run_json(workflows.cmd_analyze, session, 'A?')
    assert code == ExitCode.INPUT_ERROR
    assert 'disconnected' in report['error']

    code, report = run_json(workflows.cmd_analyze, session, 'A?', allow_disconnected=True)
    assert code == ExitCode.OK


def test_analyze_non_hermitian_extra(session, tmpdir):
    path = tmpdir.join('extra.txt')
    path.write('0 1 XI\n')
    code, report = run_json(workflows.cmd_analyze, session, 'K2', extra_file=str(path))
    assert code == ExitCode.INPUT_ERROR
    assert 'Hermitian' in report['error']


def test_analyze_pretty(session):
    code, text = run(workflows.cmd_analyze, session, 'K2', pretty=True)
    assert code == ExitCode.OK
    assert text.startswith('analyze A_\n')
    assert 'not_universal' in text


def test_verify_result_one(session):
    code, report = run_json(workflows.cmd_verify, session, result1=True)
    assert code == ExitCode.OK
    assert report['passed'] is True
    assert report['construction']
    assert all(report['checks'].values())


def test_verify_strict_family(session):
    code, report = run_json(workflows.cmd_verify, session, result2=True, N=3)
    assert code == ExitCode.INPUT_ERROR
    assert 'N=3' in report['error']


def test_verify_result_two_thirteen_vertices(session):
    code, report = run_json(workflows.cmd_verify, session, result2=True, N=9)
    assert code == ExitCode.OK
    assert report['passed'] is True
    assert report['facts']['n'] == 13


def test_verify_blocks_beyond_matrix_sizes(session):
    code, report = run_json(workflows.cmd_verify, session, result2=True, N=9, blocks=True)
    assert code == ExitCode.UNDECIDED
    assert 'beyond 12 qubits' in report['error']


@pytest.mark.slow
def test_analyze_nine_vertex_catalog_graph(session):
    code, report = run_json(workflows.cmd_analyze, session, 'J')
    assert code in (ExitCode.OK, ExitCode.UNDECIDED)
    assert report['n'] == 9
    assert report['commutant_dim'] is not None
    assert report['hidden'] == (report['commutant_dim'] > report['aut_span_dim'])


def test_verify_nothing(session):
    code, report = run_json(workflows.cmd_verify, session)
    assert code == ExitCode.INPUT_ERROR


def test_census_and_query(session, tmpdir):
    graphs = tmpdir.join('graphs.g6')
    graphs.write('Bw\nCh\nA?\n')
    checkpoint = str(tmpdir.join('small.jsonl'))

    code, report = run_json(workflows.cmd_census, session, input_file=str(graphs),
                            checkpoint=checkpoint)
    assert code == ExitCode.OK
    assert report['total_connected'] == 2
    assert report['total_asymmetric'] == 0
    assert report['checkpoint'] == checkpoint

    code, report = run_json(workflows.cmd_query, session, checkpoint, 'hidden == true')
    assert code == ExitCode.OK
    assert report['count'] == 0
    assert report['records'] == []

    code, text = run(workflows.cmd_query, session, checkpoint, pretty=True)
    assert code == ExitCode.OK
    assert text.startswith('graph6')


def test_census_default_checkpoint(tmpdir):
    session = Session(environ={'HIDDENSYM_CHECKPOINT_DIR': str(tmpdir)})
    code, report = run_json(workflows.cmd_census, session, n=3)
    assert code == ExitCode.OK
    assert report['checkpoint'] == str(tmpdir.join('census-n3.jsonl'))
    assert tmpdir.join('census-n3.jsonl').check()


def test_query_errors(session, tmpdir):
    code, report = run_json(workflows.cmd_query, session, str(tmpdir.join('missing.jsonl')))
    assert code == ExitCode.INPUT_ERROR
    assert report['error']


def test_config(session):
    code, text = run(workflows.cmd_config, session)
    assert code == ExitCode.OK
    lines = text.splitlines()
    assert 'set-option seed 0' in lines
    assert 'set-option strict-family on' in lines
    assert 'define-family -l 3 -m 7 Q' in lines


# Command line.

@pytest.fixture
def home(tmpdir, monkeypatch):
    monkeypatch.setenv('HOME', str(tmpdir))
    monkeypatch.delenv('HIDDENSYM_SEED', raising=False)
    monkeypatch.delenv('HIDDENSYM_CHECKPOINT_DIR', raising=False)
    return tmpdir


def test_main_analyze(home, capsys):
    assert main(['analyze', '--seed', '4', 'K2']) == ExitCode.OK
    report = json.loads(capsys.readouterr().out)
    assert report['seed'] == 4
    assert report['verdict'] == Verdict.NOT_UNIVERSAL


def test_main_config_file(home, capsys):
    home.join('.hiddensym.conf').write('set-option seed 8\n')
    assert main(['config']) == ExitCode.OK
    assert 'set-option seed 8' in capsys.readouterr().out.splitlines()


def test_main_bad_config(home, capsys):
    config = home.join('bad.conf')
    config.write('set-option seed minus-one\n')
    assert main(['-f', str(config), 'config']) == ExitCode.INPUT_ERROR
    assert 'Expecting an integer.' in capsys.readouterr().err


def test_main_bad_seed(home, capsys):
    assert main(['analyze', '--seed', 'x', 'K2']) == ExitCode.INPUT_ERROR


def test_main_verify_result_two_refused(home, capsys):
    assert main(['verify', '--result2', '--N', '3']) == ExitCode.INPUT_ERROR
    assert 'error' in json.loads(capsys.readouterr().out)


def test_main_usage():
    with pytest.raises(SystemExit):
        main(['frobnicate'])
