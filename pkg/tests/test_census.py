from __future__ import unicode_literals

import io
import json

import pytest

from hiddensym import workflows
from hiddensym.algebra.hamiltonians import build_generators
from hiddensym.census.census import CensusRecord, CensusSummary, analyze_graph, run_census
from hiddensym.census.checkpoint import (
    CheckpointError, dump_line, load_line, read_checkpoint, write_checkpoint)
from hiddensym.census.query import CensusFileError, census_query, parse_filter
from hiddensym.enums import CENSUS_SCHEMA, ExitCode
from hiddensym.graphs.graph6 import parse_graph6
from hiddensym.lie.closure import lie_closure
from hiddensym.main import Session
from hiddensym.symmetry.commutant import commutant


@pytest.fixture(scope='module')
def census_six(tmpdir_factory):
    path = str(tmpdir_factory.mktemp('census').join('census-6.jsonl'))
    summary = run_census(6, checkpoint_path=path, flush_every=3)
    return path, summary


def read(path):
    with io.open(path, encoding='utf-8') as f:
        return f.read()


def test_six_vertices(census_six):
    path, summary = census_six
    assert summary.total_connected == 112
    assert summary.total_asymmetric == 8
    assert summary.total_hidden == 2
    assert summary.failed == []
    assert sum(summary.distinct_block_profiles.values()) == 2

    records, stored_summary = read_checkpoint(path)
    assert len(records) == 8
    assert CensusSummary.from_json(stored_summary) == summary
    for r in records.values():
        assert r['schema'] == CENSUS_SCHEMA
        assert r['aut_order'] == 1
        assert r['hidden'] == (r['commutant_dim'] > 1)
        assert (r['block_dims'] is not None) == r['hidden']


def test_sorted_and_independent_of_jobs(census_six, tmpdir):
    path, _ = census_six
    lines = read(path).splitlines()
    keys = [json.loads(l)['graph6'] for l in lines[:-1]]
    assert keys == sorted(keys)
    assert 'summary' in json.loads(lines[-1])

    other = str(tmpdir.join('parallel.jsonl'))
    run_census(6, jobs=2, checkpoint_path=other, flush_every=2)
    assert read(other) == read(path)


def test_resume(census_six, tmpdir):
    path, summary = census_six
    records, _ = read_checkpoint(path)
    partial = str(tmpdir.join('partial.jsonl'))

    keys = sorted(records)
    kept = dict((k, records[k]) for k in keys[:3])
    # A failed record is analyzed again.
    failed = dict(records[keys[3]], error='RuntimeError: interrupted', commutant_dim=None)
    kept[keys[3]] = failed
    write_checkpoint(partial, kept)

    assert run_census(6, checkpoint_path=partial, resume=True) == summary
    assert read(partial) == read(path)


def test_resume_rejects_foreign_checkpoints(tmpdir):
    path = str(tmpdir.join('foreign.jsonl'))
    record = CensusRecord('Bw', 3, 6, 2, False).to_json()
    write_checkpoint(path, {'Bw': record})
    with pytest.raises(CheckpointError):
        run_census(6, checkpoint_path=path, resume=True)


def test_vertex_range():
    with pytest.raises(CheckpointError):
        run_census(9)
    with pytest.raises(CheckpointError):
        run_census(None)


def test_input_file(census_six, tmpdir):
    path, _ = census_six
    hits = [r.graph6 for r in census_query(path, 'hidden == true')]
    source = tmpdir.join('hits.g6')
    # The path graph on four vertices is symmetric and skipped.
    source.write('\n'.join(hits + ['Ch']) + '\n')

    summary = run_census(input_file=str(source))
    assert summary.n == 6
    assert summary.total_connected == 3
    assert summary.total_asymmetric == 2
    assert summary.total_hidden == 2


def test_failed_graphs_are_counted(census_six, tmpdir):
    path, _ = census_six
    hits = sorted(r.graph6 for r in census_query(path, 'hidden == true'))
    source = tmpdir.join('hits.g6')
    source.write('\n'.join(hits) + '\n')

    summary = run_census(input_file=str(source), max_unknowns=1)
    assert summary.total_asymmetric == 2
    assert summary.errored == 2
    assert summary.failed == hits
    assert summary.total_hidden == 0
    assert summary.distinct_block_profiles == {}
    assert summary.to_json()['errored'] == 2
    assert CensusSummary.from_json(summary.to_json()) == summary

    session = Session(environ={})
    session.handle_command('set-option max-unknowns 1')
    out = io.StringIO()
    code = workflows.cmd_census(session, input_file=str(source),
                                checkpoint=str(tmpdir.join('failed.jsonl')), out=out)
    assert code == ExitCode.UNDECIDED
    report = json.loads(out.getvalue())
    assert report['errored'] == 2
    assert report['total_hidden'] == 0


def test_analyze_graph_stores_errors():
    record = analyze_graph('not graph6')
    assert record['error'].startswith('Graph6Error')
    assert not record['hidden']


def test_checkpoint_lines():
    line = dump_line({'graph6': 'Bw', 'n': 3})
    assert load_line(line) == {'graph6': 'Bw', 'n': 3}

    with pytest.raises(CheckpointError):
        load_line(line.replace('"n":3', '"n":4'), 5, 'x.jsonl')
    with pytest.raises(CheckpointError):
        load_line('{"graph6": ', 1)
    with pytest.raises(CheckpointError):
        load_line('[1, 2]', 1)


def test_read_missing_checkpoint(tmpdir):
    assert read_checkpoint(str(tmpdir.join('missing.jsonl'))) == ({}, None)


# Queries.

@pytest.mark.parametrize('expression, count', [
    ('', 8),
    ('hidden == true', 2),
    ('hidden == false', 6),
    ('commutant_dim > 1 and n == 6', 2),
    ('block_dims == null', 6),
    ('n != 6', 0),
])
def test_query(census_six, expression, count):
    path, _ = census_six
    assert len(list(census_query(path, expression))) == count


def test_query_returns_stored_records(census_six):
    path, _ = census_six
    records, _ = read_checkpoint(path)
    queried = list(census_query(path))
    assert queried == [CensusRecord.from_json(records[k]) for k in sorted(records)]


@pytest.mark.parametrize('expression', ['hidden', 'color == red', 'n ~ 6'])
def test_invalid_filters(expression):
    with pytest.raises(CensusFileError):
        parse_filter(expression)


def test_filter_type_mismatch():
    predicate = parse_filter('block_dims > 3')
    assert not predicate({'block_dims': None})


def test_query_files(census_six, tmpdir):
    empty = tmpdir.join('empty.jsonl')
    empty.write('')
    assert list(census_query(str(empty), 'hidden == true')) == []

    with pytest.raises(CensusFileError):
        list(census_query(str(tmpdir.join('missing.jsonl'))))

    path, _ = census_six
    lines = read(path).splitlines()
    lines[1] = lines[1].replace('"aut_order":1', '"aut_order":2')
    corrupt = tmpdir.join('corrupt.jsonl')
    corrupt.write('\n'.join(lines) + '\n')
    with pytest.raises(CensusFileError) as e:
        list(census_query(str(corrupt)))
    assert ':2:' in e.value.message


@pytest.mark.slow
def test_hidden_symmetries_lie_in_the_closure(census_six):
    path, _ = census_six
    for record in census_query(path, 'hidden == true'):
        graph = parse_graph6(record.graph6)
        generators = build_generators(graph)
        closure = lie_closure(generators, graph.n)
        for element in commutant(generators, graph.n):
            assert closure.contains(element)


@pytest.mark.slow
@pytest.mark.parametrize('n, asymmetric, hidden', [(7, 144, 16), (8, 3696, 228)])
def test_full_census(tmpdir, n, asymmetric, hidden):
    path = str(tmpdir.join('census.jsonl'))
    summary = run_census(n, jobs=4, checkpoint_path=path)
    assert summary.total_asymmetric == asymmetric
    assert summary.total_hidden == hidden
    if n == 7:
        assert summary.distinct_block_profiles == {'2,126': 16}
