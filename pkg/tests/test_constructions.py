from __future__ import unicode_literals

import pytest

from hiddensym.algebra.pauli import PauliSum
from hiddensym.constructions.catalog import Catalog, ConfigError, default_catalog, parse_edge
from hiddensym.constructions.result_one import (
    build_result_one, locate_result_one_graph, pair_symmetry, singlet_projector, verify_result_one)
from hiddensym.constructions.result_two import (
    build_result_two, family_graph, reflection_projector, verify_result_two)
from hiddensym.constructions.verification import ConstructionError, VerificationReport
from hiddensym.graphs.automorphisms import automorphism_group
from hiddensym.graphs.graph import Graph, Permutation
from hiddensym.graphs.graph6 import emit_graph6
from hiddensym.symmetry.report import symmetry_report


# Catalog.

def test_parse_edge():
    assert parse_edge('3-7') == (2, 6)
    assert parse_edge('0-1', base=0) == (0, 1)
    with pytest.raises(ConfigError):
        parse_edge('3')
    with pytest.raises(ConfigError):
        parse_edge('a-b')


def test_catalog():
    catalog = Catalog()
    entry = catalog.define_graph('T', 3, [(1, 2), (2, 3)], pairs=[(1, 3)])
    assert entry.graph == Graph(3, [(0, 1), (1, 2)])
    assert entry.pairs == ((0, 2), )
    assert entry.external_pairs() == [(1, 3)]
    assert entry.labels == {1: 0, 2: 1, 3: 2}
    assert 'T' in catalog
    assert catalog.get_graph('T') is entry

    with pytest.raises(ConfigError):
        catalog.get_graph('U')
    with pytest.raises(ConfigError):
        catalog.get_family('U')
    with pytest.raises(ConfigError):
        catalog.define_graph('U', 3, [(1, 4)])
    with pytest.raises(ConfigError):
        catalog.define_graph('U', 3, [(1, 2)], pairs=[(2, 2)])
    with pytest.raises(ConfigError):
        catalog.define_family('F', leaf=0)


def test_default_catalog():
    catalog = default_catalog()
    h = catalog.get_graph('H')
    assert h.graph.n == 7
    assert len(h.graph.edges) == 8
    assert h.external_pairs() == [(1, 3), (2, 7), (4, 6)]
    assert catalog.get_graph('J').graph.n == 9
    assert catalog.get_family('Q').minimum == 7


# The seven-vertex graph.

def test_result_one():
    bundle = build_result_one()
    report = verify_result_one(bundle)
    assert report.passed, report.failed()
    assert report.facts['pairs'] == [[1, 3], [2, 7], [4, 6]]
    assert report.facts['literal_form_commutes'] == ['H_X', 'H_Z']


def test_result_one_is_a_hidden_symmetry():
    bundle = build_result_one()
    assert automorphism_group(bundle.graph_H).is_trivial()
    report = symmetry_report(bundle.graph_H)
    assert report.aut_span_dim == 1
    assert report.commutant_dim == 2
    assert report.commutant.contains(bundle.S)


def test_pair_symmetry():
    pairs = [(0, 1), (2, 3), (4, 5)]
    s = pair_symmetry(pairs, 6)
    assert s == singlet_projector(pairs, 6) * 64 - 1
    p = singlet_projector(pairs, 6)
    assert p.dot(p) == p
    assert s.is_hermitian()

    with pytest.raises(ConstructionError):
        pair_symmetry(pairs[:2], 6)
    with pytest.raises(ConstructionError):
        pair_symmetry([(0, 1), (1, 2), (3, 4)], 6)


def test_result_one_rejects_symmetric_graphs():
    with pytest.raises(ConstructionError):
        build_result_one(Graph(7, [(k, k + 1) for k in range(6)]), [(0, 1), (2, 3), (4, 5)])
    with pytest.raises(ConstructionError):
        build_result_one(Graph(6, [(k, k + 1) for k in range(5)]), [(0, 1), (2, 3), (4, 5)])


def test_locate_is_covariant(rng):
    bundle = build_result_one()
    found = set(frozenset(pairs) for _, pairs in locate_result_one_graph([bundle.graph_H]))
    assert frozenset(bundle.pairs) in found

    permutation = Permutation(rng.permutation(7))
    relabeled = bundle.graph_H.relabel(permutation)
    moved = set(frozenset(tuple(sorted((permutation(i), permutation(j)))) for i, j in pairs)
                for pairs in found)
    matches = locate_result_one_graph([emit_graph6(relabeled)])
    assert set(frozenset(pairs) for _, pairs in matches) == moved


# The two-pair family.

def test_family_graph():
    graph, pendants = family_graph(7)
    assert graph.n == 11
    assert pendants == (7, 8, 9, 10)
    assert graph.degree(0) == graph.degree(5) == 3
    assert graph.has_edge(2, 6)

    graph, pendants = family_graph(1)
    assert graph.n == 5
    assert graph.degree(0) == 4


@pytest.mark.parametrize('N', [7, 8, 9])
def test_result_two(N):
    bundle = build_result_two(N)
    assert automorphism_group(bundle.graph_Q).order == 4
    report = verify_result_two(bundle, universality=False)
    assert report.passed, report.failed()
    assert report.facts['n'] == N + 4


def test_result_two_beyond_matrix_sizes():
    bundle = build_result_two(9)
    assert bundle.n == 13
    report = verify_result_two(bundle)
    assert report.passed, report.failed()
    assert report.checks['[R1 + R2 - R1 R2, H_break] == 0']
    assert 'universality' not in report.facts


def test_result_two_refuses_short_chains():
    with pytest.raises(ConstructionError):
        build_result_two(3)


def test_result_two_forced():
    bundle = build_result_two(1, force=True)
    report = verify_result_two(bundle, universality=False)
    for name in ('[R1, H_break] == 2 R1 H1', '[R2, H_break] == 2 R2 H2',
                 '[R1 R2, H_break] == 2 R1 R2 H_break', '[R1 + R2 - R1 R2, H_break] == 0'):
        assert report.checks[name]
    # Swapping the two pairs maps H1 to H2.
    assert not report.checks['H_break breaks every automorphism']
    assert not report.passed


def test_reflection_projectors():
    bundle = build_result_two(7)
    projectors = [reflection_projector(bundle, s1, s2) for s1 in (1, -1) for s2 in (1, -1)]
    total = PauliSum(bundle.n)
    for p in projectors:
        assert p.dot(p) == p
        total = total + p
    assert total == 1
    with pytest.raises(AssertionError):
        reflection_projector(bundle, 0, 1)


@pytest.mark.slow
def test_result_two_universality():
    report = verify_result_two(build_result_two(7))
    assert report.passed, report.failed()
    assert report.facts['aut_span_with_break'] == 2


def test_verification_report():
    report = VerificationReport('demo')
    assert report.check('ok', 1)
    assert not report.check('broken', [])
    report.fact('answer', 42)
    assert not report.passed
    assert report.failed() == ['broken']
    assert report.to_json() == {
        'construction': 'demo',
        'passed': False,
        'checks': {'ok': True, 'broken': False},
        'facts': {'answer': 42},
    }
