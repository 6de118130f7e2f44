from __future__ import unicode_literals

import pytest

from hiddensym.algebra.dense import BudgetExceededError, DenseOperator, to_dense
from hiddensym.algebra.hamiltonians import build_generators, parity_operator, swap_operator
from hiddensym.algebra.pauli import AlgebraError, PauliParseError, PauliSum
from hiddensym.graphs.enumeration import enumerate_connected, sample_connected
from hiddensym.graphs.graph import Graph
from hiddensym.symmetry.commutant import CommutantBasis, commutant, commutant_fast, joint_level_sets
from hiddensym.symmetry.report import membership_in_span
from hiddensym.utils import make_rng


def test_single_qubit():
    x = PauliSum(1, [('X', 1)])
    z = PauliSum(1, [('Z', 1)])
    assert commutant([x, z]).dim == 1
    basis = commutant([x])
    assert basis.dim == 2
    assert membership_in_span(x, basis.basis)
    assert not membership_in_span(z, basis.basis)


def test_two_qubit_graph():
    generators = build_generators(Graph(2, [(0, 1)]))
    basis = commutant(generators)
    assert basis.dim == 2
    assert basis.check()
    assert basis.contains(swap_operator(0, 1, 2))
    assert membership_in_span(swap_operator(0, 1, 2), basis.basis)
    assert all(b.is_hermitian() for b in basis)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_fast_matches_dense(n, rng):
    for graph in enumerate_connected(n):
        for include_hz in (True, False):
            generators = build_generators(graph, include_hz=include_hz)
            dense = commutant(generators, graph.n, method='dense', rng=rng)
            fast = commutant_fast(generators, rng=rng)
            assert dense.dim == fast.dim
            assert fast.stats['unknowns'] <= dense.stats['unknowns']
            for b in fast:
                assert membership_in_span(b, dense.basis)


@pytest.mark.slow
def test_fast_matches_dense_five(rng):
    for graph in enumerate_connected(5):
        generators = build_generators(graph)
        assert (commutant(generators, 5, method='dense', rng=rng).dim ==
                commutant_fast(generators, rng=rng).dim)


def test_result_does_not_depend_on_primes():
    generators = build_generators(Graph(4, [(0, 1), (1, 2), (1, 3)]))
    a = commutant(generators, rng=make_rng(1))
    b = commutant(generators, rng=make_rng(2))
    assert a.to_pauli_sums() == b.to_pauli_sums()


def test_parity(rng):
    graphs = sample_connected(3, 10, rng, asymmetric=False)
    for n in (4, 5, 6):
        graphs.extend(sample_connected(n, 10 if n < 6 else 20, rng, asymmetric=False))
    assert len(graphs) == 50

    for graph in graphs:
        parity = parity_operator(graph.n)
        qaoa = build_generators(graph, include_hz=False)
        full = build_generators(graph)
        assert all(parity.commutator(h).is_zero() for h in qaoa)
        assert not all(parity.commutator(h).is_zero() for h in full)

    for graph in graphs[:5]:
        basis = commutant(build_generators(graph, include_hz=False), rng=rng)
        assert membership_in_span(parity_operator(graph.n), basis.basis)


def test_complex_generators():
    y = PauliSum(2, [('YI', 1), ('IY', 1)])
    zz = PauliSum(2, [('ZZ', 1)])
    basis = commutant([y, zz])
    assert basis.check()
    assert basis.contains(swap_operator(0, 1, 2))
    assert basis.dim == commutant([y, zz], method='fast').dim


def test_mixed_real_and_imaginary_generators(rng):
    generators = build_generators(Graph(2, [(0, 1)]), extra=[PauliSum(2, [('IY', 1)])])
    dense = commutant(generators, method='dense', rng=rng)
    fast = commutant(generators, method='fast', rng=rng)
    assert dense.check() and fast.check()
    assert dense.dim == fast.dim
    assert not fast.contains(swap_operator(0, 1, 2))
    for b in fast:
        assert membership_in_span(b, dense.basis)


def test_joint_level_sets():
    z0 = to_dense(PauliSum(2, [('ZI', 1)]))
    zz = to_dense(PauliSum(2, [('ZZ', 1)]))
    classes = joint_level_sets([z0], 4)
    assert [sorted(c.tolist()) for c in classes] == [[0, 2], [1, 3]]
    classes = joint_level_sets([z0, zz], 4)
    assert sorted(len(c) for c in classes) == [1, 1, 1, 1]
    assert [c.tolist() for c in joint_level_sets([], 4)] == [[0, 1, 2, 3]]


def test_errors():
    with pytest.raises(AlgebraError):
        commutant([PauliSum(1, [('X', 1j)])])
    with pytest.raises(AlgebraError):
        commutant([PauliSum(1, [('X', 1)]), PauliSum(2, [('XX', 1)])])
    with pytest.raises(AlgebraError):
        commutant([PauliSum(1, [('X', 1)])], method='nope')
    with pytest.raises(AlgebraError):
        commutant_fast([PauliSum(1, [('X', 1)])])
    with pytest.raises(AlgebraError):
        commutant([])


def test_budget():
    generators = build_generators(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(BudgetExceededError):
        commutant(generators, method='dense', max_unknowns=100)


def test_random_element(rng):
    basis = commutant(build_generators(Graph(3, [(0, 1), (1, 2)])), rng=rng)
    element = basis.random_element(rng)
    assert isinstance(element, DenseOperator)
    assert basis.contains(element)


def test_text_form():
    generators = build_generators(Graph(3, [(0, 1), (0, 2)]))
    basis = commutant(generators)
    loaded = CommutantBasis.loads(basis.dumps(), generators)
    assert loaded.dim == basis.dim
    assert loaded.to_pauli_sums() == basis.to_pauli_sums()
    assert loaded.check()

    with pytest.raises(PauliParseError):
        CommutantBasis.loads('')
    with pytest.raises(PauliParseError):
        CommutantBasis.loads('{"n": 1, "dim": 2}\n# element 0\n1 0 X\n')
