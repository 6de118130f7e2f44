"""
Global-control Hamiltonians and the two-qubit exchange operators.
"""
from __future__ import unicode_literals
from fractions import Fraction

from .pauli import AlgebraError, PauliSum
from ..graphs.graph import Graph
from ..utils import stable_hash

__all__ = (
    'build_generators',
    'h_x',
    'h_z',
    'h_zz',
    'parity_operator',
    'pi_operator',
    'swap_operator',
    'generators_hash',
)


def _word(n, letters):
    text = ['I'] * n
    for qubit, letter in letters.items():
        text[qubit] = letter
    return ''.join(text)


def h_x(n):
    " Sum of X on every qubit. "
    return PauliSum(n, [(_word(n, {j: 'X'}), 1) for j in range(n)])


def h_z(n):
    " Sum of Z on every qubit. "
    return PauliSum(n, [(_word(n, {j: 'Z'}), 1) for j in range(n)])


def h_zz(graph):
    " Sum of Z_i Z_j over the edges of `graph`. "
    assert isinstance(graph, Graph)
    result = PauliSum(graph.n)
    for i, j in graph.edge_list():
        result = result + PauliSum.from_letters(graph.n, {i: 'Z', j: 'Z'})
    return result


def build_generators(graph, include_hz=True, extra=()):
    """
    Control Hamiltonians of a globally driven graph: ``[H_X, H_ZZ, H_Z]``,
    or the QAOA pair ``[H_X, H_ZZ]`` when `include_hz` is false.

    :param extra: Additional PauliSums appended to the set.
    """
    generators = [h_x(graph.n), h_zz(graph)]
    if include_hz:
        generators.append(h_z(graph.n))
    for h in extra:
        if h.n != graph.n:
            raise AlgebraError('Extra Hamiltonian acts on %i qubits, the graph has %i.' % (
                h.n, graph.n))
        generators.append(h)
    return generators


def swap_operator(i, j, n):
    " ``SWAP_ij = (II + X_iX_j + Y_iY_j + Z_iZ_j) / 2``. "
    if i == j:
        raise AlgebraError('SWAP needs two distinct qubits, got %i twice.' % i)
    if not (0 <= i < n and 0 <= j < n):
        raise AlgebraError('Qubits (%i, %i) out of range for n=%i.' % (i, j, n))

    half = Fraction(1, 2)
    return PauliSum(n, [
        ('I' * n, half),
        (_word(n, {i: 'X', j: 'X'}), half),
        (_word(n, {i: 'Y', j: 'Y'}), half),
        (_word(n, {i: 'Z', j: 'Z'}), half),
    ])


def pi_operator(i, j, n):
    " ``Pi_ij = 2 SWAP_ij - 1``; +1 on the triplet, -3 on the singlet. "
    return swap_operator(i, j, n) * 2 - 1


def parity_operator(n):
    " ``X`` on every qubit. "
    return PauliSum(n, [('X' * n, 1)])


def generators_hash(generators):
    " Stable short hash of a generator list, used in reports. "
    return stable_hash(*[g.to_text() for g in generators])
