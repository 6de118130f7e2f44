from __future__ import unicode_literals

import pytest

from hiddensym.algebra.hamiltonians import (
    build_generators, generators_hash, h_x, h_z, h_zz, parity_operator, pi_operator, swap_operator)
from hiddensym.algebra.pauli import AlgebraError, PauliSum
from hiddensym.graphs.graph import Graph


def test_controls():
    g = Graph(3, [(0, 1), (1, 2)])
    assert h_x(3) == PauliSum(3, [('XII', 1), ('IXI', 1), ('IIX', 1)])
    assert h_z(2) == PauliSum(2, [('ZI', 1), ('IZ', 1)])
    assert h_zz(g) == PauliSum(3, [('ZZI', 1), ('IZZ', 1)])
    assert h_zz(Graph(2)).is_zero()


def test_build_generators():
    g = Graph(3, [(0, 1)])
    assert len(build_generators(g)) == 3
    assert len(build_generators(g, include_hz=False)) == 2

    extra = PauliSum(3, [('XXX', 1)])
    assert build_generators(g, extra=[extra])[-1] == extra
    with pytest.raises(AlgebraError):
        build_generators(g, extra=[PauliSum(2, [('XX', 1)])])


def test_swap_and_pi():
    s = swap_operator(0, 2, 3)
    assert s.dot(s) == 1
    assert s.is_hermitian()

    pi = pi_operator(0, 1, 2)
    assert pi == PauliSum(2, [('XX', 1), ('YY', 1), ('ZZ', 1)])
    # Eigenvalues 1 (triplet) and -3 (singlet).
    assert (pi - 1).dot(pi + 3).is_zero()

    with pytest.raises(AlgebraError):
        swap_operator(1, 1, 3)
    with pytest.raises(AlgebraError):
        swap_operator(0, 3, 3)


def test_symmetries_of_the_controls():
    g = Graph(3, [(0, 1), (1, 2)])
    for h in build_generators(g):
        assert h.commutator(swap_operator(0, 2, 3)).is_zero()
    assert h_zz(g).commutator(swap_operator(0, 1, 3)) != 0
    assert h_x(3).commutator(parity_operator(3)).is_zero()
    assert h_zz(g).commutator(parity_operator(3)).is_zero()
    assert h_z(3).commutator(parity_operator(3)) != 0


def test_generators_hash():
    g = Graph(3, [(0, 1)])
    assert generators_hash(build_generators(g)) == generators_hash(build_generators(Graph(3, [(1, 0)])))
    assert generators_hash(build_generators(g)) != generators_hash(build_generators(g, include_hz=False))
    assert len(generators_hash(build_generators(g))) == 16
