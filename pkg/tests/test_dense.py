from __future__ import unicode_literals
from fractions import Fraction
from functools import reduce

import numpy as np
import pytest

from hiddensym.algebra.coefficients import GaussianRational
from hiddensym.algebra.dense import (
    BudgetExceededError, DenseOperator, permutation_operator, to_dense, walsh_hadamard)
from hiddensym.algebra.hamiltonians import swap_operator
from hiddensym.algebra.pauli import PauliSum
from hiddensym.graphs.graph import Permutation

MATRICES = {
    'I': np.eye(2),
    'X': np.array([[0, 1], [1, 0]]),
    'Y': np.array([[0, -1j], [1j, 0]]),
    'Z': np.diag([1, -1]),
}


def kron_matrix(p):
    " Reference matrix; qubit 0 is the rightmost tensor factor. "
    result = np.zeros((1 << p.n, 1 << p.n), dtype=complex)
    for string, coeff in p.terms():
        factors = [MATRICES[letter] for letter in reversed(string.letters)]
        result += complex(coeff) * reduce(np.kron, factors)
    return result


def random_sum(rng, n, terms=5):
    letters = 'IXYZ'
    return PauliSum(n, [
        (''.join(letters[k] for k in rng.integers(0, 4, n)),
         GaussianRational(Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))),
                          int(rng.integers(-2, 3))))
        for _ in range(terms)])


def test_matches_kronecker_products(rng):
    for n in (1, 2, 3):
        for _ in range(10):
            p = random_sum(rng, n)
            assert np.allclose(to_dense(p).toarray(), kron_matrix(p))


def test_pauli_round_trip(rng):
    for _ in range(10):
        p = random_sum(rng, 3)
        assert to_dense(p).to_pauli_sum() == p
    assert DenseOperator.zero(2).to_pauli_sum().is_zero()


def test_products_are_exact(rng):
    a, b = random_sum(rng, 3), random_sum(rng, 3)
    assert (to_dense(a) @ to_dense(b)).to_pauli_sum() == a.dot(b)
    assert to_dense(a).commutator(to_dense(b)).to_pauli_sum() == a.commutator(b)
    assert (to_dense(a) * Fraction(1, 3)).to_pauli_sum() == a * Fraction(1, 3)
    assert (to_dense(a) + to_dense(b)).to_pauli_sum() == a + b


def test_predicates():
    h = to_dense(PauliSum(2, [('XY', 1), ('ZI', 2)]))
    assert h.is_hermitian()
    assert not h.is_real()
    assert not h.is_diagonal()
    assert to_dense(PauliSum(2, [('ZZ', 1)])).is_diagonal()
    assert h.trace() == 0
    assert DenseOperator.identity(2).trace() == 4
    assert h.entry(0, 0) == 2


def test_permutation_operator():
    s = Permutation([1, 2, 0])
    t = Permutation.transposition(3, 0, 2)
    assert permutation_operator(s) @ permutation_operator(t) == permutation_operator(s * t)
    assert permutation_operator(Permutation.transposition(3, 0, 1)) == to_dense(swap_operator(0, 1, 3))

    # Qubit 0 in state 1 moves to qubit 1.
    m = permutation_operator(Permutation([1, 0])).toarray()
    assert m[0b10, 0b01] == 1


def test_permutation_conjugates_pauli_strings():
    s = Permutation([2, 0, 1])
    p = PauliSum(3, [('XZI', 1), ('YII', 2)])
    u = permutation_operator(s)
    assert (u @ to_dense(p) @ u.dagger()).to_pauli_sum() == p.permuted(s)


def test_walsh_hadamard():
    v = np.array([1, 0, 0, 0])
    assert list(walsh_hadamard(v)) == [1, 1, 1, 1]
    w = np.array([3, -1, 2, 5])
    assert list(walsh_hadamard(walsh_hadamard(w))) == list(4 * w)


def test_budget():
    with pytest.raises(BudgetExceededError):
        to_dense(PauliSum(13, [('X' * 13, 1)]))
