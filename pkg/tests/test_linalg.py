from __future__ import unicode_literals
from fractions import Fraction

import numpy as np
import pytest

from hiddensym.algebra.coefficients import GaussianRational
from hiddensym.algebra.linalg import (
    bareiss_kernel, certified_rank, crt_pair, exact_rank, integer_kernel, is_probable_prime,
    kernel_mod, modular_rank, primitive_vector, random_prime, rational_reconstruction, rref_mod)


def test_primes(rng):
    assert [n for n in range(30) if is_probable_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_probable_prime(2 ** 31 - 1)
    assert not is_probable_prime(3215031751)  # Strong pseudoprime to bases 2, 3, 5, 7.
    p = random_prime(rng)
    assert 2 ** 30 <= p < 2 ** 31 and is_probable_prime(p)


def test_rref_mod():
    R, pivots = rref_mod([[2, 4, 1], [1, 2, 0]], 7)
    assert pivots == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]
    assert modular_rank([[1, 1], [1, 1]], 101) == 1
    # Singular only modulo 3.
    assert modular_rank([[1, 1], [1, 4]], 3) == 1
    assert modular_rank([[1, 1], [1, 4]], 5) == 2


def test_kernel_mod():
    pivots, free, K = kernel_mod([[1, 2, 3]], 11)
    assert pivots == [0]
    assert free == [1, 2]
    assert K.tolist() == [[9, 8]]


def test_rational_reconstruction():
    m = 1000003
    for q in (Fraction(3, 7), Fraction(-5, 11), Fraction(0), Fraction(22)):
        a = q.numerator * pow(q.denominator, m - 2, m) % m
        assert rational_reconstruction(a, m) == q
    assert crt_pair(2, 3, 3, 5) == (8, 15)


def test_primitive_vector():
    assert primitive_vector([Fraction(-1, 2), Fraction(1, 3), 0]) == [3, -2, 0]
    assert primitive_vector([0, 0]) == [0, 0]
    assert primitive_vector([4, 6]) == [2, 3]


def random_matrix(rng, rows, cols, rank):
    a = rng.integers(-3, 4, size=(rows, rank))
    b = rng.integers(-3, 4, size=(rank, cols))
    return a.dot(b)


def test_integer_kernel_matches_bareiss(rng):
    for _ in range(15):
        rows, cols = int(rng.integers(2, 8)), int(rng.integers(2, 10))
        m = random_matrix(rng, rows, cols, int(rng.integers(1, min(rows, cols) + 1)))
        kernel = integer_kernel(m, rng)
        assert kernel == bareiss_kernel(m.tolist())
        for v in kernel:
            assert not np.any(m.dot(np.array(v)))
        assert len(kernel) == cols - exact_rank(m.tolist())


def test_integer_kernel_edge_cases(rng):
    assert integer_kernel(np.zeros((2, 0), dtype=int), rng) == []
    assert integer_kernel(np.zeros((2, 2), dtype=int), rng) == [[1, 0], [0, 1]]
    assert integer_kernel(np.eye(3, dtype=int), rng) == []
    assert integer_kernel([[1, -1, 0], [0, 1, -1]], rng) == [[1, 1, 1]]


def test_large_entries_fall_back_to_bareiss(rng):
    big = 2 ** 40
    m = [[big, -big, 0], [0, big, 1]]
    assert integer_kernel(m, rng) == bareiss_kernel(m)


def test_exact_rank():
    i = GaussianRational(0, 1)
    assert exact_rank([[1, i], [i, -1]]) == 1
    assert exact_rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    assert exact_rank([[1, 0], [0, 1]]) == 2
    assert exact_rank([]) == 0


def test_certified_rank(rng):
    m = random_matrix(rng, 6, 6, 3)
    assert certified_rank(m, rng) == exact_rank(m.tolist())
    assert certified_rank(np.zeros((0, 0), dtype=int), rng) == 0


@pytest.mark.parametrize('m', [
    [[0, 0, 1]],
    [[2, 4], [3, 6]],
])
def test_bareiss_kernel(m):
    for v in bareiss_kernel(m):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
