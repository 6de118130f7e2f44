"""
Exact linear algebra over the integers and the rationals.

Kernels of integer matrices are computed modulo random primes below 2**31,
lifted with Chinese remaindering and rational reconstruction, and then
verified with exact integer arithmetic. The rank of a matrix modulo a prime
never exceeds its rank over the rationals, so when every reconstructed
kernel vector verifies, the kernel is complete.

A fraction-free (Bareiss) elimination over Python integers is the fallback
for small systems and the oracle in the tests.
"""
from __future__ import unicode_literals
from fractions import Fraction
import math

import numpy as np
import scipy.sparse as sp

from .coefficients import as_coefficient
from .pauli import AlgebraError
from ..log import logger

__all__ = (
    'BAREISS_LIMIT',
    'bareiss_kernel',
    'certified_rank',
    'crt_pair',
    'exact_rank',
    'integer_kernel',
    'is_probable_prime',
    'kernel_mod',
    'modular_rank',
    'primitive_vector',
    'random_prime',
    'rational_reconstruction',
    'rref_mod',
)

#: Largest column count handed to the pure-Python Bareiss fallback.
BAREISS_LIMIT = 400

_INT_LIMIT = 2 ** 62

# Deterministic Miller-Rabin witnesses, exact for n < 3.3 * 10**24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n):
    """
    Miller-Rabin test. With the fixed witness set this is exact for every
    number the package draws.
    """
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p

    r, s = 0, n - 1
    while s % 2 == 0:
        r += 1
        s //= 2

    for a in _WITNESSES:
        x = pow(a, s, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, low=2 ** 30, high=2 ** 31):
    " Uniformly drawn prime in ``[low, high)``. `rng` is a numpy Generator. "
    while True:
        candidate = int(rng.integers(low, high)) | 1
        if candidate < high and is_probable_prime(candidate):
            return candidate


def rref_mod(matrix, p):
    """
    Reduced row echelon form of an integer matrix over GF(p).

    Returns ``(R, pivots)``: the nonzero rows of the reduced form (int64)
    and the list of pivot columns. `p` must be below 2**31 so that products
    of residues fit in int64.
    """
    assert p < 2 ** 31
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0

    for c in range(cols):
        if r == rows:
            break
        candidates = np.flatnonzero(m[r:, c])
        if len(candidates) == 0:
            continue
        k = r + candidates[0]
        if k != r:
            m[[r, k]] = m[[k, r]]

        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p

        column = m[:, c].copy()
        column[r] = 0
        targets = np.flatnonzero(column)
        if len(targets):
            support = np.flatnonzero(m[r])
            block = np.ix_(targets, support)
            m[block] = (m[block] - (column[targets, None] * m[r, support][None, :]) % p) % p

        pivots.append(c)
        r += 1

    return m[:r], pivots


def modular_rank(matrix, p):
    " Rank of an integer matrix over GF(p); a lower bound for the rational rank. "
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(rref_mod(matrix, p)[1])


def kernel_mod(matrix, p):
    """
    Canonical kernel basis over GF(p): one vector per free column with a 1
    in that column.

    :returns: ``(pivots, free, K)`` where ``K[i, j]`` is the entry of the
        vector for ``free[j]`` at pivot column ``pivots[i]``.
    """
    cols = np.asarray(matrix).shape[1]
    R, pivots = rref_mod(matrix, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    K = (-R[:, free]) % p if free else np.zeros((len(pivots), 0), dtype=np.int64)
    return pivots, free, K


def rational_reconstruction(a, m):
    """
    The fraction ``r/s`` with ``r = a*s (mod m)`` and ``|r|, s <= sqrt(m/2)``,
    or None when no such fraction exists.
    """
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1

    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if math.gcd(r1, s1) != 1:
        return None
    return Fraction(r1, s1)


def crt_pair(a, m, b, p):
    " Combine ``x = a (mod m)`` and ``x = b (mod p)`` into ``x (mod m*p)``. "
    t = ((b - a) * pow(m % p, p - 2, p)) % p
    return a + m * t, m * p


def primitive_vector(values):
    """
    Scale a vector of rationals to coprime integers whose first nonzero
    entry is positive.
    """
    values = [Fraction(v) for v in values]
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in values]

    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def _verify(matrix, vector):
    " Exact test of ``matrix @ vector == 0`` for a csr int64 matrix. "
    bound = max(abs(v) for v in vector) if vector else 0
    row_nnz = int(np.diff(matrix.indptr).max()) if matrix.shape[0] else 0
    max_entry = int(abs(matrix.data).max()) if matrix.nnz else 0

    if bound * max_entry * max(row_nnz, 1) < _INT_LIMIT:
        x = np.array(vector, dtype=np.int64)
        return not np.any(matrix.dot(x))

    indptr, indices, data = matrix.indptr, matrix.indices, matrix.data.tolist()
    for row in range(matrix.shape[0]):
        total = 0
        for k in range(indptr[row], indptr[row + 1]):
            total += data[k] * vector[indices[k]]
        if total:
            return False
    return True


def _reconstruct(pivots, free, residues, modulus, cols):
    vectors = []
    for j, f in enumerate(free):
        values = [Fraction(0)] * cols
        values[f] = Fraction(1)
        for i, c in enumerate(pivots):
            a = int(residues[i, j])
            if a == 0:
                continue
            q = rational_reconstruction(a, modulus)
            if q is None:
                return None
            values[c] = q
        vectors.append(primitive_vector(values))
    return vectors


def integer_kernel(matrix, rng, max_primes=8):
    """
    Exact kernel of a sparse integer matrix, as primitive integer vectors
    (Python ints), one per free column of the rational reduced echelon
    form, in free-column order.

    The elimination runs on ``C^T C``, which has the same rational kernel as
    ``C`` and one row per unknown.

    :param rng: numpy Generator for prime selection.
    :raises AlgebraError: when neither the modular path nor the Bareiss
        fallback can produce a verified kernel.
    """
    C = sp.csr_matrix(matrix, dtype=np.int64)
    C.eliminate_zeros()
    rows, cols = C.shape
    if cols == 0:
        return []
    if C.nnz == 0:
        return [[int(i == j) for i in range(cols)] for j in range(cols)]

    max_entry = int(abs(C.data).max())
    col_nnz = int(np.diff(C.tocsc().indptr).max())
    if max_entry * max_entry * col_nnz >= _INT_LIMIT:
        logger.info('Integer kernel: entries too large for int64 Gram, using Bareiss.')
        return bareiss_kernel(C.toarray().tolist())
    gram = C.T.dot(C).toarray()

    best = None
    for attempt in range(max_primes):
        p = random_prime(rng)
        pivots, free, K = kernel_mod(gram, p)
        residues = K.astype(object)

        if best is None or len(pivots) > len(best[0]) or (
                len(pivots) == len(best[0]) and pivots < best[0]):
            if best is not None:
                logger.debug('Integer kernel: prime %i improves the pivot set.', p)
            best = (pivots, free, residues, p)
        elif pivots != best[0]:
            logger.debug('Integer kernel: discarding unlucky prime %i.', p)
            continue
        else:
            pivots, free, old, modulus = best
            combined = np.empty(old.shape, dtype=object)
            for idx in np.ndindex(old.shape):
                combined[idx] = crt_pair(old[idx], modulus, residues[idx], p)[0]
            best = (pivots, free, combined, modulus * p)

        pivots, free, residues, modulus = best
        vectors = _reconstruct(pivots, free, residues, modulus, cols)
        if vectors is not None and all(_verify(C, v) for v in vectors):
            logger.debug('Integer kernel: %i unknowns, dim %i, %i prime(s).',
                         cols, len(vectors), attempt + 1)
            return vectors

    if cols <= BAREISS_LIMIT:
        logger.info('Integer kernel: modular path failed, using Bareiss on %i unknowns.', cols)
        return bareiss_kernel(C.toarray().tolist())
    raise AlgebraError('No verified kernel after %i primes (%i unknowns).' % (max_primes, cols))


def bareiss_kernel(rows):
    """
    Kernel of an integer matrix (list of rows) by fraction-free elimination.
    Same canonical basis and normalization as :func:`integer_kernel`.
    """
    m = [[int(v) for v in row] for row in rows]
    if not m:
        return []
    nrows, cols = len(m), len(m[0])

    pivots = []
    r = 0
    previous = 1
    for c in range(cols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if m[i][c]), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            factor = m[i][c]
            m[i] = [(pivot * a - factor * b) // previous for a, b in zip(m[i], m[r])]
        previous = pivot
        pivots.append(c)
        r += 1

    # Back substitution on the echelon rows, in rationals.
    echelon = [[Fraction(v) for v in row] for row in m[:r]]
    for i in reversed(range(r)):
        c = pivots[i]
        lead = echelon[i][c]
        echelon[i] = [v / lead for v in echelon[i]]
        for k in range(i):
            factor = echelon[k][c]
            if factor:
                echelon[k] = [a - factor * b for a, b in zip(echelon[k], echelon[i])]

    pivot_set = set(pivots)
    vectors = []
    for f in range(cols):
        if f in pivot_set:
            continue
        values = [Fraction(0)] * cols
        values[f] = Fraction(1)
        for i, c in enumerate(pivots):
            values[c] = -echelon[i][f]
        vectors.append(primitive_vector(values))
    return vectors


def exact_rank(rows):
    """
    Rank of a small matrix with exact entries (ints, Fractions or
    Gaussian rationals), by Gaussian elimination.
    """
    m = [[as_coefficient(v) for v in row] for row in rows]
    if not m:
        return 0
    nrows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        for i in range(r + 1, nrows):
            if m[i][c].is_zero():
                continue
            factor = m[i][c] / m[r][c]
            m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def certified_rank(matrix, rng, primes=3):
    """
    Rank of an integer matrix as the largest rank over a few random primes.
    Exact with overwhelming probability; never above the true rank.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.size == 0:
        return 0
    return max(modular_rank(matrix, random_prime(rng)) for _ in range(primes))
