"""
Exact matrix realization of n-qubit operators.

Basis state ``|b>`` is the integer ``b`` whose bit ``j`` is the state of
qubit ``j`` (qubit 0 is the least significant bit). A Pauli string with
masks ``(x, z)`` acts as

    P |b> = i**popcount(x & z) * (-1)**popcount(b & z) |b ^ x>.

Entries are kept exact as integer numerators (separate real and imaginary
sparse matrices) over one positive common denominator.
"""
from __future__ import unicode_literals
from fractions import Fraction
import math

import numpy as np
import scipy.sparse as sp
import six

from .coefficients import GaussianRational, as_coefficient
from .pauli import AlgebraError, PauliString, PauliSum
from ..graphs.graph import Permutation
from ..utils import popcount, popcount_array

__all__ = (
    'BudgetExceededError',
    'DenseOperator',
    'MAX_DENSE_QUBITS',
    'permutation_operator',
    'to_dense',
    'walsh_hadamard',
)

#: Largest qubit count with a matrix realization.
MAX_DENSE_QUBITS = 12

_INT_LIMIT = 2 ** 62


class BudgetExceededError(Exception):
    " A size budget (dimension, unknowns, elements) was exceeded. "
    def __init__(self, message):
        super(BudgetExceededError, self).__init__(message)
        self.message = message


def _int_gcd(values, start=0):
    g = start
    for v in values:
        if v:
            g = math.gcd(g, abs(int(v)))
            if g == 1:
                break
    return g


def _max_abs(m):
    return int(abs(m.data).max()) if m.nnz else 0


class DenseOperator(object):
    """
    ``(real + i*imag) / denominator`` on ``2**n`` dimensions.

    :param real: Integer matrix (anything scipy.sparse accepts).
    :param imag: Integer matrix or None.
    """
    __slots__ = ('n', 'real', 'imag', 'denominator')

    def __init__(self, n, real, imag=None, denominator=1):
        assert isinstance(n, six.integer_types)
        if n > MAX_DENSE_QUBITS:
            raise BudgetExceededError('No matrix realization beyond %i qubits (got %i).' % (
                MAX_DENSE_QUBITS, n))

        dim = 1 << n
        real = sp.csr_matrix(real, shape=(dim, dim), dtype=np.int64)
        imag = sp.csr_matrix((dim, dim), dtype=np.int64) if imag is None else \
            sp.csr_matrix(imag, shape=(dim, dim), dtype=np.int64)
        real.eliminate_zeros()
        imag.eliminate_zeros()

        denominator = int(denominator)
        if denominator == 0:
            raise AlgebraError('Zero denominator.')
        if denominator < 0:
            real, imag, denominator = -real, -imag, -denominator

        g = _int_gcd(imag.data, _int_gcd(real.data, denominator))
        if g > 1:
            real = real.copy()
            imag = imag.copy()
            real.data //= g
            imag.data //= g
            denominator //= g
        if real.nnz == 0 and imag.nnz == 0:
            denominator = 1

        self.n = n
        self.real = sp.csr_matrix(real)
        self.imag = sp.csr_matrix(imag)
        self.denominator = denominator

    @property
    def dim(self):
        return 1 << self.n

    @classmethod
    def identity(cls, n):
        return cls(n, sp.identity(1 << n, dtype=np.int64, format='csr'))

    @classmethod
    def zero(cls, n):
        return cls(n, sp.csr_matrix((1 << n, 1 << n), dtype=np.int64))

    @classmethod
    def from_pauli_sum(cls, p):
        return to_dense(p)

    # Views.

    def toarray(self):
        " Dense complex128 view. "
        result = self.real.toarray().astype(np.complex128)
        if self.imag.nnz:
            result = result + 1j * self.imag.toarray()
        return result / self.denominator

    def tosparse(self):
        " Sparse complex128 view. "
        result = self.real.astype(np.complex128)
        if self.imag.nnz:
            result = result + 1j * self.imag.astype(np.complex128)
        return (result / self.denominator).tocsr()

    def entry(self, row, col):
        " Exact entry as a GaussianRational. "
        return GaussianRational(Fraction(int(self.real[row, col]), self.denominator),
                                Fraction(int(self.imag[row, col]), self.denominator))

    def is_zero(self):
        return self.real.nnz == 0 and self.imag.nnz == 0

    def is_real(self):
        return self.imag.nnz == 0

    def is_diagonal(self):
        for m in (self.real, self.imag):
            coo = m.tocoo()
            if np.any(coo.row != coo.col):
                return False
        return True

    def is_hermitian(self):
        return self == self.dagger()

    def nnz(self):
        return (abs(self.real) + abs(self.imag)).nnz

    # Arithmetic.

    def _check(self, other):
        if not isinstance(other, DenseOperator):
            raise AlgebraError('Expected a DenseOperator, got %r.' % (other, ))
        if other.n != self.n:
            raise AlgebraError('Qubit counts differ: %i and %i.' % (self.n, other.n))

    def _scaled(self, factor):
        if factor == 1:
            return self.real, self.imag
        limit = max(_max_abs(self.real), _max_abs(self.imag)) * factor
        if limit >= _INT_LIMIT:
            raise AlgebraError('Integer overflow in exact matrix arithmetic.')
        return self.real * factor, self.imag * factor

    def __add__(self, other):
        self._check(other)
        d = self.denominator * other.denominator // math.gcd(self.denominator, other.denominator)
        ar, ai = self._scaled(d // self.denominator)
        br, bi = other._scaled(d // other.denominator)
        return DenseOperator(self.n, ar + br, ai + bi, d)

    def __neg__(self):
        return DenseOperator(self.n, -self.real, -self.imag, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DenseOperator):
            return self.dot(other)
        c = as_coefficient(other)
        a, b = c.re, c.im
        # (p + iq)/d * (a + ib) with a = ra/sa, b = rb/sb.
        s = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        ai, bi = int(a * s), int(b * s)
        limit = max(_max_abs(self.real), _max_abs(self.imag)) * (abs(ai) + abs(bi))
        if limit >= _INT_LIMIT:
            raise AlgebraError('Integer overflow in exact matrix arithmetic.')
        real = self.real * ai - self.imag * bi
        imag = self.real * bi + self.imag * ai
        return DenseOperator(self.n, real, imag, self.denominator * s)

    __rmul__ = __mul__

    def dot(self, other):
        " Matrix product. "
        self._check(other)
        bound = (max(_max_abs(self.real), _max_abs(self.imag)) *
                 max(_max_abs(other.real), _max_abs(other.imag)) * 2 * self.dim)
        if bound >= _INT_LIMIT:
            raise AlgebraError('Integer overflow in exact matrix product.')

        real = self.real.dot(other.real)
        imag = None
        if self.imag.nnz or other.imag.nnz:
            real = real - self.imag.dot(other.imag)
            imag = self.real.dot(other.imag) + self.imag.dot(other.real)
        return DenseOperator(self.n, real, imag, self.denominator * other.denominator)

    __matmul__ = dot

    def commutator(self, other):
        return self.dot(other) - other.dot(self)

    def transpose(self):
        return DenseOperator(self.n, self.real.T, self.imag.T, self.denominator)

    def conjugate(self):
        return DenseOperator(self.n, self.real, -self.imag, self.denominator)

    def dagger(self):
        return DenseOperator(self.n, self.real.T, -self.imag.T, self.denominator)

    def hermitian_part(self):
        return (self + self.dagger()) * Fraction(1, 2)

    def trace(self):
        return GaussianRational(Fraction(int(self.real.diagonal().sum()), self.denominator),
                                Fraction(int(self.imag.diagonal().sum()), self.denominator))

    def __eq__(self, other):
        if not isinstance(other, DenseOperator):
            return NotImplemented
        return (self.n == other.n and self.denominator == other.denominator and
                (self.real != other.real).nnz == 0 and (self.imag != other.imag).nnz == 0)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    # Pauli basis.

    def to_pauli_sum(self):
        """
        Exact expansion in Pauli strings. For each X-mask the coefficients
        over all Z-masks come from one Walsh-Hadamard transform.
        """
        n, dim = self.n, self.dim

        shifted = []
        for m in (self.real, self.imag):
            rows = np.zeros((dim, dim), dtype=np.int64)
            coo = m.tocoo()
            # rows[x, col] = M[col ^ x, col]
            rows[coo.row ^ coo.col, coo.col] = coo.data
            shifted.append(walsh_hadamard(rows))
        wr, wi = shifted

        scale = dim * self.denominator
        terms = []
        xs, zs = np.nonzero((wr != 0) | (wi != 0))
        for x, z in zip(xs.tolist(), zs.tolist()):
            re, im = int(wr[x, z]), int(wi[x, z])
            # Multiply by conj(i**y).
            y = popcount(x & z) % 4
            if y == 1:
                re, im = im, -re
            elif y == 2:
                re, im = -re, -im
            elif y == 3:
                re, im = -im, re
            terms.append((PauliString.from_xz(n, x, z),
                          GaussianRational(Fraction(re, scale), Fraction(im, scale))))
        if not terms:
            return PauliSum(n)
        return PauliSum(n, terms)

    def __repr__(self):
        return 'DenseOperator(n=%i, nnz=%i, denominator=%i)' % (self.n, self.nnz(), self.denominator)


def walsh_hadamard(values):
    """
    Unnormalized Walsh-Hadamard transform along the last axis:
    ``W[..., z] = sum_b (-1)**popcount(b & z) * v[..., b]``.
    """
    v = np.array(values, copy=True)
    length = v.shape[-1]
    lead = v.shape[:-1]
    h = 1
    while h < length:
        v = v.reshape(lead + (length // (2 * h), 2, h))
        a = v[..., 0, :]
        c = v[..., 1, :]
        v = np.stack([a + c, a - c], axis=-2)
        h *= 2
    return v.reshape(lead + (length, ))


def to_dense(p):
    """
    Exact matrix of a PauliSum.

    :raises BudgetExceededError: beyond :data:`MAX_DENSE_QUBITS` qubits.
    """
    assert isinstance(p, PauliSum)
    n = p.n
    if n > MAX_DENSE_QUBITS:
        raise BudgetExceededError('No matrix realization beyond %i qubits (got %i).' % (
            MAX_DENSE_QUBITS, n))

    dim = 1 << n
    if p.is_zero():
        return DenseOperator.zero(n)

    scale = p.common_denominator()
    b = np.arange(dim, dtype=np.int64)
    rows, cols, re_data, im_data = [], [], [], []

    for string, coeff in p.terms():
        re, im = int(coeff.re * scale), int(coeff.im * scale)
        y = popcount(string.x & string.z) % 4
        if y == 1:
            re, im = -im, re
        elif y == 2:
            re, im = -re, -im
        elif y == 3:
            re, im = im, -re
        sign = 1 - 2 * (popcount_array(b & string.z) & 1)
        rows.append(b ^ string.x)
        cols.append(b)
        re_data.append(sign * re)
        im_data.append(sign * im)

    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    real = sp.coo_matrix((np.concatenate(re_data), (rows, cols)), shape=(dim, dim)).tocsr()
    imag = sp.coo_matrix((np.concatenate(im_data), (rows, cols)), shape=(dim, dim)).tocsr()
    return DenseOperator(n, real, imag, scale)


def permutation_operator(permutation, n=None):
    """
    Qubit permutation matrix of `permutation`: the state of qubit ``i`` is
    moved to qubit ``permutation(i)``. ``P(s) P(t) == P(s * t)``.
    """
    assert isinstance(permutation, Permutation)
    if n is None:
        n = permutation.n
    elif n != permutation.n:
        raise AlgebraError('Permutation acts on %i symbols, not %i.' % (permutation.n, n))

    dim = 1 << n
    b = np.arange(dim, dtype=np.int64)
    out = np.zeros(dim, dtype=np.int64)
    for i in range(n):
        out |= ((b >> i) & 1) << permutation(i)
    m = sp.coo_matrix((np.ones(dim, dtype=np.int64), (out, b)), shape=(dim, dim))
    return DenseOperator(n, m)
