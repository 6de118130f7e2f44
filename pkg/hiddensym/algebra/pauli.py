"""
Exact n-qubit Pauli algebra.

A Pauli string is stored in symplectic form: bit ``j`` of ``x`` and ``z``
describes the letter on qubit ``j`` (I = 00, X = 10, Z = 01, Y = 11), and
the letters are written left to right starting with qubit 0. The string
equals ``i**popcount(x & z) * X**x * Z**z``.
"""
from __future__ import unicode_literals
from fractions import Fraction
import functools
import math

import six

from .coefficients import GaussianRational, as_coefficient, format_fraction, parse_fraction
from ..utils import popcount

__all__ = (
    'AlgebraError',
    'PauliParseError',
    'PauliString',
    'PauliSum',
    'commutator',
    'pauli_product',
)

_LETTER_BITS = {'I': (0, 0), 'X': (1, 0), 'Z': (0, 1), 'Y': (1, 1)}
_BITS_LETTER = dict((v, k) for k, v in _LETTER_BITS.items())

_PHASES = [GaussianRational(1), GaussianRational(0, 1),
           GaussianRational(-1), GaussianRational(0, -1)]


class AlgebraError(Exception):
    " Inconsistent operands, e.g. mismatched qubit counts. "
    def __init__(self, message):
        super(AlgebraError, self).__init__(message)
        self.message = message


class PauliParseError(AlgebraError):
    " Malformed PauliSum text. "


@functools.total_ordering
class PauliString(object):
    __slots__ = ('n', 'x', 'z')

    def __init__(self, letters):
        assert isinstance(letters, six.string_types)
        x = z = 0
        for j, letter in enumerate(letters.upper()):
            try:
                bx, bz = _LETTER_BITS[letter]
            except KeyError:
                raise PauliParseError('Invalid Pauli letter %r in %r.' % (letter, letters))
            x |= bx << j
            z |= bz << j
        self.n = len(letters)
        self.x = x
        self.z = z

    @classmethod
    def from_xz(cls, n, x, z):
        p = cls.__new__(cls)
        p.n = n
        p.x = x
        p.z = z
        return p

    @classmethod
    def identity(cls, n):
        return cls.from_xz(n, 0, 0)

    @classmethod
    def from_index(cls, n, index):
        " Inverse of :attr:`index`. "
        mask = (1 << n) - 1
        return cls.from_xz(n, index & mask, index >> n)

    @property
    def letters(self):
        return ''.join(_BITS_LETTER[((self.x >> j) & 1, (self.z >> j) & 1)]
                       for j in range(self.n))

    @property
    def index(self):
        " Integer ``x | z << n``, a dense index into the 4**n Pauli strings. "
        return self.x | (self.z << self.n)

    @property
    def weight(self):
        return popcount(self.x | self.z)

    def is_identity(self):
        return self.x == 0 and self.z == 0

    def is_diagonal(self):
        return self.x == 0

    def commutes_with(self, other):
        return (popcount(self.x & other.z) + popcount(self.z & other.x)) % 2 == 0

    def permuted(self, permutation):
        " Move the letter of qubit ``j`` to qubit ``permutation(j)``. "
        x = z = 0
        for j in range(self.n):
            t = permutation(j)
            x |= ((self.x >> j) & 1) << t
            z |= ((self.z >> j) & 1) << t
        return PauliString.from_xz(self.n, x, z)

    def __eq__(self, other):
        return (isinstance(other, PauliString) and self.n == other.n and
                self.x == other.x and self.z == other.z)

    def __lt__(self, other):
        # 'I' < 'X' < 'Y' < 'Z' in ASCII.
        return self.letters < other.letters

    def __hash__(self):
        return hash((self.n, self.x, self.z))

    def __repr__(self):
        return 'PauliString(%r)' % (self.letters, )


def _phase_exponent(a, b):
    " Exponent k with ``a * b == i**k * (a xor b)``, modulo 4. "
    mask = (1 << a.n) - 1
    y1 = a.x & a.z
    x1 = a.x & ~a.z & mask
    z1 = ~a.x & a.z & mask
    k = (popcount(y1 & b.z) - popcount(y1 & b.x) +
         popcount(x1 & b.z & b.x) - popcount(x1 & b.z & ~b.x) +
         popcount(z1 & b.x & ~b.z) - popcount(z1 & b.x & b.z))
    return k % 4


def pauli_product(a, b):
    """
    Product of two Pauli strings, as ``(phase, string)`` with phase one of
    1, i, -1, -i (a :class:`GaussianRational`).
    """
    assert isinstance(a, PauliString) and isinstance(b, PauliString)
    if a.n != b.n:
        raise AlgebraError('Qubit counts differ: %i and %i.' % (a.n, b.n))
    return (_PHASES[_phase_exponent(a, b)],
            PauliString.from_xz(a.n, a.x ^ b.x, a.z ^ b.z))


class PauliSum(object):
    """
    Linear combination of Pauli strings with exact Gaussian rational
    coefficients. Zero coefficients are never stored, so equality is
    structural.
    """
    __slots__ = ('n', '_terms')

    def __init__(self, n, terms=None):
        assert isinstance(n, six.integer_types) and n >= 1
        self.n = n
        self._terms = {}

        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for string, coeff in items:
                if isinstance(string, six.string_types):
                    string = PauliString(string)
                if string.n != n:
                    raise AlgebraError('Pauli string %r does not act on %i qubits.' % (
                        string.letters, n))
                self._accumulate(string, as_coefficient(coeff))

    def _accumulate(self, string, coeff):
        total = self._terms.get(string)
        total = coeff if total is None else total + coeff
        if total.is_zero():
            self._terms.pop(string, None)
        else:
            self._terms[string] = total

    @classmethod
    def _from_dict(cls, n, terms):
        result = cls(n)
        result._terms = terms
        return result

    # Constructors.

    @classmethod
    def identity(cls, n, coeff=1):
        return cls(n, [(PauliString.identity(n), coeff)])

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def single(cls, n, letter, qubit, coeff=1):
        " One letter on one qubit, identity elsewhere. "
        return cls.from_letters(n, {qubit: letter}, coeff)

    @classmethod
    def from_letters(cls, n, letters, coeff=1):
        """
        :param letters: dict mapping qubit index to 'X', 'Y' or 'Z'.
        """
        text = ['I'] * n
        for qubit, letter in letters.items():
            if not 0 <= qubit < n:
                raise AlgebraError('Qubit %r out of range for n=%i.' % (qubit, n))
            text[qubit] = letter
        return cls(n, [(''.join(text), coeff)])

    # Access.

    def terms(self):
        " ``(PauliString, coefficient)`` pairs in letter order. "
        return sorted(self._terms.items(), key=lambda item: item[0].letters)

    def coefficient(self, string):
        if isinstance(string, six.string_types):
            string = PauliString(string)
        return self._terms.get(string, GaussianRational())

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_diagonal(self):
        return all(s.is_diagonal() for s in self._terms)

    def is_hermitian(self):
        return all(c.is_real() for c in self._terms.values())

    def is_real(self):
        """
        True when the matrix has real entries. A string is real iff it has
        an even number of Y letters.
        """
        for s, c in self._terms.items():
            even = popcount(s.x & s.z) % 2 == 0
            if (even and not c.is_real()) or (not even and c.re != 0):
                return False
        return True

    def identity_coefficient(self):
        return self._terms.get(PauliString.identity(self.n), GaussianRational())

    def traceless_part(self):
        terms = dict(self._terms)
        terms.pop(PauliString.identity(self.n), None)
        return PauliSum._from_dict(self.n, terms)

    def hermitian_part(self):
        return (self + self.dagger()) * Fraction(1, 2)

    def common_denominator(self):
        " Least common multiple of all coefficient denominators. "
        result = 1
        for c in self._terms.values():
            for part in (c.re, c.im):
                d = part.denominator
                result = result * d // math.gcd(result, d)
        return result

    # Arithmetic.

    def _check(self, other):
        if not isinstance(other, PauliSum):
            raise AlgebraError('Expected a PauliSum, got %r.' % (other, ))
        if other.n != self.n:
            raise AlgebraError('Qubit counts differ: %i and %i.' % (self.n, other.n))

    def __add__(self, other):
        if not isinstance(other, PauliSum):
            other = PauliSum.identity(self.n, other)
        self._check(other)
        result = PauliSum._from_dict(self.n, dict(self._terms))
        for s, c in other._terms.items():
            result._accumulate(s, c)
        return result

    __radd__ = __add__

    def __neg__(self):
        return PauliSum._from_dict(self.n, dict((s, -c) for s, c in self._terms.items()))

    def __sub__(self, other):
        if not isinstance(other, PauliSum):
            other = PauliSum.identity(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PauliSum):
            return self.dot(other)
        c = as_coefficient(other)
        if c.is_zero():
            return PauliSum(self.n)
        return PauliSum._from_dict(self.n, dict((s, v * c) for s, v in self._terms.items()))

    def __rmul__(self, other):
        c = as_coefficient(other)
        if c.is_zero():
            return PauliSum(self.n)
        return PauliSum._from_dict(self.n, dict((s, c * v) for s, v in self._terms.items()))

    def dot(self, other):
        " Operator product ``self @ other``. "
        self._check(other)
        result = PauliSum(self.n)
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                phase, s = pauli_product(a, b)
                result._accumulate(s, ca * cb * phase)
        return result

    __matmul__ = dot

    def dagger(self):
        return PauliSum._from_dict(self.n, dict(
            (s, c.conjugate()) for s, c in self._terms.items()))

    def commutator(self, other):
        """
        ``[self, other]``. Only anticommuting string pairs contribute, each
        with twice the product.
        """
        self._check(other)
        result = PauliSum(self.n)
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                if a.commutes_with(b):
                    continue
                phase, s = pauli_product(a, b)
                result._accumulate(s, ca * cb * phase * 2)
        return result

    def anticommutator(self, other):
        return self.dot(other) + other.dot(self)

    def permuted(self, permutation):
        " Conjugation by the qubit permutation operator of `permutation`. "
        return PauliSum._from_dict(self.n, dict(
            (s.permuted(permutation), c) for s, c in self._terms.items()))

    def inner(self, other):
        " Normalized trace inner product ``tr(self^dagger other) / 2**n``. "
        self._check(other)
        total = GaussianRational()
        for s, c in self._terms.items():
            d = other._terms.get(s)
            if d is not None:
                total = total + c.conjugate() * d
        return total

    def power(self, k):
        result = PauliSum.identity(self.n)
        for _ in range(k):
            result = result.dot(self)
        return result

    # Comparison.

    def __eq__(self, other):
        if not isinstance(other, PauliSum):
            if self.n and isinstance(other, six.integer_types + (Fraction, GaussianRational)):
                return self == PauliSum.identity(self.n, other)
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def is_multiple_of(self, other):
        """
        True when ``self == c * other`` for some scalar ``c`` (zero
        included).
        """
        self._check(other)
        if self.is_zero():
            return True
        if set(self._terms) != set(other._terms):
            return False
        ratio = None
        for s, c in self._terms.items():
            r = c / other._terms[s]
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
        return True

    # Serialization.

    def to_text(self):
        """
        One term per line, ``re im LETTERS``, exact rationals as ``p/q``,
        terms in letter order.
        """
        return '\n'.join('%s %s %s' % (format_fraction(c.re), format_fraction(c.im), s.letters)
                         for s, c in self.terms())

    @classmethod
    def parse(cls, text, n=None):
        """
        Parse the format written by :meth:`to_text`. Blank lines and lines
        starting with ``#`` are skipped.
        """
        terms = []
        for number, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise PauliParseError('Line %i: expected "re im LETTERS", got %r.' % (number, line))
            try:
                coeff = GaussianRational(parse_fraction(parts[0]), parse_fraction(parts[1]))
            except (ValueError, ZeroDivisionError):
                raise PauliParseError('Line %i: invalid coefficient in %r.' % (number, line))
            string = PauliString(parts[2])
            if n is None:
                n = string.n
            elif string.n != n:
                raise PauliParseError('Line %i: expected %i letters, got %r.' % (number, n, parts[2]))
            terms.append((string, coeff))

        if n is None:
            raise PauliParseError('No terms and no qubit count given.')
        return cls(n, terms)

    def __repr__(self):
        if not self._terms:
            return 'PauliSum(%i, 0)' % self.n
        parts = []
        for s, c in self.terms():
            if c.im == 0:
                coeff = format_fraction(c.re)
            else:
                coeff = '(%s%+si)' % (format_fraction(c.re), format_fraction(c.im))
            parts.append('%s*%s' % (coeff, s.letters))
        return 'PauliSum(%s)' % ' + '.join(parts)


def commutator(a, b):
    " Exact ``[a, b] = ab - ba``. "
    assert isinstance(a, PauliSum)
    return a.commutator(b)
