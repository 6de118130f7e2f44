"""
Exact Gaussian rationals, ``re + i*im`` with Fraction parts.
"""
from __future__ import unicode_literals
from fractions import Fraction
import numbers

import six

__all__ = (
    'GaussianRational',
    'as_coefficient',
    'format_fraction',
    'parse_fraction',
)


def parse_fraction(text):
    " Parse ``'3'``, ``'-1/2'`` or ``'0.25'`` into a Fraction. "
    return Fraction(text.strip())


def format_fraction(value):
    " Inverse of :func:`parse_fraction`: ``'p'`` or ``'p/q'``. "
    value = Fraction(value)
    if value.denominator == 1:
        return '%i' % value.numerator
    return '%i/%i' % (value.numerator, value.denominator)


class GaussianRational(object):
    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        " Squared modulus, a Fraction. "
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = as_coefficient(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_coefficient(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_coefficient(other) - self

    def __mul__(self, other):
        other = as_coefficient(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_coefficient(other)
        d = other.norm2()
        if d == 0:
            raise ZeroDivisionError('Division by a zero Gaussian rational.')
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    __div__ = __truediv__

    def __rtruediv__(self, other):
        return as_coefficient(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        try:
            other = as_coefficient(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return 'GaussianRational(%s, %s)' % (format_fraction(self.re), format_fraction(self.im))


def as_coefficient(value):
    " Convert ints, Fractions, exact complex ints and Gaussian rationals. "
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (six.integer_types, Fraction)):
        return GaussianRational(value, 0)
    if isinstance(value, numbers.Rational):
        return GaussianRational(Fraction(value.numerator, value.denominator), 0)
    if isinstance(value, complex):
        if value.real != int(value.real) or value.imag != int(value.imag):
            raise TypeError('Only integral complex literals are exact: %r.' % (value, ))
        return GaussianRational(int(value.real), int(value.imag))
    if isinstance(value, numbers.Integral):
        return GaussianRational(int(value), 0)
    raise TypeError('Not an exact coefficient: %r.' % (value, ))
