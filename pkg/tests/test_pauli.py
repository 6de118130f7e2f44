from __future__ import unicode_literals
from fractions import Fraction

import pytest

from hiddensym.algebra.coefficients import GaussianRational
from hiddensym.algebra.pauli import (
    AlgebraError, PauliParseError, PauliString, PauliSum, commutator, pauli_product)
from hiddensym.graphs.graph import Permutation

I = GaussianRational(0, 1)


def test_string_layout():
    p = PauliString('XZYI')
    assert p.n == 4
    assert p.x == 0b0101
    assert p.z == 0b0110
    assert p.letters == 'XZYI'
    assert p.weight == 3
    assert PauliString.from_index(4, p.index) == p
    assert PauliString.identity(3).letters == 'III'

    with pytest.raises(PauliParseError):
        PauliString('XQ')


def test_single_qubit_products():
    def product(a, b):
        phase, s = pauli_product(PauliString(a), PauliString(b))
        return phase, s.letters

    assert product('X', 'Y') == (I, 'Z')
    assert product('Y', 'X') == (-I, 'Z')
    assert product('Y', 'Z') == (I, 'X')
    assert product('Z', 'X') == (I, 'Y')
    assert product('X', 'X') == (GaussianRational(1), 'I')
    assert product('XY', 'YX') == (GaussianRational(1), 'ZZ')


def test_commutation():
    assert PauliString('XX').commutes_with(PauliString('ZZ'))
    assert not PauliString('XI').commutes_with(PauliString('ZZ'))
    assert PauliString('XYZ').commutes_with(PauliString('XYZ'))


def test_sums_merge_and_cancel():
    a = PauliSum(2, [('XI', 1), ('ZZ', Fraction(1, 2))])
    b = PauliSum(2, [('XI', -1), ('ZZ', Fraction(1, 2))])
    assert a + b == PauliSum(2, [('ZZ', 1)])
    assert (a - a).is_zero()
    assert len(a + b) == 1
    assert PauliSum.zero(2) == 0
    assert PauliSum.identity(2, 3) == 3


def test_dot_and_commutator():
    x = PauliSum.single(1, 'X', 0)
    y = PauliSum.single(1, 'Y', 0)
    z = PauliSum.single(1, 'Z', 0)
    assert x.dot(y) == z * I
    assert x @ x == 1
    assert commutator(x, y) == z * (2 * I)
    assert x.commutator(x).is_zero()
    assert x.anticommutator(y).is_zero()
    assert x.anticommutator(x) == 2
    assert (x + z).power(2) == 2


def test_commutator_matches_products(rng):
    letters = 'IXYZ'
    for _ in range(20):
        a = PauliSum(3, [(''.join(letters[k] for k in rng.integers(0, 4, 3)), int(rng.integers(-3, 4)))
                         for _ in range(4)])
        b = PauliSum(3, [(''.join(letters[k] for k in rng.integers(0, 4, 3)), int(rng.integers(-3, 4)))
                         for _ in range(4)])
        assert a.commutator(b) == a.dot(b) - b.dot(a)


def test_hermiticity_and_reality():
    h = PauliSum(2, [('XY', 1), ('ZI', Fraction(1, 3))])
    assert h.is_hermitian()
    assert not h.is_real()
    assert (h * I).dagger() == h * -I
    assert not (h * I).is_hermitian()
    assert PauliSum(2, [('YY', 1), ('XZ', 2)]).is_real()
    assert PauliSum(2, [('IY', I)]).is_real()
    assert h.hermitian_part() == h


def test_identity_and_traceless_parts():
    h = PauliSum(2, [('II', 5), ('XX', 1)])
    assert h.identity_coefficient() == 5
    assert h.traceless_part() == PauliSum(2, [('XX', 1)])
    assert h.inner(h) == 26
    assert PauliSum(2, [('XX', Fraction(1, 6)), ('ZZ', Fraction(1, 4))]).common_denominator() == 12


def test_multiples():
    a = PauliSum(2, [('XX', 1), ('ZZ', 2)])
    assert (a * Fraction(-3, 2)).is_multiple_of(a)
    assert PauliSum.zero(2).is_multiple_of(a)
    assert not PauliSum(2, [('XX', 1), ('ZZ', 1)]).is_multiple_of(a)


def test_permuted():
    p = PauliSum(3, [('XZI', 1)])
    assert p.permuted(Permutation([2, 0, 1])) == PauliSum(3, [('ZIX', 1)])


def test_qubit_count_mismatch():
    with pytest.raises(AlgebraError):
        PauliSum(2, [('XXX', 1)])
    with pytest.raises(AlgebraError):
        PauliSum(2) + PauliSum(3)
    with pytest.raises(AlgebraError):
        PauliSum.single(2, 'X', 2)


def test_text_format():
    h = PauliSum(3, [('XIZ', Fraction(-1, 2)), ('YYI', GaussianRational(0, 3))])
    text = h.to_text()
    assert text == '-1/2 0 XIZ\n0 3 YYI'
    assert PauliSum.parse(text) == h
    assert PauliSum.parse('# comment\n\n1 0 ZZ\n') == PauliSum(2, [('ZZ', 1)])


@pytest.mark.parametrize('text', [
    '',
    '1 ZZ',
    'a 0 ZZ',
    '1 0 ZZ\n1 0 ZZZ',
    '1 0 ZQ',
])
def test_parse_errors(text):
    with pytest.raises(PauliParseError):
        PauliSum.parse(text)
