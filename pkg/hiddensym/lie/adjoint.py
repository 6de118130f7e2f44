"""
Adjoint-representation symmetries.

A generator set is universal exactly when the superoperators commuting with
every ``ad_H = [H, .]`` form a two-dimensional space. On ``n`` qubits the
operator space is ``2n`` qubits wide, and ``ad_H`` is realized there as
``H (x) 1 - 1 (x) H^T``, so the ordinary commutant machinery applies.
"""
from __future__ import unicode_literals

from ..algebra.dense import BudgetExceededError
from ..algebra.pauli import AlgebraError, PauliString, PauliSum
from ..symmetry.commutant import DEFAULT_MAX_UNKNOWNS, commutant

__all__ = (
    'MAX_ADJOINT_QUBITS',
    'adjoint_generator',
    'adjoint_symmetry_dim',
)

#: Largest qubit count handled by :func:`adjoint_symmetry_dim`.
MAX_ADJOINT_QUBITS = 3


def adjoint_generator(h):
    """
    ``ad_h`` as a PauliSum on ``2n`` qubits: ``h`` on the first ``n``
    qubits minus ``h^T`` on the last ``n``. Transposition flips the sign of
    strings with an odd number of Y letters.
    """
    assert isinstance(h, PauliSum)
    n = h.n
    terms = []
    for string, coeff in h.terms():
        if string.is_identity():
            continue
        y_count = bin(string.x & string.z).count('1')
        terms.append((PauliString.from_xz(2 * n, string.x, string.z), coeff))
        sign = -1 if y_count % 2 == 0 else 1
        terms.append((PauliString.from_xz(2 * n, string.x << n, string.z << n), coeff * sign))
    return PauliSum(2 * n, terms)


def adjoint_symmetry_dim(generators, max_unknowns=DEFAULT_MAX_UNKNOWNS, rng=None):
    """
    Dimension of the commutant of ``{ad_H : H in generators}`` on the
    ``4**n``-dimensional operator space. Equals 2 exactly for universal
    sets.

    :raises BudgetExceededError: beyond :data:`MAX_ADJOINT_QUBITS` qubits.
    """
    generators = list(generators)
    if not generators:
        raise AlgebraError('The adjoint criterion needs at least one generator.')
    n = generators[0].n
    if n > MAX_ADJOINT_QUBITS:
        raise BudgetExceededError('The adjoint criterion is limited to %i qubits (got %i).' % (
            MAX_ADJOINT_QUBITS, n))

    adjoints = [adjoint_generator(h) for h in generators]
    adjoints = [a for a in adjoints if not a.is_zero()]
    return commutant(adjoints, 2 * n, max_unknowns=max_unknowns, rng=rng).dim
