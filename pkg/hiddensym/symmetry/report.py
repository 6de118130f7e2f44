"""
Hidden symmetries: commutant elements outside the span of the
automorphism permutation operators.
"""
from __future__ import unicode_literals
from fractions import Fraction

import numpy as np

from ..algebra.coefficients import GaussianRational
from ..algebra.dense import BudgetExceededError, DenseOperator, permutation_operator, to_dense
from ..algebra.hamiltonians import build_generators
from ..algebra.linalg import certified_rank, exact_rank
from ..algebra.pauli import AlgebraError, PauliSum
from ..graphs.automorphisms import automorphism_group
from ..graphs.graph import Graph
from ..utils import make_rng
from .commutant import DEFAULT_MAX_UNKNOWNS, CommutantBasis, commutant

__all__ = (
    'MAX_SPAN_ELEMENTS',
    'SymmetryReport',
    'aut_span_dim',
    'breaks_all_automorphisms',
    'membership_in_span',
    'symmetry_report',
)

#: Largest automorphism group whose operator span is computed.
MAX_SPAN_ELEMENTS = 1440

# Gram matrices up to this size are ranked with exact rationals.
_EXACT_RANK_LIMIT = 64


class SymmetryReport(object):
    """
    Result of :func:`symmetry_report`.

    `aut_span_dim` is the dimension of the span of the automorphism
    operators that also commute with the extra Hamiltonians; `hidden_dim`
    is the excess of the commutant over it.
    """
    def __init__(self, aut_order, aut_span_dim, commutant_basis):
        assert isinstance(commutant_basis, CommutantBasis)
        self.aut_order = aut_order
        self.aut_span_dim = aut_span_dim
        self.commutant = commutant_basis

    @property
    def commutant_dim(self):
        return self.commutant.dim

    @property
    def hidden_dim(self):
        return self.commutant_dim - self.aut_span_dim

    @property
    def has_hidden(self):
        return self.commutant_dim > self.aut_span_dim

    def to_json(self):
        return {
            'aut_order': self.aut_order,
            'aut_span_dim': self.aut_span_dim,
            'commutant_dim': self.commutant_dim,
            'hidden_dim': self.hidden_dim,
            'hidden': self.has_hidden,
        }

    def __repr__(self):
        return 'SymmetryReport(aut_order=%i, aut_span_dim=%i, commutant_dim=%i)' % (
            self.aut_order, self.aut_span_dim, self.commutant_dim)


def _rank(gram, rng):
    if len(gram) <= _EXACT_RANK_LIMIT:
        return exact_rank(gram)
    return certified_rank(np.array(gram, dtype=np.int64), rng)


def _trace_inner(a, b):
    " ``tr(a^dagger b)`` of two DenseOperators, exact. "
    re = a.real.multiply(b.real).sum() + a.imag.multiply(b.imag).sum()
    im = a.real.multiply(b.imag).sum() - a.imag.multiply(b.real).sum()
    d = a.denominator * b.denominator
    return GaussianRational(Fraction(int(re), d), Fraction(int(im), d))


def aut_span_dim(graph, extra=(), group=None, rng=None):
    """
    Dimension of ``span{P_s : s in Aut(graph)}`` intersected with the
    commutant of the `extra` Hamiltonians.

    Permutation operators are not linearly independent for ``n >= 3``, so
    the dimension is the rank of the Gram matrix
    ``tr(P_s^T P_t) = 2**cycles(s^-1 t)``. With extra Hamiltonians ``E``, the
    intersection has dimension ``rank{P_s} - rank{[P_s, E]}``.

    :raises BudgetExceededError: for groups larger than
        :data:`MAX_SPAN_ELEMENTS`.
    """
    assert isinstance(graph, Graph)
    group = group or automorphism_group(graph)
    rng = rng or make_rng(0)
    if group.order > MAX_SPAN_ELEMENTS:
        raise BudgetExceededError('Automorphism group of order %i is too large for the span (limit %i).' % (
            group.order, MAX_SPAN_ELEMENTS))

    elements = group.elements()
    gram = [[1 << (s.inverse() * t).cycle_count() for t in elements] for s in elements]
    span = _rank(gram, rng)

    extra = [e for e in extra if not e.is_zero()]
    if not extra or group.is_trivial():
        return span
    if group.order > _EXACT_RANK_LIMIT:
        raise BudgetExceededError('Automorphism group of order %i is too large to intersect with extra '
                                  'Hamiltonians (limit %i).' % (group.order, _EXACT_RANK_LIMIT))

    dense_extra = [to_dense(e) for e in extra]
    images = []
    for s in elements:
        p = permutation_operator(s, graph.n)
        # [P_s, E_k] stacked over k.
        images.append([p.commutator(e) for e in dense_extra])

    commutator_gram = []
    for a in images:
        row = []
        for b in images:
            total = GaussianRational()
            for ca, cb in zip(a, b):
                total = total + _trace_inner(ca, cb)
            row.append(total)
        commutator_gram.append(row)
    return span - exact_rank(commutator_gram)


def symmetry_report(graph, extra=(), include_hz=True, method='auto',
                    max_unknowns=DEFAULT_MAX_UNKNOWNS, rng=None):
    """
    Commutant of the global-control set of `graph` (plus `extra`) compared
    with the automorphism operators.

    :param include_hz: False for the QAOA pair ``{H_X, H_ZZ}``.
    """
    assert isinstance(graph, Graph)
    extra = list(extra)
    generators = build_generators(graph, include_hz=include_hz, extra=extra)
    basis = commutant(generators, graph.n, method=method, max_unknowns=max_unknowns, rng=rng)

    group = automorphism_group(graph)
    return SymmetryReport(group.order, aut_span_dim(graph, extra, group, rng), basis)


def breaks_all_automorphisms(graph, h):
    """
    True when no non-identity automorphism operator commutes with `h`:
    ``P_s h P_s^dagger != h`` for every ``s != 1`` in ``Aut(graph)``.
    """
    assert isinstance(graph, Graph) and isinstance(h, PauliSum)
    if h.n != graph.n:
        raise AlgebraError('Hamiltonian acts on %i qubits, the graph has %i vertices.' % (h.n, graph.n))

    for s in automorphism_group(graph).elements()[1:]:
        if h.permuted(s) == h:
            return False
    return True


def _traceless_hermitian(operator):
    if isinstance(operator, DenseOperator):
        operator = operator.to_pauli_sum()
    assert isinstance(operator, PauliSum)
    return operator.hermitian_part().traceless_part()


def membership_in_span(s, basis, tolerance=1e-8, exact_limit=128):
    """
    True when ``i * s0`` lies in the real span of ``{i * b}``, where ``s0``
    is the traceless Hermitian part of `s`. Equivalently ``s0`` lies in the
    real span of the Hermitian `basis` elements.

    Small bases are tested exactly over the rationals, larger ones by a
    least-squares residual below `tolerance` (relative).

    :param s: PauliSum or DenseOperator.
    :param basis: PauliSums or DenseOperators (Hermitian).
    """
    target = _traceless_hermitian(s)
    if target.is_zero():
        return True

    basis = [b.to_pauli_sum() if isinstance(b, DenseOperator) else b for b in basis]
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return False
    if any(b.n != target.n for b in basis):
        raise AlgebraError('Operators in the membership test act on different qubit counts.')

    strings = sorted(set(p for b in basis + [target] for p, _ in b.terms()), key=lambda p: p.index)
    column = dict((p, k) for k, p in enumerate(strings))

    def coordinates(op):
        # Real and imaginary parts, so the span is taken over the reals.
        row = [Fraction(0)] * (2 * len(strings))
        for p, c in op.terms():
            row[column[p]] = c.re
            row[len(strings) + column[p]] = c.im
        return row

    rows = [coordinates(b) for b in basis]
    t = coordinates(target)

    if len(basis) <= exact_limit:
        return exact_rank(rows + [t]) == exact_rank(rows)

    A = np.array([[float(v) for v in row] for row in rows]).T
    y = np.array([float(v) for v in t])
    x = np.linalg.lstsq(A, y, rcond=None)[0]
    residual = np.linalg.norm(A.dot(x) - y)
    return residual <= tolerance * max(np.linalg.norm(y), 1.0)
