"""
Exact commutants of Hermitian generator sets.

The commutant of a set of Hermitian operators is closed under the adjoint,
so it is spanned by Hermitian operators ``S = A + iB`` with ``A`` real
symmetric and ``B`` real antisymmetric. The unknowns are the independent
entries of ``A`` and ``B``; every generator ``H = Hr + iHi`` contributes the
real equations

    [Hr, A] - [Hi, B] = 0,    [Hr, B] + [Hi, A] = 0.

For real generators the two systems decouple.

When some generators are diagonal, ``S`` has to be block diagonal on the
joint level sets of their diagonals, and only those blocks carry unknowns.
For a block pair ``(a, b)`` the remaining equations read
``H_ab S_b - S_a H_ab = 0``; with column-major vectorization,
``vec(A X B) = (B^T kron A) vec(X)``.
"""
from __future__ import unicode_literals
import json

import numpy as np
import scipy.sparse as sp

from ..algebra.dense import BudgetExceededError, DenseOperator, to_dense
from ..algebra.hamiltonians import generators_hash
from ..algebra.linalg import integer_kernel
from ..algebra.pauli import AlgebraError, PauliParseError, PauliSum
from ..log import logger
from ..utils import make_rng

__all__ = (
    'CommutantBasis',
    'DEFAULT_MAX_UNKNOWNS',
    'commutant',
    'commutant_fast',
    'joint_level_sets',
)

#: Default bound on the number of matrix entries carrying unknowns. Every
#: catalog graph fits; graph J on nine vertices needs 9880.
DEFAULT_MAX_UNKNOWNS = 16384

_METHODS = ('auto', 'dense', 'fast')


class CommutantBasis(object):
    """
    Exact basis of the commutant: Hermitian :class:`DenseOperator` elements,
    linearly independent, each commuting with every generator.

    :param generators: The PauliSums the commutant was computed for.
    :param stats: Dict with the method, class count and unknown count.
    """
    def __init__(self, n, basis, generators=(), stats=None):
        assert all(isinstance(b, DenseOperator) for b in basis)
        self.n = n
        self.basis = list(basis)
        self.generators = list(generators)
        self.stats = dict(stats or {})

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def contains(self, operator):
        """
        True when `operator` lies in the commutant. The basis spans the whole
        commutant, so this is the exact test "commutes with every generator".
        """
        if isinstance(operator, PauliSum):
            return all(operator.commutator(g).is_zero() for g in self.generators)
        assert isinstance(operator, DenseOperator)
        return all(operator.commutator(to_dense(g)).is_zero() for g in self.generators)

    def check(self):
        " Assert the defining property of every basis element, exactly. "
        dense = [to_dense(g) for g in self.generators]
        for k, b in enumerate(self.basis):
            for h in dense:
                if not b.commutator(h).is_zero():
                    raise AlgebraError('Commutant element %i does not commute with a generator.' % k)
        return True

    def random_element(self, rng, spread=1000):
        """
        Random integer combination of the basis, coefficients drawn from
        ``[-spread, spread]``.
        """
        coefficients = rng.integers(-spread, spread + 1, size=self.dim)
        result = DenseOperator.zero(self.n)
        for c, b in zip(coefficients.tolist(), self.basis):
            if c:
                result = result + b * c
        return result

    def to_pauli_sums(self):
        return [b.to_pauli_sum() for b in self.basis]

    def dumps(self):
        """
        Text form: one JSON header line ``{n, dim, generators_hash}``, then
        each element as a ``# element k`` line followed by its PauliSum
        text.
        """
        header = {
            'n': self.n,
            'dim': self.dim,
            'generators_hash': generators_hash(self.generators) if self.generators else None,
        }
        lines = [json.dumps(header, sort_keys=True)]
        for k, p in enumerate(self.to_pauli_sums()):
            lines.append('# element %i' % k)
            lines.append(p.to_text())
        return '\n'.join(lines) + '\n'

    @classmethod
    def loads(cls, text, generators=()):
        " Inverse of :meth:`dumps`. "
        lines = text.splitlines()
        if not lines:
            raise PauliParseError('Empty commutant file.')
        try:
            header = json.loads(lines[0])
            n, dim = int(header['n']), int(header['dim'])
        except (ValueError, KeyError, TypeError):
            raise PauliParseError('Invalid commutant header: %r.' % lines[0])

        chunks = []
        for line in lines[1:]:
            if line.startswith('# element'):
                chunks.append([])
            elif chunks:
                chunks[-1].append(line)
            elif line.strip():
                raise PauliParseError('Data before the first element: %r.' % line)

        if len(chunks) != dim:
            raise PauliParseError('Header announces %i elements, found %i.' % (dim, len(chunks)))
        basis = [to_dense(PauliSum.parse('\n'.join(chunk), n)) for chunk in chunks]
        return cls(n, basis, generators, {'method': 'loaded'})

    def __repr__(self):
        return 'CommutantBasis(n=%i, dim=%i)' % (self.n, self.dim)


def joint_level_sets(diagonals, dim):
    """
    Partition of ``range(dim)`` into the joint level sets of the diagonals
    of `diagonals` (DenseOperators), ordered by smallest member.
    """
    if not diagonals:
        return [np.arange(dim)]

    keys = np.stack([d.real.diagonal() for d in diagonals], axis=1)
    _, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).ravel()

    first = np.full(inverse.max() + 1, dim, dtype=np.int64)
    np.minimum.at(first, inverse, np.arange(dim))
    return [np.flatnonzero(inverse == label) for label in np.argsort(first, kind='stable')]


class _Layout(object):
    """
    Unknown layout of block-diagonal operators: class ``a`` owns the
    full coordinates ``offset[a] + r + c * m_a`` for its entry ``(r, c)``.
    """
    def __init__(self, classes, dim):
        self.classes = classes
        self.sizes = [len(c) for c in classes]
        self.offsets = np.concatenate([[0], np.cumsum([m * m for m in self.sizes])]).astype(np.int64)
        self.total = int(self.offsets[-1])

        self.class_of = np.empty(dim, dtype=np.int64)
        for a, members in enumerate(classes):
            self.class_of[members] = a

        rows, cols = [], []
        for members, m in zip(classes, self.sizes):
            local = np.arange(m * m)
            rows.append(members[local % m])
            cols.append(members[local // m])
        self.full_row = np.concatenate(rows)
        self.full_col = np.concatenate(cols)

        self.sym = self._parametrization(antisymmetric=False)
        self.anti = self._parametrization(antisymmetric=True)

    def _parametrization(self, antisymmetric):
        rows, cols, data = [], [], []
        k = 0
        for offset, m in zip(self.offsets.tolist(), self.sizes):
            start = 1 if antisymmetric else 0
            r, c = np.triu_indices(m, start)
            count = len(r)
            index = np.arange(k, k + count)
            upper = offset + r + c * m
            lower = offset + c + r * m
            if antisymmetric:
                rows.extend([upper, lower])
                cols.extend([index, index])
                data.extend([np.ones(count, dtype=np.int64), -np.ones(count, dtype=np.int64)])
            else:
                off = r != c
                rows.extend([upper, lower[off]])
                cols.extend([index, index[off]])
                data.extend([np.ones(count, dtype=np.int64), np.ones(int(off.sum()), dtype=np.int64)])
            k += count

        if k == 0:
            return sp.csr_matrix((self.total, 0), dtype=np.int64)
        return sp.coo_matrix((np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
                             shape=(self.total, k), dtype=np.int64).tocsr()

    def block_pairs(self, K):
        " Set of class pairs ``(a, b)`` where ``K`` has a nonzero entry. "
        coo = K.tocoo()
        return set(zip(self.class_of[coo.row].tolist(), self.class_of[coo.col].tolist()))

    def commutator_map(self, K, pairs=None):
        """
        Sparse matrix sending the full coordinates of a block-diagonal ``S``
        to the vectorized block pairs of ``[K, S]``.

        :param pairs: Block pairs that make up the rows, in order. Defaults
            to the nonzero block pairs of ``K``.
        """
        if pairs is None:
            pairs = sorted(self.block_pairs(K))

        rows, cols, data = [], [], []
        row_offset = 0
        for a, b in pairs:
            ia, ib = self.classes[a], self.classes[b]
            ma, mb = len(ia), len(ib)
            block = K[ia][:, ib]

            left = sp.kron(sp.identity(mb, dtype=np.int64), block).tocoo()
            right = sp.kron(block.T, sp.identity(ma, dtype=np.int64)).tocoo()
            rows.extend([left.row + row_offset, right.row + row_offset])
            cols.extend([left.col + self.offsets[b], right.col + self.offsets[a]])
            data.extend([left.data, -right.data])
            row_offset += ma * mb

        if not rows:
            return sp.csr_matrix((0, self.total), dtype=np.int64)
        return sp.coo_matrix((np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
                             shape=(row_offset, self.total), dtype=np.int64).tocsr()

    def operator(self, n, real_coords, imag_coords):
        " DenseOperator from full coordinates of its real and imaginary parts. "
        dim = 1 << n
        parts = []
        for coords in (real_coords, imag_coords):
            if coords is None:
                parts.append(None)
                continue
            nz = np.flatnonzero(coords)
            parts.append(sp.coo_matrix((coords[nz], (self.full_row[nz], self.full_col[nz])),
                                       shape=(dim, dim), dtype=np.int64))
        real = parts[0] if parts[0] is not None else sp.csr_matrix((dim, dim), dtype=np.int64)
        return DenseOperator(n, real, parts[1])


def _stack(blocks, ncols):
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return sp.csr_matrix((0, ncols), dtype=np.int64)
    return sp.vstack(blocks, format='csr')


def _solve(generators, n, classes, method, max_unknowns, rng):
    for g in generators:
        if g.n != n:
            raise AlgebraError('Generators act on different qubit counts (%i and %i).' % (g.n, n))
        if not g.is_hermitian():
            raise AlgebraError('Commutants are only computed for Hermitian generators.')

    layout = _Layout(classes, 1 << n)
    stats = {
        'method': method,
        'classes': len(classes),
        'largest_class': max(layout.sizes),
        'unknowns': layout.total,
    }
    if layout.total > max_unknowns:
        raise BudgetExceededError('Commutant needs %i unknowns, the budget is %i.' % (
            layout.total, max_unknowns))
    logger.debug('Commutant (%s): n=%i, %i classes, %i unknowns.',
                 method, n, len(classes), layout.total)

    dense = [to_dense(g) for g in generators]
    if method == 'fast':
        dense = [d for d in dense if not d.is_diagonal()]

    T_sym, T_anti = layout.sym, layout.anti

    basis = []
    if not any(d.imag.nnz for d in dense):
        real_maps = [layout.commutator_map(d.real) for d in dense]
        sym_system = _stack([L.dot(T_sym) for L in real_maps], T_sym.shape[1])
        anti_system = _stack([L.dot(T_anti) for L in real_maps], T_anti.shape[1])

        for vector in integer_kernel(sym_system, rng):
            coords = T_sym.dot(np.array(vector, dtype=np.int64))
            basis.append(layout.operator(n, coords, None))
        for vector in integer_kernel(anti_system, rng):
            coords = T_anti.dot(np.array(vector, dtype=np.int64))
            basis.append(layout.operator(n, None, coords))
    else:
        blocks = []
        for d in dense:
            pairs = sorted(layout.block_pairs(d.real) | layout.block_pairs(d.imag))
            Lr = layout.commutator_map(d.real, pairs)
            Li = layout.commutator_map(d.imag, pairs)
            blocks.append(sp.hstack([Lr.dot(T_sym), -Li.dot(T_anti)], format='csr'))
            blocks.append(sp.hstack([Li.dot(T_sym), Lr.dot(T_anti)], format='csr'))
        system = _stack(blocks, T_sym.shape[1] + T_anti.shape[1])

        split = T_sym.shape[1]
        for vector in integer_kernel(system, rng):
            v = np.array(vector, dtype=np.int64)
            basis.append(layout.operator(n, T_sym.dot(v[:split]), T_anti.dot(v[split:])))

    logger.info('Commutant (%s): dimension %i.', method, len(basis))
    return CommutantBasis(n, basis, generators, stats)


def _qubits(generators, n):
    if n is None:
        if not generators:
            raise AlgebraError('The qubit count is required for an empty generator set.')
        n = generators[0].n
    return n


def commutant(generators, n=None, method='auto', max_unknowns=DEFAULT_MAX_UNKNOWNS, rng=None):
    """
    Exact commutant of `generators` (Hermitian PauliSums).

    :param method: ``'dense'`` solves for all ``4**n`` entries, ``'fast'``
        restricts to the joint level sets of the diagonal generators,
        ``'auto'`` picks ``'fast'`` when a diagonal generator exists.
    :param rng: numpy Generator for the modular primes. The result does not
        depend on it.
    :raises BudgetExceededError: when the unknown count exceeds
        `max_unknowns`.
    """
    if method not in _METHODS:
        raise AlgebraError('Unknown commutant method %r.' % (method, ))
    generators = list(generators)
    n = _qubits(generators, n)

    if method == 'auto':
        method = 'fast' if any(g.is_diagonal() for g in generators) else 'dense'
    if method == 'fast':
        return commutant_fast(generators, max_unknowns=max_unknowns, rng=rng)

    rng = rng or make_rng(0)
    return _solve(generators, n, [np.arange(1 << n)], 'dense', max_unknowns, rng)


def commutant_fast(generators, max_unknowns=DEFAULT_MAX_UNKNOWNS, rng=None):
    """
    Commutant with the unknowns restricted to the joint eigenspaces of the
    diagonal generators. Same subspace as :func:`commutant` with
    ``method='dense'``.

    :raises AlgebraError: when no generator is diagonal.
    """
    generators = list(generators)
    diagonals = [g for g in generators if g.is_diagonal()]
    if not diagonals:
        raise AlgebraError('The fast commutant needs at least one diagonal generator.')

    n = generators[0].n
    classes = joint_level_sets([to_dense(d) for d in diagonals], 1 << n)
    rng = rng or make_rng(0)
    return _solve(generators, n, classes, 'fast', max_unknowns, rng)
