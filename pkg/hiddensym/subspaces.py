"""
Invariant subspace decompositions.

Two ways to split the Hilbert space into the smallest subspaces left
invariant by every generator:

- ``'commutant'``: the eigenspaces of a random Hermitian commutant element
  are the invariant blocks. Each block is then compressed with a second
  random element and split again until the compression is scalar.
- ``'connectivity'``: eigenvectors of a random element of the algebra are
  linked whenever some generator has a matrix element between them; the
  spans of the linked components are invariant. Components are refined in
  the same way. This needs no commutant and is used beyond the commutant
  budget.

Krylov reachability is the oracle for both.
"""
from __future__ import unicode_literals
from fractions import Fraction

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .algebra.coefficients import GaussianRational
from .algebra.dense import BudgetExceededError, to_dense, walsh_hadamard
from .algebra.hamiltonians import build_generators, generators_hash
from .algebra.pauli import AlgebraError, PauliString, PauliSum
from .constructions.result_two import build_result_two
from .log import logger
from .symmetry.commutant import DEFAULT_MAX_UNKNOWNS, commutant
from .utils import make_rng, popcount_array

__all__ = (
    'SubspaceDecomposition',
    'decompose',
    'extended_blocks_Q',
    'krylov_span',
    'reflection_blocks',
)

#: Relative eigenvalue gap separating clusters.
CLUSTER_TOLERANCE = 1e-8

_METHODS = ('auto', 'commutant', 'connectivity')


class SubspaceDecomposition(object):
    """
    Orthonormal bases (``2**n x m`` complex arrays) of the invariant blocks.
    `dims` is sorted ascending.
    """
    def __init__(self, n, blocks, generators, seed, method):
        self.n = n
        self.blocks = sorted(blocks, key=lambda b: b.shape[1])
        self.generators = list(generators)
        self.seed = seed
        self.method = method

    @property
    def dims(self):
        return [b.shape[1] for b in self.blocks]

    def residual(self):
        """
        Largest ``|(1 - P_V) H V|`` over generators and blocks, relative to
        the generator norm. Zero up to rounding for invariant blocks.
        """
        worst = 0.0
        for g in self.generators:
            h = to_dense(g).tosparse()
            scale = max(abs(h).max(), 1e-300) if h.nnz else 1.0
            for v in self.blocks:
                hv = h.dot(v)
                leak = hv - v.dot(v.conj().T.dot(hv))
                worst = max(worst, float(np.abs(leak).max()) / scale if leak.size else 0.0)
        return worst

    def projector(self, k):
        v = self.blocks[k]
        return v.dot(v.conj().T)

    def projector_sum(self, k, max_denominator=2 ** 16, cutoff=1e-10):
        """
        Block projector ``k`` in Pauli form, coefficients rounded to
        rationals with bounded denominators.
        """
        coefficients = pauli_coefficients(self.projector(k))
        terms = []
        for index in np.flatnonzero(np.abs(coefficients) > cutoff):
            c = coefficients[index]
            terms.append((PauliString.from_index(self.n, int(index)),
                          complex_fraction(c, max_denominator)))
        return PauliSum(self.n, terms)

    def to_json(self):
        return {
            'n': self.n,
            'dims': self.dims,
            'seed': self.seed,
            'method': self.method,
            'generators_hash': generators_hash(self.generators) if self.generators else None,
        }

    def __repr__(self):
        return 'SubspaceDecomposition(n=%i, dims=%r)' % (self.n, self.dims)


def complex_fraction(value, max_denominator):
    return GaussianRational(Fraction(float(value.real)).limit_denominator(max_denominator),
                            Fraction(float(value.imag)).limit_denominator(max_denominator))


def pauli_coefficients(matrix):
    """
    Float Pauli coefficients ``tr(P^dagger M) / 2**n`` of a square matrix,
    indexed by ``x | z << n``.
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    dim = matrix.shape[0]
    n = dim.bit_length() - 1
    cols = np.arange(dim)

    shifted = np.empty((dim, dim), dtype=np.complex128)
    for x in range(dim):
        # shifted[x, b] = M[b ^ x, b]
        shifted[x] = matrix[cols ^ x, cols]
    transformed = walsh_hadamard(shifted)

    x = np.repeat(np.arange(dim), dim)
    z = np.tile(np.arange(dim), dim)
    phase = (1j) ** (-(popcount_array(x & z) % 4))
    values = transformed.ravel() * phase / dim

    result = np.zeros(dim * dim, dtype=np.complex128)
    result[x | (z << n)] = values
    return result


def _clusters(values, scale):
    " Split sorted eigenvalues at relative gaps above the tolerance. "
    tolerance = CLUSTER_TOLERANCE * max(scale, 1.0)
    groups = [[0]]
    for k in range(1, len(values)):
        if values[k] - values[k - 1] > tolerance:
            groups.append([k])
        else:
            groups[-1].append(k)
    return groups


def _split(v, element):
    """
    Split the block spanned by the columns of `v` along the eigenspaces of
    the compression of `element`.
    """
    compressed = v.conj().T.dot(element.dot(v))
    compressed = (compressed + compressed.conj().T) / 2
    values, vectors = scipy.linalg.eigh(compressed)
    groups = _clusters(values, float(np.abs(values).max()) if len(values) else 1.0)
    return [v.dot(vectors[:, g]) for g in groups]


def _dense_hermitian(op):
    m = op.toarray()
    return (m + m.conj().T) / 2


def _decompose_commutant(generators, n, rng, max_unknowns):
    basis = commutant(generators, n, max_unknowns=max_unknowns, rng=rng)
    dim = 1 << n
    if basis.dim == 1:
        return [np.eye(dim, dtype=np.complex128)]

    first = _dense_hermitian(basis.random_element(rng))
    pending = _split(np.eye(dim, dtype=np.complex128), first)
    blocks = []
    while pending:
        v = pending.pop()
        if v.shape[1] == 1:
            blocks.append(v)
            continue
        parts = _split(v, _dense_hermitian(basis.random_element(rng)))
        if len(parts) == 1:
            blocks.append(v)
        else:
            pending.extend(parts)
    return blocks


def _random_algebra_element(matrices, rng):
    " Random Hermitian combination of the generators and their brackets. "
    k = len(matrices)
    result = matrices[0] * rng.standard_normal()
    for m in matrices[1:]:
        result = result + m * rng.standard_normal()
    for a in range(k):
        for b in range(a + 1, k):
            bracket = matrices[a].dot(matrices[b]) - matrices[b].dot(matrices[a])
            result = result + bracket * (1j * rng.standard_normal())
    return result


def _linked_components(v, matrices, tolerance):
    " Split the columns of `v` into components linked by the generators. "
    m = v.shape[1]
    links = np.zeros((m, m), dtype=bool)
    for h in matrices:
        scale = max(float(abs(h).max()), 1e-300)
        links |= np.abs(v.conj().T.dot(h.dot(v))) > tolerance * scale
    count, labels = connected_components(sp.csr_matrix(links), directed=False)
    return [v[:, labels == c] for c in range(count)]


def _decompose_connectivity(generators, n, rng, tolerance=1e-8, passes=2):
    """
    A block is accepted once `passes` consecutive random elements leave it
    in one piece.
    """
    dim = 1 << n
    matrices = [to_dense(g).tosparse() for g in generators if not g.is_zero()]

    pending = [(np.eye(dim, dtype=np.complex128), 0)]
    blocks = []
    while pending:
        v, quiet = pending.pop()
        if v.shape[1] == 1 or quiet >= passes:
            blocks.append(v)
            continue
        element = _random_algebra_element(matrices, rng)
        compressed = v.conj().T.dot(element.dot(v))
        compressed = (compressed + compressed.conj().T) / 2
        _, vectors = scipy.linalg.eigh(compressed)
        parts = _linked_components(v.dot(vectors), matrices, tolerance)
        if len(parts) == 1:
            pending.append((v, quiet + 1))
        else:
            logger.debug('Connectivity split of a %i-dimensional block: %r.',
                         v.shape[1], [p.shape[1] for p in parts])
            pending.extend((p, 0) for p in parts)
    return blocks


def decompose(generators, n=None, seed=0, method='auto', max_unknowns=DEFAULT_MAX_UNKNOWNS):
    """
    Decompose ``C**(2**n)`` into invariant subspaces of `generators`.

    :param method: ``'commutant'``, ``'connectivity'`` or ``'auto'``
        (commutant when it fits in `max_unknowns`, connectivity otherwise).
    :param seed: Seed of the random elements; recorded in the result.
    """
    if method not in _METHODS:
        raise AlgebraError('Unknown decomposition method %r.' % (method, ))
    generators = list(generators)
    if n is None:
        n = generators[0].n
    rng = make_rng(seed)

    if method in ('auto', 'commutant'):
        try:
            blocks = _decompose_commutant(generators, n, rng, max_unknowns)
            method = 'commutant'
        except BudgetExceededError as e:
            if method == 'commutant':
                raise
            logger.info('Decomposition: %s Using generator connectivity.', e.message)
            method = 'connectivity'
    if method == 'connectivity':
        blocks = _decompose_connectivity(generators, n, rng)

    result = SubspaceDecomposition(n, blocks, generators, seed, method)
    logger.info('Decomposition (%s): dims %r.', method, result.dims)
    return result


def krylov_span(generators, vectors, tolerance=1e-9):
    """
    Orthonormal basis of the smallest subspace containing `vectors` (rows
    or a single vector) and invariant under every generator.
    """
    matrices = [to_dense(g).tosparse() for g in generators if not g.is_zero()]
    start = np.atleast_2d(np.asarray(vectors, dtype=np.complex128))

    basis = np.zeros((0, start.shape[1]), dtype=np.complex128)
    frontier = start
    while len(frontier):
        fresh = []
        for w in frontier:
            for _ in range(2):
                w = w - basis.conj().dot(w).dot(basis) if len(basis) else w
            norm = np.linalg.norm(w)
            if norm > tolerance:
                w = w / norm
                basis = np.vstack([basis, w[None, :]])
                fresh.append(w)
        frontier = [m.dot(w) for w in fresh for m in matrices]
    return basis.T


def reflection_blocks(N):
    """
    The four joint eigenspaces of the two pair reflections of the family
    with an ``N``-vertex chain: ``((s1, s2), dimension, formula)`` with
    dimension ``d(s1) * d(s2) * 2**N``, ``d(+1) = 3`` and ``d(-1) = 1``, and
    the projector written out as text.
    """
    if N < 1:
        raise AlgebraError('The chain needs at least one vertex, got N=%r.' % (N, ))

    def d(s):
        return 3 if s > 0 else 1

    def sign(s):
        return '+' if s > 0 else '-'

    result = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            formula = '1/4 (1 %s R1)(1 %s R2)' % (sign(s1), sign(s2))
            result.append(((s1, s2), d(s1) * d(s2) * 2 ** N, formula))
    return result


def extended_blocks_Q(N, seed=0, force=False, max_unknowns=DEFAULT_MAX_UNKNOWNS, **family):
    """
    Invariant blocks of the family graph with ``H_break`` added to the
    global-control set.

    :param family: `leaf` and `minimum` for :func:`build_result_two`.
    """
    bundle = build_result_two(N, force=force, **family)
    generators = build_generators(bundle.graph_Q, extra=[bundle.H_break])
    return decompose(generators, seed=seed, max_unknowns=max_unknowns)
