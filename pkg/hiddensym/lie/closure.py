"""
Dynamical Lie algebras in Pauli coordinates.

An algebra element ``i*H`` (``H`` Hermitian, traceless) is stored as the
real coefficient vector of ``H`` over the ``4**n`` Pauli strings, indexed by
``x | z << n``. The bracket used is ``ad_G(H) = -i [G, H]``. For Pauli
strings with ``P_t P_j = i**k P_(t^j)`` that anticommute, ``k`` is odd and

    -i [P_t, P_j] = 2 * i**(k - 1) * P_(t^j),

which is ``+2`` for ``k = 1`` and ``-2`` for ``k = 3``.

The closure is grown breadth first: each new element is bracketed with the
generators only. Two engines are provided. The exact one runs Gram-Schmidt
over the rationals and keeps pairwise orthogonal primitive integer vectors,
so a candidate is rejected only when its projection residual is exactly
zero. The float one adds batches of candidates through blocked
re-orthogonalization and a pivoted QR. A dense-matrix implementation is
kept as an oracle.
"""
from __future__ import unicode_literals
import math

import numpy as np
import scipy.linalg

from ..algebra.dense import to_dense
from ..algebra.hamiltonians import generators_hash
from ..algebra.pauli import AlgebraError, PauliString, PauliSum
from ..log import logger
from ..utils import popcount_array

__all__ = (
    'AdjointAction',
    'DEFAULT_TOLERANCE',
    'LieClosure',
    'dense_closure_dim',
    'lie_closure',
)

#: Rank tolerance of the float engine.
DEFAULT_TOLERANCE = 1e-9

_METHODS = ('auto', 'exact', 'float')

# Largest qubit count for which 'auto' selects the exact engine.
_EXACT_AUTO_QUBITS = 3

_BATCH = 512


def _phase_exponents(xt, zt, xj, zj, mask):
    " Vectorized exponent k with ``P_t P_j = i**k P_(t^j)``, modulo 4. "
    y1 = xt & zt
    x1 = xt & ~zt & mask
    z1 = ~xt & zt & mask
    k = (popcount_array(y1 & zj) - popcount_array(y1 & xj) +
         popcount_array(x1 & zj & xj) - popcount_array(x1 & zj & ~xj) +
         popcount_array(z1 & xj & ~zj) - popcount_array(z1 & xj & zj))
    return k % 4


class AdjointAction(object):
    """
    The map ``H -> -i [G, H]`` on Pauli coefficient vectors, for one
    Hermitian generator ``G``.

    Each string ``P_t`` of ``G`` sends coordinate ``j`` to ``j ^ t`` with
    factor ``f_t[j]`` in ``{0, 2, -2}``.
    """
    def __init__(self, generator):
        assert isinstance(generator, PauliSum)
        if not generator.is_hermitian():
            raise AlgebraError('Lie closures are only computed for Hermitian generators.')

        n = generator.n
        self.n = n
        mask = (1 << n) - 1
        index = np.arange(4 ** n, dtype=np.int64)
        xj, zj = index & mask, index >> n

        scale = generator.common_denominator()
        self.integer_coefficients = []
        self.float_coefficients = []
        self.partners = []
        self.factors = []

        for string, coeff in generator.terms():
            if string.is_identity():
                continue
            xt, zt = string.x, string.z
            anticommute = (popcount_array(xt & zj) + popcount_array(zt & xj)) & 1
            k = _phase_exponents(xt, zt, xj, zj, mask)
            factor = np.where(anticommute == 1, np.where(k == 1, 2, -2), 0).astype(np.int64)

            self.integer_coefficients.append(int(coeff.re * scale))
            self.float_coefficients.append(float(coeff.re))
            self.partners.append(index ^ string.index)
            self.factors.append(factor)

    def apply(self, vectors, exact=False):
        """
        Apply to one vector or to the rows of a 2-d array. With `exact`, the
        generator is scaled to integer coefficients and `vectors` may be an
        object array of Python ints.
        """
        coefficients = self.integer_coefficients if exact else self.float_coefficients
        result = np.zeros_like(vectors)
        for c, partner, factor in zip(coefficients, self.partners, self.factors):
            result = result + c * (vectors * factor)[..., partner]
        return result


def _integer_vector(p):
    " Object array of integers proportional to the traceless part of `p`. "
    p = p.traceless_part()
    scale = p.common_denominator()
    v = np.zeros(4 ** p.n, dtype=object)
    for string, coeff in p.terms():
        v[string.index] = int(coeff.re * scale)
    return v


def _float_vector(p):
    v = np.zeros(4 ** p.n)
    for string, coeff in p.traceless_part().terms():
        v[string.index] = float(coeff.re)
    return v


def _primitive(v):
    g = 0
    for value in v[np.flatnonzero(v)]:
        g = math.gcd(g, int(value))
        if g == 1:
            break
    if g == 0:
        return None
    if g == 1:
        return v
    return v // g


class _OrthogonalBasis(object):
    """
    Pairwise orthogonal primitive integer vectors (object arrays) with the
    same rational span as every vector offered so far.
    """
    def __init__(self, size):
        self.size = size
        self.rows = np.zeros((0, size), dtype=object)
        self.norms = []

    def __len__(self):
        return len(self.norms)

    def add(self, vector):
        """
        Subtract the projection of `vector` onto the basis, in exact
        arithmetic. Keep and return the primitive residual, or return None
        when the residual is zero.
        """
        if len(self.norms):
            dots = self.rows.dot(vector)
            hit = [k for k in range(len(dots)) if dots[k]]
        else:
            hit = []

        if hit:
            # residual = vector - sum(dots[k] / norms[k] * rows[k]), times the lcm.
            scale = 1
            for k in hit:
                scale = scale // math.gcd(scale, self.norms[k]) * self.norms[k]
            residual = vector * scale
            for k in hit:
                residual = residual - (scale // self.norms[k] * dots[k]) * self.rows[k]
        else:
            residual = vector

        residual = _primitive(residual)
        if residual is None:
            return None
        self.rows = np.vstack([self.rows, residual[None, :]])
        self.norms.append(int(residual.dot(residual)))
        return residual


class LieClosure(object):
    """
    Dynamical Lie algebra generated by ``{i*H_k}``.

    :param vectors: Rows spanning the algebra: pairwise orthogonal primitive
        integer vectors (object dtype) for the exact engine, orthonormal float
        rows for the float engine.
    """
    def __init__(self, n, vectors, method, budget_hit, generators):
        self.n = n
        self.vectors = vectors
        self.method = method
        self.budget_hit = budget_hit
        self.generators = list(generators)
        self._orthonormal = None

    @property
    def dim(self):
        return len(self.vectors)

    @property
    def full_dim(self):
        return 4 ** self.n - 1

    @property
    def universal(self):
        return self.dim == self.full_dim

    @property
    def exact(self):
        return self.method == 'exact'

    def pauli_basis(self):
        """
        The basis as PauliSums ``H`` (the algebra elements are ``i*H``).
        Only the exact engine has an exact basis.
        """
        if not self.exact:
            raise AlgebraError('A float closure has no exact Pauli basis.')
        result = []
        for v in self.vectors:
            terms = [(PauliString.from_index(self.n, int(j)), int(v[j])) for j in np.flatnonzero(v)]
            result.append(PauliSum(self.n, terms))
        return result

    def orthonormal(self):
        " Float rows with orthonormal span equal to the algebra. "
        if self._orthonormal is None:
            if self.exact:
                q = np.zeros((self.dim, 4 ** self.n))
                for k, v in enumerate(self.vectors):
                    norm = math.sqrt(int(v.dot(v)))
                    q[k] = [float(value) / norm for value in v]
                self._orthonormal = q
            else:
                self._orthonormal = self.vectors
        return self._orthonormal

    def distance(self, vector):
        " Relative distance of a coefficient vector from the algebra. "
        q = self.orthonormal()
        norm = np.linalg.norm(vector)
        if norm == 0:
            return 0.0
        residual = vector - q.T.dot(q.dot(vector))
        return float(np.linalg.norm(residual) / norm)

    def contains(self, operator, tolerance=1e-8):
        """
        True when ``i*S0`` is in the algebra, ``S0`` the traceless Hermitian
        part of `operator` (PauliSum or DenseOperator).
        """
        if not isinstance(operator, PauliSum):
            operator = operator.to_pauli_sum()
        return self.distance(_float_vector(operator.hermitian_part())) <= tolerance

    def certificate(self, rng, samples=20, tolerance=1e-8):
        """
        Sampled closure check: brackets of random algebra elements with every
        generator stay inside the algebra. A span that contains the
        generators and is invariant under their brackets is the whole
        algebra. Returns the largest relative distance observed.
        """
        q = self.orthonormal()
        if not len(q):
            return 0.0
        actions = [AdjointAction(g) for g in self.generators if not g.traceless_part().is_zero()]
        worst = 0.0
        for _ in range(samples):
            v = rng.standard_normal(len(q)).dot(q)
            for a in actions:
                worst = max(worst, self.distance(a.apply(v)))
        return worst

    def to_json(self):
        return {
            'n': self.n,
            'dim': self.dim,
            'universal': self.universal,
            'budget_hit': self.budget_hit,
            'method': self.method,
            'generators_hash': generators_hash(self.generators) if self.generators else None,
        }

    def __repr__(self):
        return 'LieClosure(n=%i, dim=%i, method=%r, budget_hit=%r)' % (
            self.n, self.dim, self.method, self.budget_hit)


def _budget_hit(frontier, dim, max_dim, n):
    " True when the closure stopped at `max_dim` below ``4**n - 1`` with work left. "
    return max_dim < 4 ** n - 1 and dim >= max_dim and len(frontier) > 0


def _closure_exact(generators, n, max_dim):
    actions = [AdjointAction(g) for g in generators]
    basis = _OrthogonalBasis(4 ** n)

    def offer(v):
        if len(basis) >= max_dim:
            return None
        return basis.add(v)

    frontier = [w for w in (offer(_integer_vector(g)) for g in generators) if w is not None]

    level = 0
    while frontier and len(basis) < max_dim:
        level += 1
        new = []
        for f in frontier:
            for a in actions:
                w = offer(a.apply(f, exact=True))
                if w is not None:
                    new.append(w)
            if len(basis) >= max_dim:
                break
        logger.debug('Exact closure level %i: %i new, dim %i.', level, len(new), len(basis))
        frontier = new

    return list(basis.rows), _budget_hit(frontier, len(basis), max_dim, n)


def _closure_float(generators, n, max_dim, tolerance):
    actions = [AdjointAction(g) for g in generators]
    size = 4 ** n
    state = {'q': np.zeros((0, size))}

    def extend(candidates):
        q = state['q']
        norms = np.linalg.norm(candidates, axis=1)
        keep = norms > tolerance
        c = candidates[keep] / norms[keep, None]
        if not len(c) or len(q) >= max_dim:
            return c[:0]
        for _ in range(2):
            c = c - c.dot(q.T).dot(q)

        basis, r, _ = scipy.linalg.qr(c.T, mode='economic', pivoting=True)
        diagonal = np.abs(np.diag(r))
        rank = int(np.sum(diagonal > tolerance))
        rank = min(rank, max_dim - len(q))
        if rank == 0:
            return c[:0]

        new = basis[:, :rank].T
        new = new - new.dot(q.T).dot(q)
        new = new / np.linalg.norm(new, axis=1)[:, None]
        state['q'] = np.vstack([q, new])
        return new

    seeds = np.array([_float_vector(g) for g in generators]) if generators else np.zeros((0, size))
    frontier = extend(seeds)

    level = 0
    while len(frontier) and len(state['q']) < max_dim:
        level += 1
        new = []
        for start in range(0, len(frontier), _BATCH):
            batch = frontier[start:start + _BATCH]
            candidates = np.vstack([a.apply(batch) for a in actions])
            added = extend(candidates)
            if len(added):
                new.append(added)
        frontier = np.vstack(new) if new else np.zeros((0, size))
        logger.debug('Float closure level %i: %i new, dim %i.', level, len(frontier), len(state['q']))

    return state['q'], _budget_hit(frontier, len(state['q']), max_dim, n)


def lie_closure(generators, n=None, max_dim=None, method='auto', tolerance=DEFAULT_TOLERANCE):
    """
    Lie closure of ``{i*H : H in generators}`` projected to traceless
    operators.

    :param max_dim: Stop once the algebra reaches this dimension (default
        ``4**n - 1``). Reaching it below ``4**n - 1`` with work left sets
        `budget_hit`.
    :param method: ``'exact'``, ``'float'`` or ``'auto'`` (exact up to three
        qubits). A float result that claims universality at three qubits or
        fewer is confirmed by the exact engine.
    """
    if method not in _METHODS:
        raise AlgebraError('Unknown closure method %r.' % (method, ))
    generators = list(generators)
    if n is None:
        if not generators:
            raise AlgebraError('The qubit count is required for an empty generator set.')
        n = generators[0].n
    if any(g.n != n for g in generators):
        raise AlgebraError('Generators act on different qubit counts.')

    full = 4 ** n - 1
    max_dim = full if max_dim is None else min(max_dim, full)
    if method == 'auto':
        method = 'exact' if n <= _EXACT_AUTO_QUBITS else 'float'

    logger.info('Lie closure (%s): n=%i, %i generators, max_dim %i.', method, n, len(generators), max_dim)
    if method == 'exact':
        vectors, budget_hit = _closure_exact(generators, n, max_dim)
        result = LieClosure(n, vectors, 'exact', budget_hit, generators)
    else:
        vectors, budget_hit = _closure_float(generators, n, max_dim, tolerance)
        result = LieClosure(n, vectors, 'float', budget_hit, generators)

        if result.universal and n <= _EXACT_AUTO_QUBITS:
            logger.info('Confirming a float universality verdict with the exact engine.')
            vectors, budget_hit = _closure_exact(generators, n, max_dim)
            result = LieClosure(n, vectors, 'exact', budget_hit, generators)

    logger.info('Lie closure: dim %i of %i.', result.dim, full)
    return result


def dense_closure_dim(generators, n=None, tolerance=DEFAULT_TOLERANCE):
    """
    Closure dimension computed with explicit ``2**n`` matrices, as an
    oracle for :func:`lie_closure`. Only meant for ``n <= 4``.
    """
    generators = list(generators)
    n = n if n is not None else generators[0].n
    if n > 4:
        raise AlgebraError('The dense closure oracle is limited to 4 qubits.')
    dim = 1 << n

    def flatten(m):
        return np.concatenate([m.real.ravel(), m.imag.ravel()])

    basis = []
    matrices = []

    def offer(m):
        m = m - np.trace(m) / dim * np.eye(dim)
        v = flatten(m)
        for b in basis:
            v = v - b.dot(v) * b
        for b in basis:
            v = v - b.dot(v) * b
        norm = np.linalg.norm(v)
        scale = np.linalg.norm(flatten(m))
        if scale == 0 or norm <= tolerance * max(scale, 1.0):
            return False
        basis.append(v / norm)
        matrices.append(m)
        return True

    generator_matrices = [1j * to_dense(g).toarray() for g in generators]
    frontier = [m for m in generator_matrices if offer(m)]
    while frontier:
        new = []
        for f in frontier:
            for g in generator_matrices:
                c = g.dot(f) - f.dot(g)
                if offer(c):
                    new.append(matrices[-1])
        frontier = new
    return len(basis)
