"""
The two-pair family: a chain of ``N`` vertices with a pendant pair at
each end, and a symmetry-breaking Hamiltonian that still leaves a linear
combination of the pair reflections in the commutant.

Layout for ``n = N + 4`` vertices: the chain is the path ``0 .. N-2`` with
one extra leaf ``N-1`` on path vertex ``leaf - 1`` (counted from 1). Pair
``a, b = N, N+1`` hangs on vertex 0 and pair ``c, d = N+2, N+3`` on the
last path vertex. ``R1 = SWAP_ab`` and ``R2 = SWAP_cd``.
"""
from __future__ import unicode_literals
from fractions import Fraction

from ..algebra.dense import MAX_DENSE_QUBITS
from ..algebra.hamiltonians import build_generators, swap_operator
from ..algebra.pauli import PauliSum
from ..enums import Verdict
from ..graphs.automorphisms import automorphism_group
from ..graphs.graph import Graph, Permutation
from ..graphs.graph6 import emit_graph6
from ..log import logger
from ..lie.universality import is_universal
from ..symmetry.report import breaks_all_automorphisms
from .verification import ConstructionError, VerificationReport

__all__ = (
    'ResultTwoBundle',
    'build_result_two',
    'family_graph',
    'reflection_projector',
    'verify_result_two',
)

#: Smallest chain length with exactly four automorphisms.
MINIMUM_N = 7

#: Default position (1-based) of the extra chain leaf.
DEFAULT_LEAF = 3


def family_graph(N, leaf=DEFAULT_LEAF):
    """
    The family graph on ``N + 4`` vertices.

    :returns: ``(graph, (a, b, c, d))``.
    """
    if N < 1:
        raise ConstructionError('The chain needs at least one vertex, got N=%r.' % (N, ))

    edges = [(k, k + 1) for k in range(N - 2)]
    last = max(N - 2, 0)
    if N >= 2:
        edges.append((min(leaf - 1, last), N - 1))

    a, b, c, d = N, N + 1, N + 2, N + 3
    edges.extend([(0, a), (0, b), (last, c), (last, d)])
    return Graph(N + 4, edges), (a, b, c, d)


class ResultTwoBundle(object):
    def __init__(self, N, graph_Q, pendants):
        self.N = N
        self.graph_Q = graph_Q
        self.pendants = pendants
        n = graph_Q.n
        a, b, c, d = pendants

        self.R1 = swap_operator(a, b, n)
        self.R2 = swap_operator(c, d, n)
        self.H1 = (1 + self.R2).dot(PauliSum.single(n, 'X', a) - PauliSum.single(n, 'X', b))
        self.H2 = (1 + self.R1).dot(PauliSum.single(n, 'X', c) - PauliSum.single(n, 'X', d))
        self.H_break = self.H1 + self.H2

    @property
    def n(self):
        return self.graph_Q.n

    def reflections(self):
        " The vertex permutations of ``R1`` and ``R2``. "
        a, b, c, d = self.pendants
        return (Permutation.transposition(self.n, a, b),
                Permutation.transposition(self.n, c, d))

    def generators(self, include_break=True):
        return build_generators(self.graph_Q, extra=[self.H_break] if include_break else [])

    def __repr__(self):
        return 'ResultTwoBundle(N=%i, n=%i)' % (self.N, self.n)


def build_result_two(N, force=False, leaf=DEFAULT_LEAF, minimum=MINIMUM_N):
    """
    Assemble the family member with an ``N``-vertex chain.

    :param force: Allow ``N < minimum``. The automorphism group is then only
        logged, not checked.
    :raises ConstructionError: for ``N < minimum`` without `force`, or when
        the automorphism group is not the four reflections.
    """
    if N < minimum and not force:
        raise ConstructionError(
            'The chain must have at least %i vertices for the four-element automorphism group, '
            'got N=%i. Use force to build it anyway.' % (minimum, N))

    graph, pendants = family_graph(N, leaf)
    bundle = ResultTwoBundle(N, graph, pendants)

    group = automorphism_group(graph)
    expected = set([Permutation.identity(graph.n)])
    r1, r2 = bundle.reflections()
    expected.update([r1, r2, r1 * r2])
    if N >= minimum:
        if group.order != 4 or set(group.elements()) != expected:
            raise ConstructionError('Family graph at N=%i has %i automorphisms, expected the four '
                                    'reflections.' % (N, group.order))
    else:
        logger.info('Family graph at N=%i (below the minimum): |Aut| = %i.', N, group.order)
    return bundle


def reflection_projector(bundle, s1, s2):
    " ``(1 + s1 R1)(1 + s2 R2) / 4`` for signs ``s1, s2`` in ``{1, -1}``. "
    assert s1 in (1, -1) and s2 in (1, -1)
    return (1 + bundle.R1 * s1).dot(1 + bundle.R2 * s2) * Fraction(1, 4)


def verify_result_two(bundle, universality=None, rng=None):
    """
    Exact checks of the two-pair construction, string by string in the
    Pauli algebra.

    :param universality: Also compute the automorphism-span intersection
        and the universality verdict with ``H_break`` added (dense operators
        on ``2**n`` states). Defaults to doing so when ``n`` has a matrix
        realization.
    """
    assert isinstance(bundle, ResultTwoBundle)
    if universality is None:
        universality = bundle.n <= MAX_DENSE_QUBITS
        if not universality:
            logger.info('Two-pair family at n=%i: Pauli-level checks only.', bundle.n)
    R1, R2, H1, H2, Hb = bundle.R1, bundle.R2, bundle.H1, bundle.H2, bundle.H_break
    R12 = R1.dot(R2)
    report = VerificationReport('two-pair family')
    report.fact('N', bundle.N)
    report.fact('n', bundle.n)
    report.fact('graph6', emit_graph6(bundle.graph_Q))
    report.fact('aut_order', automorphism_group(bundle.graph_Q).order)

    report.check('[R1, H_break] == 2 R1 H1', R1.commutator(Hb) == R1.dot(H1) * 2)
    report.check('[R2, H_break] == 2 R2 H2', R2.commutator(Hb) == R2.dot(H2) * 2)
    report.check('[R1 R2, H_break] == 2 R1 R2 H_break', R12.commutator(Hb) == R12.dot(Hb) * 2)

    combination = R1 + R2 - R12
    report.check('[R1 + R2 - R1 R2, H_break] == 0', combination.commutator(Hb).is_zero())

    report.check('{R1, H1} == 0', R1.anticommutator(H1).is_zero())
    report.check('[R2, H1] == 0', R2.commutator(H1).is_zero())
    report.check('{R2, H2} == 0', R2.anticommutator(H2).is_zero())
    report.check('[R1, H2] == 0', R1.commutator(H2).is_zero())
    report.check('R2 H1 == H1', R2.dot(H1) == H1)
    report.check('R1 H2 == H2', R1.dot(H2) == H2)

    r1h1, r2h2 = R1.dot(H1), R2.dot(H2)
    report.check('R1 H1, R2 H2 independent',
                 not r1h1.is_zero() and not r2h2.is_zero() and not r1h1.is_multiple_of(r2h2))

    report.check('H_break breaks every automorphism', breaks_all_automorphisms(bundle.graph_Q, Hb))

    generators = bundle.generators()
    report.check('R1 + R2 - R1 R2 in the extended commutant',
                 all(combination.commutator(h).is_zero() for h in generators))
    report.check('R1 + R2 - R1 R2 is not scalar', not combination.traceless_part().is_zero())

    projector = reflection_projector(bundle, -1, -1)
    report.check('(1 - R1)(1 - R2)/4 idempotent', projector.dot(projector) == projector)
    report.check('(1 - R1)(1 - R2)/4 in the extended commutant',
                 all(projector.commutator(h).is_zero() for h in generators))

    if universality:
        result = is_universal(bundle.graph_Q, extra=[Hb], rng=rng)
        report.fact('aut_span_with_break', result.aut_span_dim)
        report.fact('universality', result.to_json())
        report.check('verdict not_universal', result.verdict == Verdict.NOT_UNIVERSAL)
    return report
