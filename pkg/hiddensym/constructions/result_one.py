"""
The seven-vertex asymmetric graph whose control set still has a symmetry
built from three pair exchanges.

With ``Pi_ij = 2 SWAP_ij - 1`` (+1 on the pair triplet, -3 on the
singlet), the operator

    S = (1 - Pi_a)(1 - Pi_b)(1 - Pi_c) - 1

is 64 times the projector onto "all three pairs in the singlet" minus the
identity. The form printed without the ``Pi_b Pi_c`` term is kept as
`S_literal`; it does not commute with ``H_ZZ``.
"""
from __future__ import unicode_literals
from fractions import Fraction
import itertools

import six

from ..algebra.hamiltonians import build_generators, pi_operator
from ..algebra.pauli import PauliSum
from ..graphs.automorphisms import automorphism_group
from ..graphs.graph import Graph, is_connected
from ..graphs.graph6 import emit_graph6, parse_graph6
from ..log import logger
from .verification import ConstructionError, VerificationReport

__all__ = (
    'ResultOneBundle',
    'build_result_one',
    'locate_result_one_graph',
    'pair_symmetry',
    'singlet_projector',
    'verify_result_one',
)

#: Name of the catalog entry used when no graph is given.
CATALOG_NAME = 'H'

_GENERATOR_NAMES = ('H_X', 'H_ZZ', 'H_Z')


def singlet_projector(pairs, n):
    " Projector onto the state where every pair in `pairs` is a singlet. "
    result = PauliSum.identity(n)
    for i, j in pairs:
        result = result.dot((1 - pi_operator(i, j, n)) * Fraction(1, 4))
    return result


def pair_symmetry(pairs, n, literal=False):
    """
    The three-pair symmetry. `pairs` must hold exactly three disjoint pairs;
    the first one is the distinguished pair of the literal form.
    """
    if len(pairs) != 3:
        raise ConstructionError('Expected three pairs, got %r.' % (list(pairs), ))
    if len(set(v for p in pairs for v in p)) != 6:
        raise ConstructionError('Pairs %r are not disjoint.' % (list(pairs), ))

    a, b, c = [pi_operator(i, j, n) for i, j in pairs]
    if literal:
        return -(a + b + c) + a.dot(b + c) - a.dot(b).dot(c)
    return (1 - a).dot(1 - b).dot(1 - c) - 1


class ResultOneBundle(object):
    """
    :param pair_list: The three pairs in the external (1-based) labels.
    """
    def __init__(self, graph_H, pairs, pair_list, name=CATALOG_NAME):
        self.graph_H = graph_H
        self.pairs = tuple(pairs)
        self.pair_list = tuple(pair_list)
        self.name = name
        self.S = pair_symmetry(pairs, graph_H.n)
        self.S_literal = pair_symmetry(pairs, graph_H.n, literal=True)
        self.generators = build_generators(graph_H)

    def commutators(self, literal=False):
        " ``[S, H]`` for each generator, keyed by generator name. "
        s = self.S_literal if literal else self.S
        return dict((name, s.commutator(h)) for name, h in zip(_GENERATOR_NAMES, self.generators))

    def __repr__(self):
        return 'ResultOneBundle(%s, pairs=%r)' % (emit_graph6(self.graph_H), self.pair_list)


def _validate(graph):
    if graph.n != 7:
        raise ConstructionError('The three-pair graph has 7 vertices, got %i.' % graph.n)
    if not is_connected(graph):
        raise ConstructionError('The three-pair graph must be connected.')
    order = automorphism_group(graph).order
    if order != 1:
        raise ConstructionError('The three-pair graph must be asymmetric, |Aut| = %i.' % order)


def build_result_one(graph=None, pairs=None, catalog=None):
    """
    Bundle for the seven-vertex graph.

    :param graph: :class:`Graph`; defaults to the catalog entry ``H``.
    :param pairs: Three 0-based vertex pairs; default from the catalog.
    :raises ConstructionError: when the graph is not a connected asymmetric
        graph on seven vertices.
    """
    if graph is None or pairs is None:
        if catalog is None:
            from .catalog import default_catalog
            catalog = default_catalog()
        entry = catalog.get_graph(CATALOG_NAME)
        graph = entry.graph if graph is None else graph
        pairs = entry.pairs if pairs is None else pairs
        external = entry.external_pairs()
    else:
        external = [(i + 1, j + 1) for i, j in pairs]

    assert isinstance(graph, Graph)
    _validate(graph)
    return ResultOneBundle(graph, pairs, external)


def verify_result_one(bundle):
    " Exact checks of the three-pair symmetry. "
    assert isinstance(bundle, ResultOneBundle)
    report = VerificationReport('three-pair graph')
    report.fact('graph6', emit_graph6(bundle.graph_H))
    report.fact('pairs', [list(p) for p in bundle.pair_list])

    report.check('aut_trivial', automorphism_group(bundle.graph_H).is_trivial())
    report.check('S_hermitian', bundle.S.is_hermitian())
    report.check('S_not_scalar', not bundle.S.traceless_part().is_zero())
    for name, c in sorted(bundle.commutators().items()):
        report.check('[S, %s] == 0' % name, c.is_zero())

    projector = singlet_projector(bundle.pairs, bundle.graph_H.n)
    report.check('S == 64 P_singlet - 1', bundle.S == projector * 64 - 1)

    literal = bundle.commutators(literal=True)
    report.fact('literal_form_commutes', sorted(k for k, v in literal.items() if v.is_zero()))
    return report


def _assignments(n):
    " Three disjoint pairs, first pair distinguished, the others unordered. "
    for first in itertools.combinations(range(n), 2):
        rest = [v for v in range(n) if v not in first]
        for second in itertools.combinations(rest, 2):
            remaining = [v for v in rest if v not in second]
            for third in itertools.combinations(remaining, 2):
                if second < third:
                    yield (first, second, third)


def locate_result_one_graph(graphs, literal=False):
    """
    Search pair assignments under which the three-pair symmetry commutes
    with every generator.

    :param graphs: Iterable of :class:`Graph` or graph6 strings.
    :param literal: Search with the literal form instead.
    :returns: List of ``(graph6, pairs)`` with 0-based pairs.
    """
    matches = []
    examined = 0
    for g in graphs:
        if isinstance(g, six.string_types):
            g = parse_graph6(g)
        examined += 1
        generators = build_generators(g)

        for pairs in _assignments(g.n):
            s = pair_symmetry(pairs, g.n, literal=literal)
            if all(s.commutator(h).is_zero() for h in generators):
                matches.append((emit_graph6(g), pairs))

    if not matches:
        logger.warning('No pair assignment validates the three-pair symmetry on %i graph(s); '
                       'check the edge list.', examined)
    else:
        logger.info('Three-pair symmetry: %i match(es) over %i graph(s).', len(matches), examined)
    return matches
