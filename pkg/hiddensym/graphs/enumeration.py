"""
Generation of graphs up to isomorphism.

Graphs on ``k + 1`` vertices are grown from the canonical graphs on ``k``
vertices by adding one vertex joined to a subset of the old ones. A child
is kept only when the added vertex lies in the automorphism orbit of the
child's canonically last vertex, so every class is produced from exactly
one parent class. Duplicates from the same parent are removed by
canonical form.
"""
from __future__ import unicode_literals
import itertools

from .automorphisms import automorphism_group, canonical_form, canonical_labeling
from .graph import Graph, GraphError, is_connected
from .graph6 import emit_graph6
from ..log import logger

__all__ = (
    'enumerate_graphs',
    'enumerate_connected',
    'enumerate_connected_brute_force',
    'sample_connected',
    'sample_classes',
)


def _children(parent):
    """
    Canonical children of `parent` accepted by the canonical deletion test.
    """
    k = parent.n
    base = parent.edge_list()
    produced = set()

    for subset in range(1 << k):
        child = Graph(k + 1, base + [(v, k) for v in range(k) if (subset >> v) & 1])
        canonical, labeling = canonical_labeling(child)

        last = labeling.inverse()(k)
        if last != k:
            orbit = None
            for o in automorphism_group(child).orbits():
                if k in o:
                    orbit = o
                    break
            if last not in orbit:
                continue

        if canonical not in produced:
            produced.add(canonical)
            yield canonical


def enumerate_graphs(n):
    """
    Yield one canonical representative of every isomorphism class of simple
    graphs on `n` vertices, connected or not.
    """
    if not 1 <= n <= 10:
        raise GraphError('Graph generation supports 1 <= n <= 10, got %r.' % (n, ))

    level = [Graph(1)]
    for k in range(1, n):
        next_level = []
        for parent in level:
            next_level.extend(_children(parent))
        logger.debug('Generated %i graphs on %i vertices.', len(next_level), k + 1)
        level = next_level

    for g in level:
        yield g


def enumerate_connected(n):
    " Yield each isomorphism class of connected graphs on `n` vertices once. "
    for g in enumerate_graphs(n):
        if is_connected(g):
            yield g


def enumerate_connected_brute_force(n):
    """
    All connected classes on `n` vertices by canonical deduplication of every
    labeled graph. Exponential in ``n*(n-1)/2``; meant as an oracle for
    small `n`.
    """
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    result = []
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
        if not is_connected(g):
            continue
        c = canonical_form(g)
        if c not in seen:
            seen.add(c)
            result.append(c)
    return sorted(result, key=emit_graph6)


def sample_connected(n, count, rng, asymmetric=True):
    """
    Draw `count` labeled random graphs G(n, 1/2), rejecting disconnected
    ones (and, when `asymmetric`, those with a non-trivial automorphism).

    :param rng: numpy random generator.
    """
    pairs = list(itertools.combinations(range(n), 2))
    result = []
    while len(result) < count:
        keep = rng.integers(0, 2, size=len(pairs))
        g = Graph(n, [p for p, k in zip(pairs, keep) if k])
        if not is_connected(g):
            continue
        if asymmetric and not automorphism_group(g).is_trivial():
            continue
        result.append(g)
    return result


def sample_classes(n, count, rng, asymmetric=True):
    """
    Draw `count` isomorphism classes uniformly (with replacement) among the
    connected classes on `n` vertices.
    """
    classes = [g for g in enumerate_connected(n)
               if not asymmetric or automorphism_group(g).is_trivial()]
    if not classes:
        return []
    picks = rng.integers(0, len(classes), size=count)
    return [classes[i] for i in picks]
