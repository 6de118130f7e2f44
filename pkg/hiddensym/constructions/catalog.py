"""
Named graphs and graph families.

The catalog is filled by the ``define-graph`` and ``define-family`` config
commands (see :mod:`hiddensym.rc`). Edge lists that were transcribed from
drawings keep their original vertex labels; `labels` maps every external
label onto the internal 0-based vertex.
"""
from __future__ import unicode_literals

from ..graphs.graph import Graph, GraphError

__all__ = (
    'Catalog',
    'ConfigError',
    'NamedFamily',
    'NamedGraph',
    'default_catalog',
    'parse_edge',
)


class ConfigError(Exception):
    " Raised for invalid catalog definitions or unknown names. "
    def __init__(self, message):
        super(ConfigError, self).__init__(message)
        self.message = message


def parse_edge(text, base=1):
    """
    Parse ``"3-7"`` into a 0-based vertex pair.

    :param base: Label of the first vertex in the text (1 for drawings).
    """
    try:
        i, j = text.split('-')
        return int(i) - base, int(j) - base
    except ValueError:
        raise ConfigError('Invalid edge %r, expected "i-j".' % (text, ))


class NamedGraph(object):
    """
    A catalog graph.

    :param pairs: 0-based vertex pairs that the construction of this graph
        refers to (empty for plain graphs).
    :param base: Label of vertex 0 in the external numbering.
    """
    def __init__(self, name, graph, pairs=(), base=1, note=''):
        assert isinstance(graph, Graph)
        self.name = name
        self.graph = graph
        self.pairs = tuple(tuple(p) for p in pairs)
        self.base = base
        self.note = note

    @property
    def labels(self):
        " Mapping of external labels to internal vertices. "
        return dict((v + self.base, v) for v in range(self.graph.n))

    def external_pairs(self):
        return [(i + self.base, j + self.base) for i, j in self.pairs]

    def __repr__(self):
        return 'NamedGraph(%r, n=%i)' % (self.name, self.graph.n)


class NamedFamily(object):
    """
    Parameters of the two-pair family: the position of the distinguishing
    leaf on the chain (1-based) and the smallest chain length for which the
    automorphism group is the four reflections.
    """
    def __init__(self, name, leaf=3, minimum=7, note=''):
        if leaf < 1:
            raise ConfigError('Leaf position must be at least 1, got %r.' % (leaf, ))
        self.name = name
        self.leaf = leaf
        self.minimum = minimum
        self.note = note

    def __repr__(self):
        return 'NamedFamily(%r, leaf=%i, minimum=%i)' % (self.name, self.leaf, self.minimum)


class Catalog(object):
    def __init__(self):
        self.graphs = {}
        self.families = {}

    def define_graph(self, name, n, edges, pairs=(), base=1, note=''):
        """
        Add a graph. `edges` and `pairs` are in the external numbering.
        """
        try:
            graph = Graph(n, [(i - base, j - base) for i, j in edges])
        except GraphError as e:
            raise ConfigError('Graph %r: %s' % (name, e.message))

        internal_pairs = []
        for i, j in pairs:
            i, j = i - base, j - base
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ConfigError('Graph %r: invalid pair %r.' % (name, (i + base, j + base)))
            internal_pairs.append((i, j))

        self.graphs[name] = NamedGraph(name, graph, internal_pairs, base, note)
        return self.graphs[name]

    def define_family(self, name, leaf=3, minimum=7, note=''):
        self.families[name] = NamedFamily(name, leaf, minimum, note)
        return self.families[name]

    def get_graph(self, name):
        try:
            return self.graphs[name]
        except KeyError:
            raise ConfigError('Unknown graph %r. Known: %s.' % (name, ', '.join(sorted(self.graphs))))

    def get_family(self, name):
        try:
            return self.families[name]
        except KeyError:
            raise ConfigError('Unknown family %r. Known: %s.' % (name, ', '.join(sorted(self.families))))

    def __contains__(self, name):
        return name in self.graphs or name in self.families


def default_catalog():
    " Catalog of a fresh session: the built-in definitions only. "
    from ..main import Session
    return Session(source_file=None).catalog
