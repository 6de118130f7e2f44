"""
graph6 reading and writing.

Only the header-less single-line form is produced; the optional
``>>graph6<<`` header is accepted on input.
"""
from __future__ import unicode_literals

import networkx as nx
import six

from .graph import Graph

__all__ = (
    'Graph6Error',
    'MAX_GRAPH6_VERTICES',
    'parse_graph6',
    'emit_graph6',
    'read_graph6_file',
    'to_networkx',
)

HEADER = '>>graph6<<'

#: Largest vertex count accepted on input.
MAX_GRAPH6_VERTICES = 12


class Graph6Error(Exception):
    " Malformed graph6 input. "
    def __init__(self, message):
        super(Graph6Error, self).__init__(message)
        self.message = message


def _strip(text):
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def parse_graph6(text):
    """
    Decode one graph6 line into a :class:`Graph`.

    :raises Graph6Error: for invalid characters, a wrong length, padding bits
        that are not zero, or a vertex count outside ``1..MAX_GRAPH6_VERTICES``.
    """
    assert isinstance(text, six.string_types)
    s = _strip(text)

    if not s:
        raise Graph6Error('Empty graph6 string.')

    bad = [c for c in s if not 63 <= ord(c) <= 126]
    if bad:
        raise Graph6Error('Invalid graph6 character %r in %r.' % (bad[0], s))

    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_GRAPH6_VERTICES:
        raise Graph6Error('Vertex count out of supported range 1..%i: %r.' % (MAX_GRAPH6_VERTICES, s))

    expected = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != expected:
        raise Graph6Error('Expected %i data bytes for n=%i, got %i: %r.' % (
            expected, n, len(s) - 1, s))

    try:
        nx_graph = nx.from_graph6_bytes(s.encode('ascii'))
    except nx.NetworkXError as e:
        raise Graph6Error('Invalid graph6 string %r: %s' % (s, e))

    graph = Graph(n, nx_graph.edges())

    if emit_graph6(graph) != s:
        raise Graph6Error('Non-zero padding bits in %r.' % (s, ))
    return graph


def emit_graph6(graph):
    " Encode a :class:`Graph` as a header-less graph6 string. "
    assert isinstance(graph, Graph)
    data = nx.to_graph6_bytes(to_networkx(graph), header=False)
    return data.decode('ascii').strip()


def to_networkx(graph):
    " Copy into a networkx graph with nodes inserted in label order. "
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edge_list())
    return g


def read_graph6_file(path):
    """
    Yield ``(line_number, Graph)`` for each non-empty line of a graph6 file.
    """
    with open(path) as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line or line == HEADER:
                continue
            try:
                yield number, parse_graph6(line)
            except Graph6Error as e:
                raise Graph6Error('%s:%i: %s' % (path, number, e.message))
