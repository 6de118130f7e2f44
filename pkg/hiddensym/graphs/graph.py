"""
Labeled simple graphs and vertex permutations.
"""
from __future__ import unicode_literals
from collections import deque

import numpy as np
import six

__all__ = (
    'Graph',
    'GraphError',
    'Permutation',
    'MAX_VERTICES',
    'is_connected',
)

#: Largest vertex count handled by the graph layer. Matrix realizations stop
#: earlier, at 12 qubits; larger graphs only take part in Pauli-level checks.
MAX_VERTICES = 16


class GraphError(Exception):
    " Raised for invalid graph or permutation data. "
    def __init__(self, message):
        super(GraphError, self).__init__(message)
        self.message = message


class Graph(object):
    """
    Simple undirected graph on the vertices ``0..n-1``.

    :param n: Vertex count.
    :param edges: Iterable of vertex pairs.
    """
    __slots__ = ('n', 'edges', '_adjacency', '_hash')

    def __init__(self, n, edges=()):
        assert isinstance(n, six.integer_types)

        if not 1 <= n <= MAX_VERTICES:
            raise GraphError('Vertex count %r out of range 1..%i.' % (n, MAX_VERTICES))

        normalized = set()
        for e in edges:
            i, j = e
            if i == j:
                raise GraphError('Self-loop on vertex %r.' % (i, ))
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError('Edge %r has an endpoint outside 0..%i.' % ((i, j), n - 1))
            pair = (min(i, j), max(i, j))
            if pair in normalized:
                raise GraphError('Duplicate edge %r.' % (pair, ))
            normalized.add(pair)

        adjacency = [0] * n
        for i, j in normalized:
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i

        self.n = n
        self.edges = frozenset(normalized)
        self._adjacency = tuple(adjacency)
        self._hash = None

    @classmethod
    def from_adjacency_bits(cls, n, adjacency):
        " Build a graph from per-vertex neighbour bitmasks. "
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if (adjacency[i] >> j) & 1]
        return cls(n, edges)

    @property
    def adjacency_bits(self):
        " Tuple of neighbour bitmasks, one integer per vertex. "
        return self._adjacency

    def edge_list(self):
        " Edges as a sorted list of ``(i, j)`` with ``i < j``. "
        return sorted(self.edges)

    def has_edge(self, i, j):
        return bool((self._adjacency[i] >> j) & 1)

    def neighbors(self, v):
        bits = self._adjacency[v]
        return [u for u in range(self.n) if (bits >> u) & 1]

    def degree(self, v):
        return bin(self._adjacency[v]).count('1')

    def adjacency_matrix(self):
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            m[i, j] = m[j, i] = 1
        return m

    def relabel(self, permutation):
        """
        Image of this graph under `permutation`: vertex ``v`` becomes
        ``permutation(v)``.
        """
        assert isinstance(permutation, Permutation)
        if permutation.n != self.n:
            raise GraphError('Permutation acts on %i symbols, graph has %i vertices.' % (
                permutation.n, self.n))
        return Graph(self.n, [(permutation(i), permutation(j)) for i, j in self.edges])

    def is_automorphism(self, permutation):
        return all(self.has_edge(permutation(i), permutation(j)) for i, j in self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._adjacency))
        return self._hash

    def __repr__(self):
        return 'Graph(%i, %r)' % (self.n, self.edge_list())


def is_connected(graph):
    " True when a breadth-first search from vertex 0 reaches every vertex. "
    assert isinstance(graph, Graph)

    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        new = graph.adjacency_bits[v] & ~seen
        seen |= new
        u = 0
        while new:
            if new & 1:
                queue.append(u)
            new >>= 1
            u += 1
    return seen == (1 << graph.n) - 1


class Permutation(object):
    """
    Bijection on ``0..n-1``, stored as its image tuple. Composition follows
    function composition: ``(s * t)(i) == s(t(i))``.
    """
    __slots__ = ('image', )

    def __init__(self, image):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise GraphError('Not a permutation: %r.' % (image, ))
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, i, j):
        image = list(range(n))
        image[i], image[j] = j, i
        return cls(image)

    @property
    def n(self):
        return len(self.image)

    def __call__(self, i):
        return self.image[i]

    def __mul__(self, other):
        assert isinstance(other, Permutation) and other.n == self.n
        return Permutation([self.image[i] for i in other.image])

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.image))

    def cycle_count(self):
        " Number of cycles, fixed points included. "
        seen = [False] * self.n
        count = 0
        for start in range(self.n):
            if not seen[start]:
                count += 1
                i = start
                while not seen[i]:
                    seen[i] = True
                    i = self.image[i]
        return count

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.image)

    def __lt__(self, other):
        return self.image < other.image

    def __repr__(self):
        return 'Permutation(%r)' % (list(self.image), )
