"""
Automorphism groups and canonical forms.

Both come out of a single individualization/refinement search tree:

- cells of an ordered partition are refined until equitable;
- the first non-singleton cell is individualized vertex by vertex;
- every discrete leaf gives a relabeling of the graph, whose upper-triangle
  adjacency bits (graph6 order) form its certificate;
- two leaves with equal certificates differ by an automorphism, and the
  automorphisms found so far prune children lying in one orbit of the
  pointwise stabilizer of the current prefix.

The canonical form is the relabeling by the leaf with the smallest
certificate. The group order is the product of first-path orbit sizes.
"""
from __future__ import unicode_literals

from functools import lru_cache

from .graph import Graph, GraphError, Permutation

__all__ = (
    'AutomorphismGroup',
    'automorphism_group',
    'canonical_form',
    'canonical_labeling',
    'refine',
)


def refine(graph, cells):
    """
    Coarsest equitable refinement of the ordered partition `cells`.

    A cell is split by the number of neighbours its vertices have inside a
    splitter cell; fragments are ordered by that count. Every choice only
    depends on cell positions and counts, so the result is equivariant under
    relabeling.
    """
    adjacency = graph.adjacency_bits
    cells = [list(c) for c in cells]

    changed = True
    while changed:
        changed = False
        for splitter in cells:
            mask = 0
            for v in splitter:
                mask |= 1 << v

            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(bin(adjacency[v] & mask).count('1'), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for count in sorted(groups):
                        new_cells.append(groups[count])

            if changed:
                cells = new_cells
                break
    return cells


def _individualize(cells, v):
    result = []
    for cell in cells:
        if v in cell:
            result.append([v])
            result.append([u for u in cell if u != v])
        else:
            result.append(cell)
    return result


def _certificate(graph, order):
    adjacency = graph.adjacency_bits
    cert = 0
    for j in range(1, len(order)):
        bits = adjacency[order[j]]
        for i in range(j):
            cert = (cert << 1) | ((bits >> order[i]) & 1)
    return cert


class _Search(object):
    " One run of the search tree over `graph`. "
    def __init__(self, graph):
        self.graph = graph
        self.generators = []
        self.orbit_sizes = []

        self.first_order = None
        self.first_prefix = None
        self.first_cert = None
        self.best_order = None
        self.best_cert = None

    def run(self):
        cells = refine(self.graph, [list(range(self.graph.n))])
        self._visit(cells, [], True)
        return self

    def _stabilizer_orbit(self, start, prefix):
        gens = [g for g in self.generators if all(g(u) == u for u in prefix)]
        orbit = set(start)
        todo = list(start)
        while todo:
            w = todo.pop()
            for g in gens:
                x = g(w)
                if x not in orbit:
                    orbit.add(x)
                    todo.append(x)
        return orbit

    def _visit(self, cells, prefix, on_first_path):
        """
        Explore the subtree below `cells`. Returns the level to jump back
        to, or None.
        """
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break

        if target is None:
            return self._leaf([c[0] for c in cells], prefix)

        level = len(prefix)
        explored = []

        for v in sorted(target):
            if explored and v in self._stabilizer_orbit(explored, prefix):
                continue

            child = refine(self.graph, _individualize(cells, v))
            jump = self._visit(child, prefix + [v], on_first_path and not explored)
            explored.append(v)

            if jump is not None and jump < level:
                return jump

        if on_first_path:
            self.orbit_sizes.append(len(self._stabilizer_orbit(explored[:1], prefix)))
        return None

    def _add_generator(self, order, reference):
        image = [0] * self.graph.n
        for a, b in zip(reference, order):
            image[a] = b
        g = Permutation(image)
        assert self.graph.is_automorphism(g)
        if not g.is_identity():
            self.generators.append(g)
        return g

    def _leaf(self, order, prefix):
        cert = _certificate(self.graph, order)

        if self.first_order is None:
            self.first_order = self.best_order = order
            self.first_prefix = prefix
            self.first_cert = self.best_cert = cert
            return None

        if cert == self.first_cert:
            g = self._add_generator(order, self.first_order)

            # Only jump back when the automorphism maps the first path onto
            # this one; then the whole sibling subtree is an image.
            if len(prefix) == len(self.first_prefix) and all(
                    g(a) == b for a, b in zip(self.first_prefix, prefix)):
                common = 0
                for a, b in zip(prefix, self.first_prefix):
                    if a != b:
                        break
                    common += 1
                return common
            return None

        if cert == self.best_cert:
            self._add_generator(order, self.best_order)
        elif cert < self.best_cert:
            self.best_order = order
            self.best_cert = cert
        return None

    @property
    def order(self):
        result = 1
        for size in self.orbit_sizes:
            result *= size
        return result

    @property
    def labeling(self):
        " Permutation sending each vertex to its canonical position. "
        image = [0] * self.graph.n
        for position, v in enumerate(self.best_order):
            image[v] = position
        return Permutation(image)


@lru_cache(maxsize=4096)
def _search(graph):
    return _Search(graph).run()


class AutomorphismGroup(object):
    """
    Automorphism group of a graph, described by generators and its order.
    `elements` lists the whole group on demand.
    """
    def __init__(self, graph, generators, order):
        assert isinstance(graph, Graph)
        self.graph = graph
        self.generators = list(generators)
        self.order = order
        self._elements = None

    def is_trivial(self):
        return self.order == 1

    def elements(self, limit=40320):
        """
        All group elements, identity first, the rest sorted.

        :param limit: Refuse to list groups larger than this.
        """
        if self._elements is None:
            if self.order > limit:
                raise GraphError('Automorphism group of order %i is too large to list.' % self.order)

            identity = Permutation.identity(self.graph.n)
            seen = set([identity])
            todo = [identity]
            while todo:
                g = todo.pop()
                for s in self.generators:
                    h = s * g
                    if h not in seen:
                        seen.add(h)
                        todo.append(h)

            assert len(seen) == self.order, 'Group closure does not match search order.'
            seen.discard(identity)
            self._elements = [identity] + sorted(seen)
        return list(self._elements)

    def orbits(self):
        " Vertex orbits, as sorted lists. "
        parent = list(range(self.graph.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for g in self.generators:
            for v in range(self.graph.n):
                a, b = find(v), find(g(v))
                if a != b:
                    parent[max(a, b)] = min(a, b)

        groups = {}
        for v in range(self.graph.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def __contains__(self, permutation):
        return self.graph.is_automorphism(permutation)

    def __repr__(self):
        return 'AutomorphismGroup(order=%i, generators=%r)' % (self.order, self.generators)


def automorphism_group(graph):
    " Exact automorphism group of `graph`. "
    assert isinstance(graph, Graph)
    search = _search(graph)
    return AutomorphismGroup(graph, search.generators, search.order)


def canonical_labeling(graph):
    """
    Return ``(canonical_graph, labeling)`` where ``labeling`` maps every
    vertex of `graph` to its vertex in the canonical graph.
    """
    assert isinstance(graph, Graph)
    labeling = _search(graph).labeling
    return graph.relabel(labeling), labeling


def canonical_form(graph):
    " Isomorphism-invariant representative of `graph`. "
    return canonical_labeling(graph)[0]
