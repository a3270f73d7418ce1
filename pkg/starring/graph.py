"""Zero-divisor graphs of finite *-rings and the graph analytics used by the
theorem checks.

Three graphs are built from an :class:`~starring.structure.AnnihilatorTable`:

* the strong zero-divisor graph, vertices ``a != 0`` with ``r(aR) != 0`` and
  ``a ~ b`` iff ``aRb* = 0``;
* the zero-divisor graph of the involution, ``a ~ b`` iff ``ab* = 0``;
* the undirected zero-divisor graph, ``a ~ b`` iff ``ab = 0`` or ``ba = 0``.

Adjacency is stored as a boolean matrix over the vertices sorted by element
id, which is also the order of every listing.
"""
import logging
from collections import namedtuple, deque
from enum import Enum, unique
import numpy as np
import networkx as nx
from ordered_set import OrderedSet
from . import config
from .innerutils import INFINITY
from .structure import ElementSet, annihilator_table


logger = logging.getLogger(__name__)


class UnknownVertexError(KeyError):
    def __init__(self, vertex=None, graph=None):
        msg = '{0} is not a vertex of {1}'.format(vertex, graph)
        super(UnknownVertexError, self).__init__(msg)


class SplitLimitError(RuntimeError):
    def __init__(self, vertex=None, components=None, cap=None):
        msg = 'Splitting via {0} enumerates {1} bipartitions of {2} ' \
              'components, above the cap of {3}' \
              .format(vertex, 2 ** (components - 1) - 1, components, cap)
        super(SplitLimitError, self).__init__(msg)
        self.components = components


@unique
class GraphKind(Enum):
    STRONG = 'strong'
    STAR = 'star'
    UNDIRECTED = 'undirected'


GraphMetrics = namedtuple('GraphMetrics', 'vertex_count edge_count connected '
                                          'component_count diameter girth')
GraphMetrics.__doc__ = """Connectivity, diameter and girth of a graph.

``diameter`` is ``None`` for the graph without vertices and infinite for a
disconnected one; ``girth`` is infinite for acyclic graphs.
"""


class Graph(object):
    """A simple undirected graph over ring elements."""

    def __init__(self, ring, vertices, adjacency, kind, complemented=False,
                 loops=None):
        self.ring = ring
        self.vertices = np.asarray(vertices, dtype=np.int64)
        self.adj = np.asarray(adjacency, dtype=bool)
        np.fill_diagonal(self.adj, False)
        self.kind = kind
        self.complemented = complemented
        self._loops = loops
        self._positions = {int(v): i for i, v in enumerate(self.vertices)}
        self._distances = None
        self._metrics = None

    @property
    def name(self):
        name = '{0}({1})'.format(self.kind.value, self.ring.descriptor)
        return 'complement-of-' + name if self.complemented else name

    def position(self, v):
        try:
            return self._positions[self.ring.index(v)]
        except (KeyError, TypeError):
            raise UnknownVertexError(vertex=v, graph=self.name)

    def __contains__(self, v):
        try:
            self.position(v)
        except UnknownVertexError:
            return False
        return True

    def __iter__(self):
        return (int(v) for v in self.vertices)

    def __len__(self):
        return self.vertices.size

    def label(self, v):
        return self.ring.label(v)

    def labels(self):
        return [self.ring.label(v) for v in self.vertices]

    def adjacent(self, a, b):
        return bool(self.adj[self.position(a), self.position(b)])

    def neighbors(self, v):
        return [int(w) for w in self.vertices[self.adj[self.position(v)]]]

    def degree(self, v):
        return int(self.adj[self.position(v)].sum())

    @property
    def degrees(self):
        return self.adj.sum(axis=1)

    def edges(self):
        """Edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        pairs = np.argwhere(np.triu(self.adj, 1))
        return [(int(self.vertices[i]), int(self.vertices[j]))
                for i, j in pairs]

    @property
    def edge_count(self):
        return int(np.triu(self.adj, 1).sum())

    @property
    def loops(self):
        """Vertices ``a`` with ``aRa* = 0`` (never drawn: the graph is
        simple)."""
        if self._loops is None:
            return []
        return [int(v) for v in self.vertices[self._loops]]

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(int(v) for v in self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def subgraph_adjacency(self, vertices):
        positions = [self.position(v) for v in vertices]
        return self.adj[np.ix_(positions, positions)]

    def __repr__(self):
        return '<Graph {0}: {1} vertices, {2} edges>'.format(
            self.name, len(self), self.edge_count)


def build_graph(R, table=None, kind=GraphKind.STRONG):
    """Builds a zero-divisor graph of ``R``.

    Adjacency is symmetrised: in the strong graph ``a ~ b`` iff ``aRb* = 0``
    or ``bRa* = 0``, which is the plain relation when the involution is an
    anti-automorphism.

    :param table: the annihilator table of ``R``, computed when omitted
    :param kind: a :class:`GraphKind`
    """
    table = table if table is not None else annihilator_table(R)
    kind = GraphKind(kind)
    stars = R.stars
    loops = None
    if kind is GraphKind.STRONG:
        vertices = np.flatnonzero(table.vertex_mask())
        related = table.ann_principal[np.ix_(vertices, stars[vertices])]
        loops = np.diagonal(related).copy()
    else:
        nonzero = R.elements != R.zero
        left_divisors = table.ann_elem[:, nonzero].any(axis=1)
        if kind is GraphKind.STAR:
            mask = left_divisors
        else:
            mask = left_divisors | table.ann_left[:, nonzero].any(axis=1)
        mask[R.zero] = False
        vertices = np.flatnonzero(mask)
        columns = stars[vertices] if kind is GraphKind.STAR else vertices
        related = table.ann_elem[np.ix_(vertices, columns)]
    graph = Graph(R, vertices, related | related.T, kind, loops=loops)
    logger.debug('Built %r', graph)
    return graph


def strong_graph(R):
    return R.derived('strong_graph', lambda: build_graph(R))


def complement(G):
    """The complement of ``G`` over the same vertices."""
    adjacency = ~G.adj
    np.fill_diagonal(adjacency, False)
    return Graph(G.ring, G.vertices, adjacency, G.kind,
                 complemented=not G.complemented, loops=G._loops)


def distances(G):
    """All-pairs distances by simultaneous breadth-first search.

    :return: a float matrix over the vertex positions, ``inf`` when
             unreachable
    """
    if G._distances is None:
        size = len(G)
        result = np.full((size, size), np.inf)
        np.fill_diagonal(result, 0)
        adjacency = G.adj.astype(np.float32)
        reached = np.eye(size, dtype=bool)
        frontier = reached.copy()
        step = 0
        while frontier.any():
            step += 1
            frontier = ((frontier.astype(np.float32) @ adjacency) > 0) & \
                ~reached
            result[frontier] = step
            reached |= frontier
        G._distances = result
    return G._distances


def distance(G, a, b):
    """Length of a shortest path between ``a`` and ``b``, infinite when
    disconnected."""
    d = distances(G)[G.position(a), G.position(b)]
    return INFINITY if np.isinf(d) else int(d)


def has_triangle(G):
    adjacency = G.adj.astype(np.int64)
    return bool(((adjacency @ adjacency) * adjacency).any())


def _girth(G):
    if G.edge_count == 0:
        return INFINITY
    if has_triangle(G):
        return 3
    neighbours = [np.flatnonzero(row) for row in G.adj]
    best = INFINITY
    for root in range(len(G)):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * depth[u] + 1 >= best:
                break
            for w in neighbours[u]:
                w = int(w)
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, depth[u] + depth[w] + 1)
        if best == 4:
            break
    return best


def metrics(G):
    """Computes the :class:`GraphMetrics` of ``G``."""
    if G._metrics is None:
        count = len(G)
        components = nx.number_connected_components(G.to_networkx()) \
            if count else 0
        if count == 0:
            diameter = None
        elif components > 1:
            diameter = INFINITY
        else:
            diameter = int(distances(G).max())
        G._metrics = GraphMetrics(count, G.edge_count, components == 1,
                                  components, diameter, _girth(G))
    return G._metrics


def cut_vertices(G):
    """Vertices whose removal increases the number of components."""
    return ElementSet.of(G.ring, nx.articulation_points(G.to_networkx()))


def pendant_vertices(G):
    return ElementSet.of(G.ring, G.vertices[G.degrees == 1])


def is_complete_bipartite(G):
    """Gives the part sizes ``(m, n)``, ``m >= n``, when ``G`` is
    ``K_{m,n}``, ``None`` otherwise."""
    if len(G) < 2 or not metrics(G).connected:
        return None
    graph = G.to_networkx()
    if not nx.is_bipartite(graph):
        return None
    left, right = nx.bipartite.sets(graph)
    if G.edge_count != len(left) * len(right):
        return None
    return max(len(left), len(right)), min(len(left), len(right))


def bipartition(G):
    """The two parts of a connected bipartite ``G``, as sorted id lists."""
    left, right = nx.bipartite.sets(G.to_networkx())
    return sorted(left), sorted(right)


def is_clique(G, S):
    """Tells whether the vertices ``S`` are pairwise adjacent."""
    S = list(S)
    if len(S) <= 1:
        for v in S:
            G.position(v)
        return True
    adjacency = G.subgraph_adjacency(S)
    return bool((adjacency | np.eye(len(S), dtype=bool)).all())


def _orthogonality(G):
    adjacency = G.adj.astype(np.int64)
    return G.adj & ((adjacency @ adjacency) == 0)


def orthogonal(G, a, b):
    """Tells whether ``a`` and ``b`` are adjacent without common
    neighbour."""
    i, j = G.position(a), G.position(b)
    if i == j:
        raise ValueError('Orthogonality needs two distinct vertices')
    return bool(_orthogonality(G)[i, j])


def is_complemented(G):
    """Tells whether every vertex has an orthogonal partner."""
    return bool(_orthogonality(G).any(axis=1).all())


def components_without(G, a):
    """Components of ``G - a`` as sorted id lists, ordered by first id."""
    i = G.position(a)
    keep = np.arange(len(G)) != i
    rest = Graph(G.ring, G.vertices[keep], G.adj[np.ix_(keep, keep)], G.kind)
    components = [sorted(c) for c in
                  nx.connected_components(rest.to_networkx())]
    return sorted(components)


def _is_cut(G, a):
    return a in cut_vertices(G)


def splits_via(G, a, cap=None):
    """Enumerates the splits of ``G`` via ``a``.

    A split is a pair ``(X, Y)`` of vertex sets, both with at least two
    vertices, meeting exactly in the cut vertex ``a``, covering ``G`` and
    without edge between ``X - a`` and ``Y - a``. Each unordered split is
    given once, with the first component of ``G - a`` in ``X``.

    :raises SplitLimitError: when there are more than ``cap`` splits
    """
    a = G.ring.index(a)
    G.position(a)
    if not _is_cut(G, a):
        return []
    components = components_without(G, a)
    cap = config.get('split_cap', cap)
    count = len(components)
    if 2 ** (count - 1) - 1 > cap:
        raise SplitLimitError(vertex=G.label(a), components=count, cap=cap)
    result = []
    first, others = components[0], components[1:]
    for mask in range(2 ** len(others) - 1):
        x_side, y_side = list(first), []
        for bit, component in enumerate(others):
            (x_side if mask >> bit & 1 else y_side).extend(component)
        result.append((OrderedSet([a] + sorted(x_side)),
                       OrderedSet([a] + sorted(y_side))))
    return result


def component_sides(G, a):
    """The splits ``({a} + K, G - K)`` for the components ``K`` of ``G -
    a``."""
    a = G.ring.index(a)
    G.position(a)
    if not _is_cut(G, a):
        return []
    everything = set(G)
    result = []
    for component in components_without(G, a):
        rest = sorted(everything - set(component))
        result.append((OrderedSet([a] + component), OrderedSet(rest)))
    return result


def is_split(G, a, X, Y):
    """Replays the split conditions for ``(X, Y)`` via ``a``."""
    a = G.ring.index(a)
    X, Y = set(X), set(Y)
    if len(X) < 2 or len(Y) < 2 or X & Y != {a}:
        return False
    if X | Y != set(G) or not _is_cut(G, a):
        return False
    return not any(G.adjacent(x, y) for x in X - {a} for y in Y - {a})
