"""The registered theorem checks.

Results on arbitrary *-rings come first (connectedness of products, splits
and cut vertices), then results on p.q.-Baer *-rings, then the complement of
the strong graph. Checks about p.q.-Baer rings assume at least four central
projections, except the girth characterisation and the distance to central
covers which only need a nonempty graph.
"""
from itertools import combinations
import networkx as nx
import numpy as np
from ..graph import (bipartition, component_sides, distance, distances,
                     is_clique, is_complemented, is_complete_bipartite)
from ..innerutils import INFINITY, number_text
from ..structure import is_ideal, is_properly_maximal
from .theorem import Hypothesis, Outcome, Theorem, register, verdict


def _pq_baer(A):
    witness = A.classification.witnesses.get('pq_baer')
    if witness is None:
        return True, None
    return False, {'element': A.label(witness['element'])}


def _cp_count(predicate):
    def test(A):
        return predicate(A.cp_count), {'cp_count': A.cp_count}
    return test


def _has_vertices(A):
    return A.vertex_count > 0, {'vertices': A.vertex_count}


def _three_vertices(A):
    return A.vertex_count >= 3, {'vertices': A.labels(A.graph)}


def _has_cut_vertex(A):
    return len(A.cut_vertices) > 0, {'cut_vertices': []}


def _product(A):
    return A.factors is not None, {'ring': A.ring.descriptor}


def _product_with_vertices(A):
    if A.factors is None:
        return False, {'ring': A.ring.descriptor}
    empty = [f.ring.descriptor for f in A.factors if f.vertex_count == 0]
    return not empty, {'factors_without_vertices': empty}


def _complement_connected(A):
    connected = A.complement_metrics.connected
    return connected, {'complement_components':
                       A.complement_metrics.component_count}


def _complement_disconnected(A):
    met, witness = _complement_connected(A)
    return not met, witness


def _triangle_free(A):
    return A.triangle_free, {'girth': number_text(A.metrics.girth)}


def _non_central_vertex(A):
    covers = A.covers
    for v in A.graph:
        if covers[v] != v:
            return True, None
    return False, {'vertices': 'every vertex is its own central cover'}


def _proper_involution(A):
    defect = A.ring.involution_defect
    if A.ring.involution_proper:
        return True, None
    return False, {'pair': A.labels(defect) if defect else []}


PQ_BAER = Hypothesis('not p.q.-Baer', _pq_baer)
CP_AT_LEAST_4 = Hypothesis('|CP(R)| < 4', _cp_count(lambda n: n >= 4))
CP_EXACTLY_4 = Hypothesis('|CP(R)| != 4', _cp_count(lambda n: n == 4))
CP_EXACTLY_2 = Hypothesis('|CP(R)| != 2', _cp_count(lambda n: n == 2))
NONTRIVIAL_CENTRAL = Hypothesis('no nontrivial central projection',
                                _cp_count(lambda n: n > 2))
VERTICES = Hypothesis('no strong zero-divisors', _has_vertices)
THREE_VERTICES = Hypothesis('fewer than three strong zero-divisors',
                            _three_vertices)
CUT_VERTEX = Hypothesis('no cut vertex', _has_cut_vertex)
PRODUCT = Hypothesis('not built as a direct product', _product)
PRODUCT_WITH_VERTICES = Hypothesis('not a product of rings with strong '
                                   'zero-divisors', _product_with_vertices)
COMPLEMENT_CONNECTED = Hypothesis('complement disconnected',
                                  _complement_connected)
COMPLEMENT_DISCONNECTED = Hypothesis('complement connected',
                                     _complement_disconnected)
TRIANGLE_FREE = Hypothesis('strong graph has a triangle', _triangle_free)
NON_CENTRAL_VERTEX = Hypothesis('no vertex differs from its central cover',
                                _non_central_vertex)
PROPER_INVOLUTION = Hypothesis('involution is not an anti-automorphism',
                               _proper_involution)

PQ_STANDING = (PQ_BAER, CP_AT_LEAST_4)


def _one_minus(A, e):
    return A.ring.sub(A.ring.one, e)


def _vertex_covers(A):
    return A.covers.cover[A.graph.vertices]


def _cut_sides(A):
    """``(a, X)`` for every cut vertex ``a`` and split side ``X``."""
    for a in A.cut_vertices:
        for x_side, y_side in component_sides(A.graph, a):
            yield a, x_side
            yield a, y_side


def is_square_free(A, b):
    """Tells whether ``b^2`` is 0 or ``b``."""
    square = A.ring.mul(b, b)
    return square in (A.ring.zero, b)


def sum_closed(A):
    """Tells whether ``x + y`` lies in ``V u {0}`` for all ``x, y`` outside
    of it; gives the first failing pair otherwise."""
    R = A.ring
    inside = np.zeros(R.order, dtype=bool)
    inside[A.graph.vertices] = True
    inside[R.zero] = True
    outside = np.flatnonzero(~inside)
    size = max(1, (1 << 17) // max(1, outside.size))
    for start in range(0, outside.size, size):
        block = outside[start:start + size]
        sums = R._add(block[:, None], outside[None, :])
        ok = inside[sums]
        if not ok.all():
            i, j = np.argwhere(~ok)[0]
            return False, (int(block[i]), int(outside[j]))
    return True, None


def nontrivial_disjoint_pairs(A):
    """Nontrivial central projections ``e, f`` with ``ef = 0`` and ``e + f
    != 1``."""
    R = A.ring
    for e, f in combinations(A.lattice.nontrivial, 2):
        if R.mul(e, f) == R.zero and R.add(e, f) != R.one:
            yield e, f


def z3z3_fingerprint(A):
    """Order 9, characteristic 3, four central projections forming the
    Boolean lattice and two elements covered by each nontrivial one."""
    R = A.ring
    if R.order != 9 or R.characteristic != 3:
        return False
    if not A.lattice.is_boolean_square():
        return False
    return all(len(A.classes[e]) == 2 for e in A.lattice.nontrivial)


@register
class ProductConnected(Theorem):
    id = 'TH-PROD-CONN'
    citation = ('A direct sum of two *-rings with strong zero-divisors has a '
                'connected strong graph of diameter at most 4.')
    hypotheses = (PRODUCT_WITH_VERTICES,)

    def conclusion(self, A):
        m = A.metrics
        holds = m.connected and m.diameter <= 4
        return verdict(holds, 1, {'connected': m.connected,
                                  'diameter': number_text(m.diameter)})


@register
class SumConnected(Theorem):
    id = 'COR-SUM-CONN'
    citation = 'A finite direct sum of *-rings has a connected strong graph.'
    hypotheses = (PRODUCT,)

    def conclusion(self, A):
        m = A.metrics
        return verdict(m.connected, 1,
                       {'components': m.component_count})


@register
class CentralConnected(Theorem):
    id = 'COR-CENTRAL-CONN'
    citation = ('A *-ring with a nontrivial central projection has a '
                'connected strong graph.')
    hypotheses = (NONTRIVIAL_CENTRAL,)

    def conclusion(self, A):
        m = A.metrics
        return verdict(m.connected, 1, {'components': m.component_count})


@register
class SplitIdeal(Theorem):
    id = 'TH-SPLIT-IDEAL'
    citation = 'If the strong graph splits via a, then {0, a} is an ideal.'

    def conclusion(self, A):
        R = A.ring
        cuts = list(A.cut_vertices)
        for a in cuts:
            if not is_ideal(R, [R.zero, a]):
                return Outcome(False, len(cuts), {'vertex': A.label(a)})
        return Outcome(True, len(cuts))


@register
class SideIdeal(Theorem):
    """Reads "X - {a} is complete" with loops: ``xRy* = 0`` for all ``x, y``
    in ``X - {a}``, ``x = y`` included. Sides complete only without loops
    are listed in the details."""
    id = 'TH-SIDE-IDEAL'
    citation = ('If the strong graph splits into X and Y via a with X - {a} '
                'complete, then V(X) u {0} is an ideal.')

    def conclusion(self, A):
        R, G = A.ring, A.graph
        loops = set(G.loops)
        instances, loop_free_only = 0, []
        for a, x_side in _cut_sides(A):
            rest = [x for x in x_side if x != a]
            if not is_clique(G, rest):
                continue
            if not loops.issuperset(rest):
                loop_free_only.append({'vertex': A.label(a),
                                       'X': A.labels(x_side)})
                continue
            instances += 1
            if not is_ideal(R, list(x_side) + [R.zero]):
                return Outcome(False, instances,
                               {'vertex': A.label(a),
                                'X': A.labels(x_side)})
        details = {'loop_free_only': loop_free_only} if loop_free_only \
            else None
        return Outcome(True, instances, None, details)


@register
class NonZeroDivisorSum(Theorem):
    id = 'PROP-NONZD-SUM'
    citation = ('If the strong graph has a cut vertex, the sum of two '
                'elements outside V u {0} lies in V u {0}.')
    hypotheses = (CUT_VERTEX,)

    def conclusion(self, A):
        closed, pair = sum_closed(A)
        witness = {'pair': A.labels(pair)} if pair else None
        return Outcome(closed, 1, witness)


@register
class CutProperlyMaximal(Theorem):
    """Both readings of proper maximality are checked: no ``b`` outside
    ``{0, a}`` with ``r(aR)`` strictly inside ``r(bR)``, and the stricter
    one where equality also disqualifies."""
    id = 'PROP-CUT-PROPMAX'
    citation = 'If a is a cut vertex, then r(aR) is properly maximal.'

    def conclusion(self, A):
        R = A.ring
        cuts = list(A.cut_vertices)
        for a in cuts:
            for strict in (False, True):
                if not is_properly_maximal(R, a, strict=strict):
                    return Outcome(False, len(cuts), {'vertex': A.label(a),
                                                      'strict': strict})
        return Outcome(True, len(cuts))


@register
class SideIdempotent(Theorem):
    id = 'TH-SIDE-IDEMPOTENT'
    citation = ('In a p.q.-Baer *-ring, if the graph splits via a with '
                '|V(X)| > 2 and X complete, then b^2 is 0 or b for b in '
                'V(X) - {a}.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        instances = 0
        for a, x_side in _cut_sides(A):
            if len(x_side) <= 2 or not is_clique(A.graph, x_side):
                continue
            instances += 1
            for b in x_side:
                if b != a and not is_square_free(A, b):
                    return Outcome(False, instances,
                                   {'vertex': A.label(a),
                                    'X': A.labels(x_side),
                                    'element': A.label(b)})
        return Outcome(True, instances)


@register
class SideCorollary(Theorem):
    """(a) a side holding some ``b`` with ``b^2`` neither 0 nor ``b`` is not
    complete; (b) a complete side gives the ideal ``V(X) u {0}``."""
    id = 'COR-SIDE'
    citation = ('In a p.q.-Baer *-ring split via a with |V(X)| > 2: a side '
                'with b^2 not in {0, b} is not complete, and a complete side '
                'gives the ideal V(X) u {0}.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        R, G = A.ring, A.graph
        instances = {'a': 0, 'b': 0}
        for a, x_side in _cut_sides(A):
            if len(x_side) <= 2:
                continue
            complete = is_clique(G, x_side)
            if any(b != a and not is_square_free(A, b) for b in x_side):
                instances['a'] += 1
                if complete:
                    return Outcome(False, sum(instances.values()),
                                   {'part': 'a', 'vertex': A.label(a),
                                    'X': A.labels(x_side)})
            if complete:
                instances['b'] += 1
                if not is_ideal(R, list(x_side) + [R.zero]):
                    return Outcome(False, sum(instances.values()),
                                   {'part': 'b', 'vertex': A.label(a),
                                    'X': A.labels(x_side)})
        return Outcome(True, sum(instances.values()), None,
                       {'instances': instances})


@register
class CutAtom(Theorem):
    id = 'TH-CUT-ATOM'
    citation = ('In a p.q.-Baer *-ring every cut vertex is an atom of the '
                'lattice of central projections.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        atoms = set(A.lattice.atoms)
        cuts = list(A.cut_vertices)
        for a in cuts:
            if a not in atoms:
                return Outcome(False, len(cuts),
                               {'vertex': A.label(a),
                                'central_projection': a in A.lattice})
        return Outcome(True, len(cuts))


@register
class CutIffPendant(Theorem):
    """Gated on three vertices: on two vertices the graph is a single edge,
    both ends pendant and no cut vertex."""
    id = 'TH-CUT-IFF-PENDANT'
    citation = ('A p.q.-Baer *-ring has a cut vertex if and only if it has a '
                'pendant vertex.')
    hypotheses = PQ_STANDING + (THREE_VERTICES,)

    def conclusion(self, A):
        cuts, pendants = A.cut_vertices, A.pendants
        holds = bool(len(cuts)) == bool(len(pendants))
        return verdict(holds, 1, {'cut_vertices': cuts.labels(),
                                  'pendants': pendants.labels()})


@register
class AnnihilatorSizeTwo(Theorem):
    id = 'COR-ANN-SIZE-2'
    citation = ('A p.q.-Baer *-ring has a cut vertex if and only if some '
                'element has a right annihilator with two elements.')
    hypotheses = PQ_STANDING + (THREE_VERTICES,)

    def conclusion(self, A):
        sizes = A.table.ann_elem.sum(axis=1)
        pairs = np.flatnonzero(sizes == 2)
        has_cut = len(A.cut_vertices) > 0
        holds = has_cut == bool(pairs.size)
        return verdict(holds, 1, {'cut_vertices': A.cut_vertices.labels(),
                                  'two_element_annihilators':
                                  A.labels(pairs)})


@register
class CutSetClique(Theorem):
    id = 'TH-CUTSET-CLIQUE'
    citation = ('In a p.q.-Baer *-ring the cut vertices form a complete '
                'subgraph.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        cuts = list(A.cut_vertices)
        instances = len(cuts) if len(cuts) >= 2 else 0
        holds = is_clique(A.graph, cuts)
        return verdict(holds, instances, {'cut_vertices': A.labels(cuts)})


@register
class DistanceCover(Theorem):
    """Only pairs with different central covers are compared: two distinct
    vertices with the same cover are at distance 2 while their covers
    coincide."""
    id = 'LEM-DIST-COVER'
    citation = ('In a p.q.-Baer *-ring d(a, b) = d(C(a), C(b)) for vertices '
                'with different central covers.')
    hypotheses = (PQ_BAER, VERTICES)

    def conclusion(self, A):
        G = A.graph
        covers = _vertex_covers(A)
        outside = [int(c) for c in covers if c not in G]
        if outside:
            return Outcome(False, len(G),
                           {'cover_not_a_vertex': A.labels(outside[:1])})
        positions = np.asarray([G.position(c) for c in covers])
        d = distances(G)
        compared = covers[:, None] != covers[None, :]
        same = d == d[np.ix_(positions, positions)]
        failures = np.argwhere(compared & ~same)
        instances = int(compared.sum()) // 2
        if failures.size:
            i, j = failures[0]
            a, b = G.vertices[i], G.vertices[j]
            return Outcome(False, instances,
                           {'pair': A.labels((a, b)),
                            'distance': number_text(distance(G, a, b)),
                            'cover_distance': number_text(
                                distance(G, covers[i], covers[j]))})
        return Outcome(True, instances)


@register
class FourCentralBipartite(Theorem):
    id = 'PROP-CP4-BIPARTITE'
    citation = ('A p.q.-Baer *-ring with four central projections has a '
                'complete bipartite strong graph with parts C_e and C_(1-e) '
                'and a disconnected complement.')
    hypotheses = (PQ_BAER, CP_EXACTLY_4)

    def conclusion(self, A):
        sizes = is_complete_bipartite(A.graph)
        if sizes is None:
            return Outcome(False, 1, {'complete_bipartite': False})
        parts = sorted(bipartition(A.graph))
        classes = sorted(sorted(A.classes[e]) for e in A.lattice.nontrivial)
        holds = parts == classes and not A.complement_metrics.connected
        return verdict(holds, 1, {'parts': [A.labels(p) for p in parts],
                                  'classes': [A.labels(c) for c in classes],
                                  'complement_connected':
                                  A.complement_metrics.connected})


@register
class DistanceThree(Theorem):
    id = 'LEM-DIST3'
    citation = ('In a p.q.-Baer *-ring, nontrivial central projections e, f '
                'with ef = 0 and e + f != 1 give d(1 - e, 1 - f) = 3.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        instances = 0
        for e, f in nontrivial_disjoint_pairs(A):
            instances += 1
            d = distance(A.graph, _one_minus(A, e), _one_minus(A, f))
            if d != 3:
                return Outcome(False, instances,
                               {'e': A.label(e), 'f': A.label(f),
                                'distance': number_text(d)})
        return Outcome(True, instances)


@register
class ComplementConnectedSix(Theorem):
    id = 'TH-COMP-CONN-CP6'
    citation = ('For a p.q.-Baer *-ring the complement of the strong graph '
                'is connected if and only if |CP(R)| >= 6.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        connected = A.complement_metrics.connected
        return verdict(connected == (A.cp_count >= 6), 1,
                       {'cp_count': A.cp_count,
                        'complement_connected': connected})


@register
class UniversalVertex(Theorem):
    id = 'COR-UNIVERSAL-CP4'
    citation = ('A p.q.-Baer *-ring whose strong graph has a vertex adjacent '
                'to all others has four central projections.')
    hypotheses = PQ_STANDING

    def conclusion(self, A):
        G = A.graph
        universal = G.vertices[G.degrees == len(G) - 1]
        holds = universal.size == 0 or A.cp_count == 4
        return verdict(holds, int(universal.size),
                       {'universal': A.labels(universal),
                        'cp_count': A.cp_count})


@register
class ComplementGirth(Theorem):
    """With four central projections the components of the complement are
    also compared with ``C_e`` and ``C_(1-e)``."""
    id = 'PROP-COMP-GIRTH'
    citation = ('For a p.q.-Baer *-ring with disconnected complement, the '
                'girth of the complement is 3 or infinite.')
    hypotheses = PQ_STANDING + (COMPLEMENT_DISCONNECTED,)

    def conclusion(self, A):
        girth = A.complement_metrics.girth
        graph = A.graph_complement.to_networkx()
        components = sorted(sorted(c) for c in nx.connected_components(graph))
        holds = girth in (3, INFINITY)
        if A.cp_count == 4:
            classes = sorted(sorted(A.classes[e])
                             for e in A.lattice.nontrivial)
            holds = holds and components == classes
        return verdict(holds, 1, {'girth': number_text(girth),
                                  'components': [A.labels(c)
                                                 for c in components]})


@register
class TriangleFree(Theorem):
    id = 'LEM-TRIANGLEFREE'
    citation = ('In a p.q.-Baer *-ring with triangle-free strong graph, a ~ b '
                'if and only if C(a) = 1 - C(b).')
    hypotheses = PQ_STANDING + (TRIANGLE_FREE,)

    def conclusion(self, A):
        R, G = A.ring, A.graph
        covers = _vertex_covers(A)
        complements = R._add(np.full_like(covers, R.one), R._neg(covers))
        related = covers[:, None] == complements[None, :]
        off_diagonal = ~np.eye(len(G), dtype=bool)
        failures = np.argwhere((related != G.adj) & off_diagonal)
        instances = len(G) * (len(G) - 1) // 2
        if failures.size:
            i, j = failures[0]
            return Outcome(False, instances,
                           {'pair': A.labels((G.vertices[i], G.vertices[j])),
                            'adjacent': bool(G.adj[i, j])})
        return Outcome(True, instances)


@register
class Girth(Theorem):
    """(A) girth 3, two nontrivial central projections ``e, f`` with ``ef =
    0`` and ``e + f != 1``, and a three element chain of nonzero central
    projections are equivalent; (B) girth 4 iff triangle-free with some
    nontrivial ``e`` where ``|C_e| >= 2`` and ``|C_(1-e)| >= 2``."""
    id = 'TH-GIRTH'
    citation = ('Girth 3 and girth 4 of the strong graph of a p.q.-Baer '
                '*-ring in terms of its central projections.')
    hypotheses = (PQ_BAER, VERTICES)

    def conclusion(self, A):
        girth = A.metrics.girth
        triangle = girth == 3
        disjoint = next(nontrivial_disjoint_pairs(A), None) is not None
        chain = A.lattice.longest_chain(exclude_bottom=True)
        long_chain = len(chain) >= 3
        balanced = any(len(A.classes[e]) >= 2 and
                       len(A.classes[_one_minus(A, e)]) >= 2
                       for e in A.lattice.nontrivial)
        part_a = triangle == disjoint == long_chain
        part_b = (girth == 4) == (A.triangle_free and balanced)
        return verdict(part_a and part_b, 1,
                       {'girth': number_text(girth),
                        'disjoint_pair': disjoint,
                        'chain': A.labels(chain),
                        'balanced_projection': balanced})


@register
class ComplementDiameterGirth(Theorem):
    id = 'TH-COMP-DIAM2-GIRTH3'
    citation = ('For a p.q.-Baer *-ring with connected complement, the '
                'complement has diameter 2 and girth 3.')
    hypotheses = PQ_STANDING + (COMPLEMENT_CONNECTED,)

    def conclusion(self, A):
        m = A.complement_metrics
        return verdict(m.diameter == 2 and m.girth == 3, 1,
                       {'diameter': number_text(m.diameter),
                        'girth': number_text(m.girth)})


@register
class NotComplemented(Theorem):
    id = 'LEM-NOT-COMPLEMENTED'
    citation = ('For a p.q.-Baer *-ring with connected complement, the '
                'complement is not complemented.')
    hypotheses = PQ_STANDING + (COMPLEMENT_CONNECTED,)

    def conclusion(self, A):
        complemented = is_complemented(A.graph_complement)
        return verdict(not complemented, 1, {'complemented': complemented})


@register
class Z3Z3(Theorem):
    """The ring Z_3 + Z_3 is recognised by a fingerprint: order 9,
    characteristic 3, central projections forming the four element Boolean
    lattice, and two elements covered by each nontrivial one."""
    id = 'TH-Z3Z3'
    citation = ('For a p.q.-Baer *-ring with a vertex a != C(a), the '
                'complement of the strong graph is complemented if and only '
                'if R is Z_3 + Z_3.')
    hypotheses = PQ_STANDING + (NON_CENTRAL_VERTEX,)

    def conclusion(self, A):
        complemented = is_complemented(A.graph_complement)
        fingerprint = z3z3_fingerprint(A)
        return verdict(complemented == fingerprint, 1,
                       {'complemented': complemented,
                        'fingerprint': fingerprint})


@register
class AdjacencyByCovers(Theorem):
    """Compares annihilator adjacency with ``C(a)C(b) = 0`` on every pair
    of distinct vertices."""
    id = 'REM-ADJ-COVER'
    citation = 'In a p.q.-Baer *-ring aRb* = 0 if and only if C(a)C(b) = 0.'
    hypotheses = (PQ_BAER, VERTICES)

    def conclusion(self, A):
        G = A.graph
        covers = _vertex_covers(A)
        orthogonal = A.ring._mul(covers[:, None], covers[None, :]) == \
            A.ring.zero
        off_diagonal = ~np.eye(len(G), dtype=bool)
        failures = np.argwhere((orthogonal != G.adj) & off_diagonal)
        instances = len(G) * (len(G) - 1) // 2
        if failures.size:
            i, j = failures[0]
            return Outcome(False, instances,
                           {'pair': A.labels((G.vertices[i], G.vertices[j])),
                            'adjacent': bool(G.adj[i, j])})
        return Outcome(True, instances)


@register
class TwoCentralEmpty(Theorem):
    id = 'REM-CP2-EMPTY'
    citation = ('A p.q.-Baer *-ring whose only central projections are 0 '
                'and 1 has no strong zero-divisors.')
    hypotheses = (PQ_BAER, CP_EXACTLY_2)

    def conclusion(self, A):
        return verdict(A.vertex_count == 0, 1,
                       {'vertices': A.labels(A.graph)})


@register
class PqBaerSemiproper(Theorem):
    id = 'PROP-PQ-SEMIPROPER'
    citation = 'The involution of a p.q.-Baer *-ring is semiproper.'
    hypotheses = (PQ_BAER, PROPER_INVOLUTION)

    def conclusion(self, A):
        report = A.classification
        witness = None
        if not report.is_semiproper:
            witness = {'element':
                       A.label(report.witnesses['semiproper']['element'])}
        return Outcome(report.is_semiproper, 1, witness)


@register
class GraphFacts(Theorem):
    """Plain graph facts on the strong graph: diameter at least 3 gives a
    connected complement, the graph or its complement is connected, a
    complete graph has an edgeless complement and a complete bipartite one a
    disconnected complement."""
    id = 'LEM-GRAPH-FACTS'
    citation = ('Diameter, connectedness and completeness of a simple graph '
                'against its complement.')
    hypotheses = (VERTICES,)

    def conclusion(self, A):
        G, m, mc = A.graph, A.metrics, A.complement_metrics
        facts = {
            'diameter_3_complement_connected':
                m.diameter < 3 or mc.connected,
            'graph_or_complement_connected': m.connected or mc.connected,
            'complete_complement_edgeless':
                G.edge_count != len(G) * (len(G) - 1) // 2 or
                mc.edge_count == 0,
            'bipartite_complement_disconnected':
                is_complete_bipartite(G) is None or not mc.connected,
        }
        failed = [name for name, ok in facts.items() if not ok]
        return verdict(not failed, len(facts), {'failed': failed})
