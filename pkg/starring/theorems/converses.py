"""Searches for rings where the converse of a check fails.

A converse holds its scope (the rings on which the question makes sense) and
a finder giving a witness on rings where the converse statement fails. The
search walks a corpus in its canonical order and stops at the first witness.
"""
import logging
from collections import OrderedDict, namedtuple
from ..analysis import analyse
from ..graph import SplitLimitError, component_sides, is_clique, splits_via
from ..ring import FiniteStarRing
from ..ringspec import build
from ..structure import is_ideal, is_properly_maximal
from .sections import PQ_STANDING, THREE_VERTICES, VERTICES, sum_closed


logger = logging.getLogger(__name__)

converses = OrderedDict()

ConverseWitness = namedtuple('ConverseWitness',
                             'converse_id descriptor witness examined')
ConverseWitness.__doc__ = """First ring of a corpus where a converse fails;
``examined`` counts the rings of the corpus looked at, this one included."""


class UnknownConverseError(KeyError):
    def __init__(self, converse_id=None):
        msg = 'No converse search for {0!r}, expected one of {1}' \
              .format(converse_id, ', '.join(converses))
        super(UnknownConverseError, self).__init__(msg)


class Converse(object):
    def __init__(self, theorem_id, statement, scope, finder):
        self.id = theorem_id
        self.statement = statement
        self.scope = tuple(scope)
        self.finder = finder

    def in_scope(self, analysis):
        return all(h.test(analysis)[0] for h in self.scope)

    def find(self, ring):
        """Gives the witness of a failing converse on ``ring``, or
        ``None``."""
        analysis = analyse(ring)
        if not self.in_scope(analysis):
            return None
        return self.finder(analysis)

    def __repr__(self):
        return '<Converse {0}>'.format(self.id)


def converse(theorem_id, statement, scope=()):
    def decorate(finder):
        converses[theorem_id] = Converse(theorem_id, statement, scope, finder)
        return finder
    return decorate


def _split_sides(A, a):
    try:
        splits = splits_via(A.graph, a)
    except SplitLimitError as error:
        logger.warning('%s; using component sides on %s', error,
                       A.ring.descriptor)
        splits = component_sides(A.graph, a)
    for x_side, y_side in splits:
        yield x_side
        yield y_side


@converse('TH-SIDE-IDEAL', 'V(X) u {0} is an ideal for a split side X '
                           'which is not complete')
def ideal_side_not_complete(A):
    R = A.ring
    for a in A.cut_vertices:
        for side in _split_sides(A, a):
            ideal = sorted(set(side) | {R.zero})
            if is_ideal(R, ideal) and not is_clique(A.graph, side):
                return {'vertex': A.label(a), 'X': A.labels(side),
                        'ideal': A.labels(ideal)}
    return None


@converse('PROP-NONZD-SUM', 'sums outside V u {0} stay in V u {0} without '
                            'a cut vertex', scope=(VERTICES,))
def sum_closed_without_cut(A):
    if len(A.cut_vertices):
        return None
    closed, _ = sum_closed(A)
    if not closed:
        return None
    return {'vertices': A.labels(A.graph), 'cut_vertices': []}


@converse('PROP-CUT-PROPMAX', 'a vertex with r(aR) properly maximal which is '
                              'not a cut vertex', scope=(THREE_VERTICES,))
def properly_maximal_not_cut(A):
    found = [v for v in A.graph if v not in A.cut_vertices and
             is_properly_maximal(A.ring, v)]
    if not found:
        return None
    return {'vertices': A.labels(found),
            'cut_vertices': A.cut_vertices.labels()}


@converse('TH-CUT-ATOM', 'an atom of the central projections which is not a '
                         'cut vertex', scope=PQ_STANDING + (THREE_VERTICES,))
def atom_not_cut(A):
    found = [e for e in A.lattice.atoms if e not in A.cut_vertices]
    if not found:
        return None
    return {'atoms': A.labels(found),
            'cut_vertices': A.cut_vertices.labels()}


def get_converse(converse_id):
    try:
        return converses[converse_id.strip().upper()]
    except KeyError:
        raise UnknownConverseError(converse_id)


def _rings(corpus):
    if hasattr(corpus, 'rings'):
        return corpus.rings()
    return (ring if isinstance(ring, FiniteStarRing) else build(ring)
            for ring in corpus)


def find_converse_counterexample(converse_id, corpus=None):
    """Finds the first ring of ``corpus`` where the converse of a check
    fails.

    :param converse_id: the id of the check whose converse is searched
    :param corpus: a :class:`~starring.corpus.CorpusSpec` (the default corpus
                   when ``None``) or a sequence of rings or specifications,
                   searched in the given order
    :return: the witness, ``None`` when no ring of the corpus has one
    :rtype: ConverseWitness
    :raises ValueError: on an empty corpus
    """
    search = get_converse(converse_id)
    if corpus is None:
        from ..corpus import CorpusSpec
        corpus = CorpusSpec()
    examined = 0
    for ring in _rings(corpus):
        examined += 1
        witness = search.find(ring)
        if witness is not None:
            logger.info('Converse of %s fails on %s', search.id,
                        ring.descriptor)
            return ConverseWitness(search.id, ring.descriptor, witness,
                                   examined)
    if not examined:
        raise ValueError('Converse searches need a nonempty corpus')
    return None
