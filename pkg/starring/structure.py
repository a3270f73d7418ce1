"""Annihilators, projections, central covers and the classification of a
finite *-ring (Rickart, Baer, quasi-Baer, p.q.-Baer, semiproper).

Everything here is derived from an :class:`AnnihilatorTable`, built once per
ring and cached on it. Sets of elements are boolean masks over element ids;
intersections of annihilators are computed on packed bit rows.
"""
import logging
from collections import OrderedDict
import numpy as np
from .innerutils import as_ids, first_true


logger = logging.getLogger(__name__)


class NoCentralCover(LookupError):
    def __init__(self, ring=None, element=None, reason='not p.q.-Baer'):
        msg = 'No central cover for {0} in {1}: {2}'.format(element, ring,
                                                           reason)
        super(NoCentralCover, self).__init__(msg)


class ElementSet(object):
    """A set of elements of a fixed ring, stored as a boolean mask."""

    def __init__(self, ring, mask):
        self.ring = ring
        self.mask = np.asarray(mask, dtype=bool)
        if self.mask.shape != (ring.order,):
            raise ValueError('Mask length {0} does not match the ring order '
                             '{1}'.format(self.mask.size, ring.order))

    @classmethod
    def of(cls, ring, elements=()):
        mask = np.zeros(ring.order, dtype=bool)
        ids = [ring.index(x) for x in elements]
        mask[as_ids(ids)] = True
        return cls(ring, mask)

    @classmethod
    def full(cls, ring):
        return cls(ring, np.ones(ring.order, dtype=bool))

    @property
    def ids(self):
        return np.flatnonzero(self.mask)

    def labels(self):
        return [self.ring.label(x) for x in self.ids]

    def __contains__(self, element):
        return bool(self.mask[self.ring.index(element)])

    def __iter__(self):
        return (int(x) for x in self.ids)

    def __len__(self):
        return int(self.mask.sum())

    def _other_mask(self, other):
        if isinstance(other, ElementSet):
            return other.mask
        return ElementSet.of(self.ring, other).mask

    def __eq__(self, other):
        if not isinstance(other, (ElementSet, set, frozenset)):
            return NotImplemented
        try:
            return bool(np.array_equal(self.mask, self._other_mask(other)))
        except (KeyError, ValueError):
            return False

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(np.packbits(self.mask).tobytes())

    def __and__(self, other):
        return ElementSet(self.ring, self.mask & self._other_mask(other))

    def __or__(self, other):
        return ElementSet(self.ring, self.mask | self._other_mask(other))

    def __sub__(self, other):
        return ElementSet(self.ring, self.mask & ~self._other_mask(other))

    def issubset(self, other):
        return not (self.mask & ~self._other_mask(other)).any()

    __le__ = issubset

    def __lt__(self, other):
        return self.issubset(other) and self != other

    def __repr__(self):
        return '{{{0}}}'.format(', '.join(self.labels()))


class AnnihilatorTable(object):
    """Per-element right annihilators and principal right ideals.

    * ``ann_elem[a, x]`` is true iff ``a * x == 0``
    * ``principal[a, y]`` is true iff ``y`` is in ``aR``
    * ``ann_principal[a, x]`` is true iff ``a * r * x == 0`` for every ``r``

    ``ann_principal[a]`` is the intersection of ``ann_elem[s]`` over ``s`` in
    ``aR``; rings sharing the same ``aR`` share the computation.
    """

    def __init__(self, ring):
        self.ring = ring
        n = ring.order
        self.ann_elem = np.zeros((n, n), dtype=bool)
        self.principal = np.zeros((n, n), dtype=bool)
        for ids in ring.chunks():
            products = ring.mul_rows(ids)
            self.ann_elem[ids] = products == ring.zero
            rows = np.repeat(ids, n)
            self.principal[rows, products.ravel()] = True
        self.ann_principal = self._annihilate_principal()
        self._ann_left = None
        logger.debug('Annihilator table of %s computed (%d principal right '
                     'ideals)', ring.descriptor, len(self._ideal_keys))

    def _annihilate_principal(self):
        ring = self.ring
        packed = np.packbits(self.ann_elem, axis=1)
        result = np.zeros_like(self.ann_elem)
        by_ideal = {}
        for a in range(ring.order):
            members = self.principal[a]
            key = np.packbits(members).tobytes()
            bits = by_ideal.get(key)
            if bits is None:
                if members[ring.one]:
                    bits = np.zeros(ring.order, dtype=bool)
                    bits[ring.zero] = True
                else:
                    row = np.bitwise_and.reduce(packed[members], axis=0)
                    bits = np.unpackbits(row, count=ring.order).astype(bool)
                by_ideal[key] = bits
            result[a] = bits
        self._ideal_keys = by_ideal
        return result

    @property
    def ann_left(self):
        """``ann_left[a, x]`` is true iff ``x * a == 0``."""
        if self._ann_left is None:
            ring = self.ring
            ann_left = np.zeros_like(self.ann_elem)
            for ids in ring.chunks():
                ann_left[ids] = ring.mul_cols(ids) == ring.zero
            self._ann_left = ann_left
        return self._ann_left

    def vertex_mask(self):
        """Nonzero elements with a nonzero ``r(aR)``."""
        mask = self.ann_principal.sum(axis=1) > 1
        mask[self.ring.zero] = False
        return mask

    def loop_mask(self):
        """Elements with ``aRa* == 0``."""
        stars = self.ring.stars
        return self.ann_principal[self.ring.elements, stars]


def annihilator_table(R):
    return R.derived('annihilators', lambda: AnnihilatorTable(R))


def _as_mask(R, B):
    if isinstance(B, ElementSet):
        return B.mask
    return ElementSet.of(R, B).mask


def right_annihilator(R, B):
    """Gets ``r(B) = {x : bx = 0 for all b in B}``; ``r({}) = R``."""
    rows = annihilator_table(R).ann_elem[_as_mask(R, B)]
    return ElementSet(R, rows.all(axis=0))


def left_annihilator(R, B):
    """Gets ``l(B) = {x : xb = 0 for all b in B}``; ``l({}) = R``."""
    rows = annihilator_table(R).ann_left[_as_mask(R, B)]
    return ElementSet(R, rows.all(axis=0))


def principal_right_ideal(R, a):
    return ElementSet(R, annihilator_table(R).principal[R.index(a)])


def right_ann_of_principal(R, a):
    """Gets ``r(aR)``."""
    return ElementSet(R, annihilator_table(R).ann_principal[R.index(a)])


def _projection_mask(R):
    def compute():
        ids = R.elements
        return (R._mul(ids, ids) == ids) & (R.stars == ids)
    return R.derived('projections', compute)


def _central_projection_mask(R):
    def compute():
        mask = _projection_mask(R).copy()
        for e in np.flatnonzero(mask):
            mask[e] = is_central(R, e)
        return mask
    return R.derived('central_projections', compute)


def projections(R, central_only=False):
    """Gets the projections ``e = e^2 = e*`` of ``R``.

    :param central_only: keep only those commuting with every element
    """
    if central_only:
        return ElementSet(R, _central_projection_mask(R))
    return ElementSet(R, _projection_mask(R))


def central_projections(R):
    return projections(R, central_only=True)


def is_central(R, a):
    a = R.index(a)
    return bool(np.array_equal(R.mul_row(a), R.mul_col(a)))


def is_ideal(R, S):
    """Tells whether ``S`` is a two-sided ideal of ``R``."""
    mask = _as_mask(R, S)
    if not mask[R.zero]:
        return False
    members = np.flatnonzero(mask)
    if not mask[R._neg(members)].all():
        return False
    size = max(1, (1 << 17) // max(1, members.size))
    for start in range(0, members.size, size):
        block = members[start:start + size]
        if not mask[R._add(block[:, None], members[None, :])].all():
            return False
    size = max(1, (1 << 17) // R.order)
    for start in range(0, members.size, size):
        block = members[start:start + size]
        if not (mask[R.mul_rows(block)].all() and
                mask[R.mul_cols(block)].all()):
            return False
    return True


def is_properly_maximal(R, a, strict=False):
    """Tells whether ``r(aR)`` is properly maximal.

    ``r(aR)`` is properly maximal when no ``b`` outside ``{0, a}`` has an
    ``r(bR)`` strictly containing it. With ``strict``, containing it at all
    (equality included) already disqualifies ``b``.
    """
    a = R.index(a)
    if a == R.zero:
        raise ValueError('Proper maximality is defined for nonzero elements')
    table = annihilator_table(R).ann_principal
    row = table[a]
    contains = ~(row[None, :] & ~table).any(axis=1)
    if not strict:
        contains &= (table != row[None, :]).any(axis=1)
    contains[[R.zero, a]] = False
    return not contains.any()


class ClassificationReport(object):
    """Which annihilator conditions ``R`` satisfies.

    Every false predicate has an entry in ``witnesses``: an ``element`` whose
    annihilator is not generated by a projection, or for Baer and quasi-Baer
    a ``subset`` whose (principal) annihilator is not.
    """
    names = ('rickart', 'baer', 'quasi_baer', 'pq_baer', 'semiproper')
    implications = (('baer', 'quasi_baer'), ('quasi_baer', 'pq_baer'),
                    ('baer', 'rickart'))

    def __init__(self, ring):
        self.ring = ring
        self.is_rickart = True
        self.is_baer = True
        self.is_quasi_baer = True
        self.is_pq_baer = True
        self.is_semiproper = True
        self.witnesses = OrderedDict()

    def fail(self, name, **witness):
        setattr(self, 'is_' + name, False)
        self.witnesses[name] = witness

    def implication_failures(self):
        """The implications between the conditions which do not hold, as
        ``'baer => rickart'`` texts; always empty on a sound
        classification."""
        return ['{0} => {1}'.format(premise, conclusion)
                for premise, conclusion in self.implications
                if getattr(self, 'is_' + premise) and
                not getattr(self, 'is_' + conclusion)]

    def as_dict(self):
        return OrderedDict((name, getattr(self, 'is_' + name))
                           for name in self.names)

    def labelled_witnesses(self):
        label = self.ring.label
        result = OrderedDict()
        for name, witness in self.witnesses.items():
            if 'element' in witness:
                result[name] = {'element': label(witness['element'])}
            else:
                result[name] = {'subset': [label(x)
                                           for x in witness['subset']]}
        return result

    def __repr__(self):
        flags = ', '.join('{0}={1}'.format(k, v)
                          for k, v in self.as_dict().items())
        return '<ClassificationReport {0}: {1}>'.format(self.ring.descriptor,
                                                       flags)


class _Generators(object):
    """Right ideals ``eR`` generated by the projections of a ring."""

    def __init__(self, R):
        table = annihilator_table(R)
        self.by_ideal = {}
        for e in projections(R).ids:
            key = np.packbits(table.principal[e]).tobytes()
            self.by_ideal.setdefault(key, int(e))

    def generator(self, mask):
        return self.by_ideal.get(np.packbits(mask).tobytes())


def _generators(R):
    return R.derived('generators', lambda: _Generators(R))


def _closure_witness(rows, generators):
    """Closes the annihilators ``rows`` under intersection.

    Gives the generating subset of the first intersection which is not of
    the form ``eR``, ``None`` when every intersection is.
    """
    family = OrderedDict()
    for a, row in enumerate(rows):
        family.setdefault(np.packbits(row).tobytes(), (row, (a,)))
    frontier = list(family.values())
    while frontier:
        fresh = []
        members = list(family.values())
        for row, source in frontier:
            for other, other_source in members:
                meet = row & other
                key = np.packbits(meet).tobytes()
                if key in family:
                    continue
                subset = tuple(sorted(set(source) | set(other_source)))
                if generators.generator(meet) is None:
                    return subset
                family[key] = (meet, subset)
                fresh.append((meet, subset))
        frontier = fresh
    return None


def classify(R):
    """Classifies ``R``.

    :rtype: ClassificationReport
    """
    return R.derived('classification', lambda: _classify(R))


def _classify(R):
    table = annihilator_table(R)
    generators = _generators(R)
    report = ClassificationReport(R)
    for name, rows in (('pq_baer', table.ann_principal),
                       ('rickart', table.ann_elem)):
        for a in range(R.order):
            if generators.generator(rows[a]) is None:
                report.fail(name, element=a)
                break
    for name, base, rows in (('quasi_baer', 'pq_baer', table.ann_principal),
                             ('baer', 'rickart', table.ann_elem)):
        if not getattr(report, 'is_' + base):
            report.fail(name, subset=(report.witnesses[base]['element'],))
            continue
        subset = _closure_witness(rows, generators)
        if subset is not None:
            report.fail(name, subset=subset)
    loops = table.loop_mask()
    loops[R.zero] = False
    loop = first_true(loops)
    if loop is not None:
        report.fail('semiproper', element=loop)
    logger.debug('Classified %r', report)
    return report


def annihilator_projection(R, a, principal=True):
    """The projection ``e`` with ``r(aR) = eR`` (``r(a) = eR`` otherwise).

    :raises LookupError: when no projection generates the annihilator
    """
    table = annihilator_table(R)
    rows = table.ann_principal if principal else table.ann_elem
    e = _generators(R).generator(rows[R.index(a)])
    if e is None:
        raise LookupError('The annihilator of {0} is not generated by a '
                          'projection'.format(R.label(R.index(a))))
    return e


def right_projection(R, a):
    """The smallest projection ``e`` with ``ae = a``, i.e. ``r(a) =
    (1 - e)R``."""
    a = R.index(a)
    e = R.sub(R.one, annihilator_projection(R, a, principal=False))
    if R.mul(a, e) != a:
        raise LookupError('No right projection for {0}'.format(R.label(a)))
    return e


def left_projection(R, a):
    """The smallest projection ``e`` with ``ea = a``, i.e. ``l(a) =
    R(1 - e)``."""
    a = R.index(a)
    left = annihilator_table(R).ann_left[a]
    for f in projections(R).ids:
        if np.array_equal(np.bincount(R.mul_col(f), minlength=R.order) > 0,
                          left):
            e = R.sub(R.one, int(f))
            if R.mul(e, a) == a:
                return e
    raise LookupError('No left projection for {0}'.format(R.label(a)))


class CentralCoverMap(object):
    """The central cover ``C(a)`` of every element of a p.q.-Baer ring.

    ``C(a)`` is the product of all central projections ``h`` with ``ha = a``.
    ``C(0)`` is 0.
    """

    def __init__(self, ring):
        self.ring = ring
        self.central = central_projections(ring).ids
        cover = np.full(ring.order, ring.one, dtype=np.int64)
        for h in self.central:
            fixes = ring.mul_row(h) == ring.elements
            cover = np.where(fixes, ring._mul(cover, h), cover)
        self.cover = cover

    def __getitem__(self, a):
        return int(self.cover[self.ring.index(a)])

    def classes(self):
        """Maps each central projection ``e`` to ``C_e = {a != 0 : C(a) =
        e}``."""
        nonzero = self.ring.elements != self.ring.zero
        return OrderedDict((int(e), ElementSet(self.ring,
                                               nonzero & (self.cover == e)))
                           for e in self.central)

    def class_of(self, e):
        return self.classes()[self.ring.index(e)]


def central_covers(R):
    """Computes the central covers of ``R``.

    :raises NoCentralCover: when ``R`` is not p.q.-Baer
    """
    if not classify(R).is_pq_baer:
        raise NoCentralCover(ring=R.descriptor, element='any element')
    return R.derived('covers', lambda: CentralCoverMap(R))


def central_cover(R, a):
    """Gets ``C(a)``, the smallest central projection ``h`` with ``ha = a``.

    :raises NoCentralCover: on rings which are not p.q.-Baer
    """
    a = R.index(a)
    if not classify(R).is_pq_baer:
        raise NoCentralCover(ring=R.descriptor, element=R.label(a))
    h = central_covers(R)[a]
    if R.mul(h, a) != a:
        raise NoCentralCover(ring=R.descriptor, element=R.label(a),
                             reason='the meet of the covering central '
                                    'projections does not cover it')
    return h


def characteristic_classes(R):
    return central_covers(R).classes()
