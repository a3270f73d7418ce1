"""This module is the heart of starring. It defines the finite unital rings
with involution the rest of the package works on:

* ZmodRing, the residue rings Z_n
* ProductRing, direct products with the componentwise involution
* MatrixRing, full matrix rings over a commutative base

Elements are addressed by dense integer ids in ``[0, order)``. Operations are
not stored as tables: each ring computes them from its structural formula
(residue, tuple or matrix arithmetic) on numpy arrays of ids, so a single call
can multiply a whole row of elements at once. A full multiplication table is
materialised lazily for small rings only.

Zero always gets the id 0.
"""
import logging
from enum import Enum, unique
import numpy as np
from . import config
from .innerutils import as_ids, unwrap


logger = logging.getLogger(__name__)


class OrderLimitError(ValueError):
    def __init__(self, order=None, limit=None, what='ring'):
        msg = 'Order {0} of {1} exceeds the configured maximum {2}' \
              .format(order, what, limit)
        super(OrderLimitError, self).__init__(msg)
        self.order = order
        self.limit = limit


class NonCommutativeBaseError(TypeError):
    def __init__(self, base=None):
        msg = 'Matrix rings require a commutative base ring, got {0}' \
              .format(base)
        super(NonCommutativeBaseError, self).__init__(msg)


class InvolutionError(ValueError):
    def __init__(self, got=None, allowed=()):
        msg = 'Involution {0!r} is not offered here, expected one of {1}' \
              .format(got, ', '.join(i.value for i in allowed))
        super(InvolutionError, self).__init__(msg)


class UnknownElementError(KeyError):
    def __init__(self, value=None, ring=None):
        msg = '{0!r} is not an element of {1}'.format(value, ring)
        super(UnknownElementError, self).__init__(msg)


@unique
class Involution(Enum):
    IDENTITY = 'id'
    TRANSPOSE = 'transpose'
    COMPONENTWISE = 'componentwise'

    @classmethod
    def from_tag(cls, tag):
        if isinstance(tag, cls):
            return tag
        text = str(tag).strip().lower()
        if text == 'identity':
            return cls.IDENTITY
        try:
            return cls(text)
        except ValueError:
            raise InvolutionError(got=tag, allowed=tuple(cls))


def check_order(order, max_order=None, what='ring'):
    limit = config.get('max_order', max_order)
    if order > limit:
        raise OrderLimitError(order=order, limit=limit, what=what)
    return order


class FiniteStarRing(object):
    """A finite unital ring with an involution ``a -> a*``.

    Concrete rings implement ``_add``, ``_mul``, ``_neg`` and ``_star`` on
    numpy arrays of ids (broadcasting like numpy operators). The public
    ``add``, ``mul``, ``neg`` and ``star`` accept ids or arrays of ids and
    give back plain ints for scalar inputs.

    ``involution_proper`` is ``True`` when the involution is an
    anti-automorphism. Pseudo-involutions (the identity map on a
    noncommutative matrix ring) set it to ``False`` and keep a witness pair
    ``(x, y)`` with ``(xy)* != y*x*`` in ``involution_defect``.
    """
    zero = 0

    def __init__(self, order, involution, involution_proper=True,
                 involution_defect=None):
        self.order = int(order)
        self.involution = involution
        self.involution_proper = involution_proper
        self.involution_defect = involution_defect
        self.elements = np.arange(self.order, dtype=np.int64)
        self._table = None
        self._labels = None
        self._label_index = None
        self._derived = {}

    # structural operations, overridden by concrete rings
    def _add(self, a, b):
        raise NotImplementedError()

    def _mul(self, a, b):
        raise NotImplementedError()

    def _neg(self, a):
        raise NotImplementedError()

    def _star(self, a):
        raise NotImplementedError()

    def _label(self, a):
        raise NotImplementedError()

    def _encode(self, value):
        raise NotImplementedError()

    @property
    def one(self):
        raise NotImplementedError()

    @property
    def descriptor(self):
        raise NotImplementedError()

    def add(self, a, b):
        return unwrap(self._add(as_ids(a), as_ids(b)))

    def mul(self, *operands):
        """Multiplies the operands from left to right."""
        if not operands:
            return self.one
        result = as_ids(operands[0])
        for operand in operands[1:]:
            result = self._mul(result, as_ids(operand))
        return unwrap(result)

    def neg(self, a):
        return unwrap(self._neg(as_ids(a)))

    def sub(self, a, b):
        b = as_ids(b)
        return unwrap(self._add(as_ids(a), self._neg(b)))

    def star(self, a):
        return unwrap(self._star(as_ids(a)))

    @property
    def stars(self):
        """The involution as an array indexed by id."""
        return self.derived('stars', lambda: self._star(self.elements))

    @property
    def table(self):
        """The full multiplication table, ``None`` above ``table_order``."""
        if self._table is None and self.order <= config.get('table_order'):
            logger.debug('Materialising the %d x %d table of %s',
                         self.order, self.order, self.descriptor)
            self._table = self._mul(self.elements[:, None],
                                    self.elements[None, :])
        return self._table

    def mul_row(self, a):
        """All products ``a * x``, indexed by ``x``."""
        return self.mul_rows([a])[0]

    def mul_col(self, b):
        """All products ``x * b``, indexed by ``x``."""
        return self.mul_cols([b])[0]

    def mul_rows(self, ids):
        ids = as_ids(ids)
        table = self.table
        if table is not None:
            return table[ids]
        return self._mul(ids[:, None], self.elements[None, :])

    def mul_cols(self, ids):
        ids = as_ids(ids)
        table = self.table
        if table is not None:
            return table[:, ids].T
        return self._mul(self.elements[None, :], ids[:, None])

    def chunks(self, size=None):
        """Splits the ids in blocks of rows sized for ``order``-wide work."""
        size = size or max(1, (1 << 17) // self.order)
        for start in range(0, self.order, size):
            yield self.elements[start:start + size]

    def derived(self, key, factory):
        """Caches a value derived from this (immutable) ring."""
        try:
            return self._derived[key]
        except KeyError:
            value = self._derived[key] = factory()
            return value

    @property
    def characteristic(self):
        """The additive order of the unit."""
        def compute():
            count, current = 1, self.one
            while current != self.zero:
                current = self.add(current, self.one)
                count += 1
            return count
        return self.derived('characteristic', compute)

    def is_commutative(self):
        def compute():
            for ids in self.chunks():
                if not np.array_equal(self.mul_rows(ids), self.mul_cols(ids)):
                    return False
            return True
        return self.derived('commutative', compute)

    @property
    def labels(self):
        if self._labels is None:
            self._labels = [self._label(a) for a in range(self.order)]
        return self._labels

    def label(self, a):
        return self.labels[int(a)]

    def element(self, value):
        """Finds the id of an element from its label or structural value.

        Labels are matched ignoring whitespace, so ``'(1, 0)'`` and
        ``'(1,0)'`` designate the same element. Structural values are
        residues for Z_n, (possibly flattened) tuples for products and
        row lists for matrices.

        :raises UnknownElementError: when nothing in the ring matches
        """
        if isinstance(value, str):
            if self._label_index is None:
                self._label_index = {_normalise(label): i
                                     for i, label in enumerate(self.labels)}
            try:
                return self._label_index[_normalise(value)]
            except KeyError:
                raise UnknownElementError(value=value, ring=self)
        try:
            return int(self._encode(value))
        except (TypeError, ValueError, IndexError):
            raise UnknownElementError(value=value, ring=self)

    def index(self, value):
        if isinstance(value, (int, np.integer)) and 0 <= value < self.order:
            return int(value)
        return self.element(value)

    @property
    def leaf_count(self):
        return 1

    @property
    def spec(self):
        """The ring specification rebuilding this ring."""
        from .ringspec import spec_of
        return spec_of(self)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self):
        return '<{0} {1} order={2}>'.format(self.__class__.__name__,
                                            self.descriptor, self.order)

    def __str__(self):
        return self.descriptor


def _normalise(text):
    return ''.join(text.split()).lower()


class ZmodRing(FiniteStarRing):
    """The residue ring Z_n, with the identity involution."""

    def __init__(self, n):
        super(ZmodRing, self).__init__(n, Involution.IDENTITY)
        self.n = n

    @property
    def one(self):
        return 1

    @property
    def descriptor(self):
        return 'Z{0}'.format(self.n)

    def _add(self, a, b):
        return (a + b) % self.n

    def _mul(self, a, b):
        return (a * b) % self.n

    def _neg(self, a):
        return (-a) % self.n

    def _star(self, a):
        return a

    def _label(self, a):
        return str(a)

    def _encode(self, value):
        return int(value) % self.n


class ProductRing(FiniteStarRing):
    """The direct product ``left x right``.

    The id of ``(x1, x2)`` is ``x1 * right.order + x2``, so labels come out
    in lexicographic order of the components.
    """

    def __init__(self, left, right):
        proper = left.involution_proper and right.involution_proper
        defect = None
        if not proper:
            defect = self._lift_defect(left, right)
        super(ProductRing, self).__init__(left.order * right.order,
                                          Involution.COMPONENTWISE,
                                          involution_proper=proper,
                                          involution_defect=defect)
        self.left = left
        self.right = right

    @staticmethod
    def _lift_defect(left, right):
        if not left.involution_proper:
            x, y = left.involution_defect
            return x * right.order, y * right.order
        x, y = right.involution_defect
        return x, y

    def split(self, a):
        return np.divmod(a, self.right.order)

    def combine(self, x1, x2):
        return x1 * self.right.order + x2

    @property
    def one(self):
        return self.combine(self.left.one, self.right.one)

    @property
    def descriptor(self):
        return '{0} x {1}'.format(self.left.descriptor,
                                  self.right.descriptor)

    @property
    def leaf_count(self):
        return self.left.leaf_count + self.right.leaf_count

    def _add(self, a, b):
        a1, a2 = self.split(a)
        b1, b2 = self.split(b)
        return self.combine(self.left._add(a1, b1), self.right._add(a2, b2))

    def _mul(self, a, b):
        a1, a2 = self.split(a)
        b1, b2 = self.split(b)
        return self.combine(self.left._mul(a1, b1), self.right._mul(a2, b2))

    def _neg(self, a):
        a1, a2 = self.split(a)
        return self.combine(self.left._neg(a1), self.right._neg(a2))

    def _star(self, a):
        a1, a2 = self.split(a)
        return self.combine(self.left._star(a1), self.right._star(a2))

    def leaf_labels(self, a):
        parts = []
        for ring, x in zip((self.left, self.right), self.split(int(a))):
            if isinstance(ring, ProductRing):
                parts.extend(ring.leaf_labels(x))
            else:
                parts.append(ring.label(x))
        return parts

    def _label(self, a):
        return '({0})'.format(','.join(self.leaf_labels(a)))

    def _encode(self, value):
        value = tuple(value)
        width = self.left.leaf_count
        if len(value) == self.leaf_count and self.leaf_count != 2:
            left = value[0] if width == 1 else value[:width]
            right = value[width] if self.right.leaf_count == 1 \
                else value[width:]
        elif len(value) == 2:
            left, right = value
        else:
            raise ValueError(value)
        return self.combine(self.left.element(left),
                            self.right.element(right))


class MatrixRing(FiniteStarRing):
    """The full ring of ``k x k`` matrices over a commutative base.

    A matrix is stored as the mixed-radix number of its entries read row by
    row, most significant first, so the zero matrix gets the id 0.
    """

    def __init__(self, base, k, involution):
        self.base = base
        self.k = k
        size = k * k
        self.powers = base.order ** np.arange(size - 1, -1, -1,
                                              dtype=np.int64)
        proper, defect = True, None
        if involution is Involution.TRANSPOSE:
            proper = base.involution_proper
            defect = None if proper else base.involution_defect
        elif k > 1:
            proper = False
            defect = (self.unit(0, 1), self.unit(1, 0))
        super(MatrixRing, self).__init__(base.order ** size, involution,
                                         involution_proper=proper,
                                         involution_defect=defect)

    def unit(self, i, j):
        """The matrix unit E_ij."""
        entries = np.zeros(self.k * self.k, dtype=np.int64)
        entries[i * self.k + j] = self.base.one
        return int(entries @ self.powers)

    def decode(self, a):
        digits = (np.asarray(a)[..., None] // self.powers) % self.base.order
        return digits.reshape(np.shape(a) + (self.k, self.k))

    def encode(self, matrices):
        flat = matrices.reshape(matrices.shape[:-2] + (self.k * self.k,))
        return flat @ self.powers

    @property
    def one(self):
        return self.scalar(self.base.one)

    def scalar(self, x):
        """The scalar matrix ``x * I``."""
        return int(self.encode(np.eye(self.k, dtype=np.int64) * x))

    @property
    def descriptor(self):
        return 'M{0}({1})@{2}'.format(self.k, self.base.descriptor,
                                      self.involution.value)

    def _add(self, a, b):
        return self.encode(self.base._add(self.decode(a), self.decode(b)))

    def _neg(self, a):
        return self.encode(self.base._neg(self.decode(a)))

    def _mul(self, a, b):
        left = self.decode(a)[..., :, :, None]
        right = self.decode(b)[..., None, :, :]
        terms = self.base._mul(left, right)
        total = terms[..., :, 0, :]
        for j in range(1, self.k):
            total = self.base._add(total, terms[..., :, j, :])
        return self.encode(total)

    def _star(self, a):
        if self.involution is Involution.IDENTITY:
            return np.asarray(a)
        entries = np.swapaxes(self.decode(a), -1, -2)
        return self.encode(self.base._star(entries))

    def _label(self, a):
        rows = self.decode(a)
        label = self.base.label
        return '[{0}]'.format(','.join(
            '[{0}]'.format(','.join(label(x) for x in row)) for row in rows))

    def _encode(self, value):
        rows = list(value)
        if len(rows) != self.k:
            raise ValueError(value)
        entries = []
        for row in rows:
            row = list(row)
            if len(row) != self.k:
                raise ValueError(value)
            entries.extend(self.base.element(x) for x in row)
        return int(np.asarray(entries, dtype=np.int64) @ self.powers)


def make_zmod(n, involution=Involution.IDENTITY, max_order=None):
    """Builds Z_n with the identity involution.

    :param n: the modulus, at least 2
    :raises OrderLimitError: when ``n`` exceeds the configured maximum
    """
    if Involution.from_tag(involution) is not Involution.IDENTITY:
        raise InvolutionError(got=involution, allowed=(Involution.IDENTITY,))
    if n < 2:
        raise ValueError('Z_n requires n >= 2, got {0}'.format(n))
    check_order(n, max_order)
    ring = ZmodRing(n)
    logger.debug('Built %s', ring.descriptor)
    return ring


def make_product(left, right, *others, **kwargs):
    """Builds the direct product of the given rings, nested to the right.

    ``make_product(A, B, C)`` is ``make_product(A, make_product(B, C))``.
    """
    max_order = kwargs.pop('max_order', None)
    rings = (left, right) + others
    check_order(int(np.prod([r.order for r in rings], dtype=object)),
                max_order)
    ring = rings[-1]
    for factor in reversed(rings[:-1]):
        ring = ProductRing(factor, ring)
    logger.debug('Built %s', ring.descriptor)
    return ring


def make_matrix_ring(base, k, involution=Involution.TRANSPOSE,
                     max_order=None):
    """Builds the ring of ``k x k`` matrices over ``base``.

    With the ``transpose`` tag the involution is the transpose with entries
    mapped by the base involution. The ``id`` tag uses the identity map,
    which is only an anti-automorphism for ``k == 1``: the resulting ring is
    flagged with ``involution_proper = False``.

    :raises NonCommutativeBaseError: when ``base`` is not commutative
    :raises OrderLimitError: when ``base.order ** (k * k)`` is too large
    """
    involution = Involution.from_tag(involution)
    if involution not in (Involution.TRANSPOSE, Involution.IDENTITY):
        raise InvolutionError(got=involution,
                              allowed=(Involution.TRANSPOSE,
                                       Involution.IDENTITY))
    if k < 1:
        raise ValueError('Matrix size must be positive, got {0}'.format(k))
    check_order(base.order ** (k * k), max_order)
    if not base.is_commutative():
        raise NonCommutativeBaseError(base=base.descriptor)
    ring = MatrixRing(base, k, involution)
    if not ring.involution_proper:
        logger.warning('%s: the involution is not an anti-automorphism, '
                       'adjacency will be symmetrised', ring.descriptor)
    logger.debug('Built %s', ring.descriptor)
    return ring
