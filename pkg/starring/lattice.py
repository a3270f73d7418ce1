"""The lattice L(CP(R)) of central projections of a finite *-ring."""
import logging
import numpy as np
from ordered_set import OrderedSet
from .structure import central_projections


logger = logging.getLogger(__name__)


class LatticeError(ValueError):
    def __init__(self, ring=None, operation=None, left=None, right=None):
        msg = 'Central projections of {0} are not closed under {1}: {2} and ' \
              '{3}'.format(ring, operation, left, right)
        super(LatticeError, self).__init__(msg)


class CentralProjectionLattice(object):
    """Central projections ordered by ``e <= f`` iff ``e = ef = fe``.

    The meet is ``ef`` and the join ``e + f - ef``. ``meets`` and ``joins``
    are tables indexed by position in ``elements``.
    """

    def __init__(self, ring):
        self.ring = ring
        self.elements = OrderedSet(int(e) for e in
                                   central_projections(ring).ids)
        self.bottom = ring.zero
        self.top = ring.one
        ids = np.asarray(list(self.elements), dtype=np.int64)
        products = ring._mul(ids[:, None], ids[None, :])
        self.meets = self._positions(products, 'meet', ids)
        joins = ring._add(ring._add(ids[:, None], ids[None, :]),
                          ring._neg(products))
        self.joins = self._positions(joins, 'join', ids)
        self._leq = products == ids[:, None]
        self._leq &= products.T == ids[:, None]
        logger.debug('Lattice of %d central projections built for %s',
                     len(self.elements), ring.descriptor)

    def _positions(self, values, operation, ids):
        positions = np.full(values.shape, -1, dtype=np.int64)
        for i, e in enumerate(ids):
            positions[values == e] = i
        if (positions < 0).any():
            i, j = np.argwhere(positions < 0)[0]
            label = self.ring.label
            raise LatticeError(ring=self.ring.descriptor, operation=operation,
                               left=label(ids[i]), right=label(ids[j]))
        return positions

    def _position(self, e):
        return self.elements.index(self.ring.index(e))

    def leq(self, e, f):
        return bool(self._leq[self._position(e), self._position(f)])

    def meet(self, e, f):
        return self.elements[int(self.meets[self._position(e),
                                            self._position(f)])]

    def join(self, e, f):
        return self.elements[int(self.joins[self._position(e),
                                            self._position(f)])]

    def complement(self, e):
        return self.ring.sub(self.top, self.ring.index(e))

    @property
    def nontrivial(self):
        return [e for e in self.elements if e not in (self.bottom, self.top)]

    @property
    def atoms(self):
        """The minimal nonzero central projections."""
        result = []
        for i, e in enumerate(self.elements):
            if e == self.bottom:
                continue
            below = [self.elements[int(j)]
                     for j in np.flatnonzero(self._leq[:, i])]
            if all(f in (self.bottom, e) for f in below):
                result.append(e)
        return result

    def longest_chain(self, exclude_bottom=False):
        """A longest chain, listed from the bottom up."""
        size = len(self.elements)
        below = self._leq & ~np.eye(size, dtype=bool)
        order = np.argsort(below.sum(axis=0), kind='stable')
        best = {}
        for i in order:
            i = int(i)
            if exclude_bottom and self.elements[i] == self.bottom:
                continue
            chain = [i]
            for j in np.flatnonzero(below[:, i]):
                candidate = best.get(int(j))
                if candidate is not None and len(candidate) + 1 > len(chain):
                    chain = candidate + [i]
            best[i] = chain
        longest = max(best.values(), key=len, default=[])
        return [self.elements[i] for i in longest]

    def is_boolean_square(self):
        """Tells whether the lattice is the four element Boolean lattice."""
        if len(self.elements) != 4:
            return False
        e, f = self.nontrivial
        return self.meet(e, f) == self.bottom and self.join(e, f) == self.top

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self.elements

    def __repr__(self):
        return '<CentralProjectionLattice {0}: {1}>'.format(
            self.ring.descriptor,
            ', '.join(self.ring.label(e) for e in self.elements))


def cp_lattice(R):
    """Builds the lattice of central projections of ``R``.

    :raises LatticeError: when meet or join leaves the central projections
    """
    return R.derived('lattice', lambda: CentralProjectionLattice(R))
