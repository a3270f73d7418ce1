"""Axiom checks for finite *-rings.

Unary and binary axioms are always checked exhaustively. Axioms over triples
are exhaustive up to ``triple_exhaustive_order`` and checked on
``triple_samples`` uniformly drawn triples above it. Sampling uses a seeded
generator, so two runs give the same report.
"""
import logging
from collections import OrderedDict
from enum import Enum, unique
import numpy as np
from . import config


logger = logging.getLogger(__name__)

_SAMPLE_BATCH = 1 << 16


@unique
class Axiom(Enum):
    ADDITIVE_GROUP = 'additive_group'
    ASSOCIATIVITY = 'associativity'
    DISTRIBUTIVITY = 'distributivity'
    IDENTITY = 'identity'
    STAR_ADDITIVITY = 'star_additivity'
    STAR_PERIOD_TWO = 'star_period_two'
    STAR_ANTI_MULTIPLICATIVITY = 'star_anti_multiplicativity'


def _checks(R):
    add, mul, neg, star = R._add, R._mul, R._neg, R._star
    zero, one = R.zero, R.one
    return (
        (Axiom.ADDITIVE_GROUP, 1,
         lambda a: (add(a, zero) == a) & (add(a, neg(a)) == zero)),
        (Axiom.ADDITIVE_GROUP, 2, lambda a, b: add(a, b) == add(b, a)),
        (Axiom.IDENTITY, 1,
         lambda a: (mul(a, one) == a) & (mul(one, a) == a)),
        (Axiom.STAR_PERIOD_TWO, 1, lambda a: star(star(a)) == a),
        (Axiom.STAR_ADDITIVITY, 2,
         lambda a, b: star(add(a, b)) == add(star(a), star(b))),
        (Axiom.STAR_ANTI_MULTIPLICATIVITY, 2,
         lambda a, b: star(mul(a, b)) == mul(star(b), star(a))),
        (Axiom.ADDITIVE_GROUP, 3,
         lambda a, b, c: add(add(a, b), c) == add(a, add(b, c))),
        (Axiom.ASSOCIATIVITY, 3,
         lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c))),
        (Axiom.DISTRIBUTIVITY, 3,
         lambda a, b, c: (mul(a, add(b, c)) == add(mul(a, b), mul(a, c))) &
                         (mul(add(a, b), c) == add(mul(a, c), mul(b, c)))),
    )


class ValidationReport(object):
    """Outcome of :func:`validate_star_ring`.

    ``results`` maps every :class:`Axiom` to a boolean, ``witnesses`` maps
    each failed axiom to the first failing tuple of element ids.
    """

    def __init__(self, ring, exhaustive, samples):
        self.ring = ring
        self.results = OrderedDict((axiom, True) for axiom in Axiom)
        self.witnesses = OrderedDict()
        self.exhaustive = exhaustive
        self.samples = samples
        self._predicates = {}

    @property
    def ok(self):
        return all(self.results.values())

    @property
    def failures(self):
        return [axiom for axiom, passed in self.results.items() if not passed]

    def _record(self, axiom, predicate, witness):
        if not self.results[axiom]:
            return
        self.results[axiom] = False
        self.witnesses[axiom] = tuple(int(x) for x in witness)
        self._predicates[axiom] = predicate

    def replay(self, axiom):
        """Re-evaluates the recorded witness, ``True`` if it still fails."""
        witness = self.witnesses[axiom]
        predicate = self._predicates[axiom]
        return not bool(predicate(*(np.int64(x) for x in witness)))

    def labelled_witnesses(self):
        label = self.ring.label
        return OrderedDict((axiom.value, [label(x) for x in witness])
                           for axiom, witness in self.witnesses.items())

    def __repr__(self):
        return '<ValidationReport {0}: {1}>'.format(
            self.ring.descriptor,
            'ok' if self.ok else ', '.join(a.value for a in self.failures))


def _first_failure(ok, *axes):
    index = np.argwhere(~ok)[0]
    return tuple(axis[i] for axis, i in zip(axes, index))


def _unary(R, predicate):
    ok = np.broadcast_to(predicate(R.elements), R.elements.shape)
    if not ok.all():
        return _first_failure(ok, R.elements)


def _binary(R, predicate):
    for ids in R.chunks():
        ok = predicate(ids[:, None], R.elements[None, :])
        if not ok.all():
            return _first_failure(ok, ids, R.elements)


def _ternary_exhaustive(R, predicate):
    b = np.repeat(R.elements, R.order)
    c = np.tile(R.elements, R.order)
    for a in R.elements:
        ok = predicate(a, b, c)
        if not ok.all():
            i = int(np.flatnonzero(~ok)[0])
            return a, b[i], c[i]


def _ternary_sampled(R, predicate, samples, seed):
    generator = np.random.default_rng(seed)
    remaining = samples
    while remaining > 0:
        size = min(remaining, _SAMPLE_BATCH)
        a, b, c = generator.integers(0, R.order, size=(3, size))
        ok = predicate(a, b, c)
        if not ok.all():
            i = int(np.flatnonzero(~ok)[0])
            return a[i], b[i], c[i]
        remaining -= size


def validate_star_ring(R, exhaustive_order=None, samples=None, seed=None):
    """Checks the ring and involution axioms of ``R``.

    :param exhaustive_order: largest order checked on all triples
    :param samples: number of sampled triples above ``exhaustive_order``
    :param seed: seed of the triple sampler
    :return: a report carrying the results and the failing witnesses
    :rtype: ValidationReport
    """
    exhaustive_order = config.get('triple_exhaustive_order', exhaustive_order)
    samples = config.get('triple_samples', samples)
    seed = config.get('sample_seed', seed)
    exhaustive = R.order <= exhaustive_order
    report = ValidationReport(R, exhaustive, 0 if exhaustive else samples)
    for axiom, arity, predicate in _checks(R):
        if not report.results[axiom]:
            continue
        if arity == 1:
            witness = _unary(R, predicate)
        elif arity == 2:
            witness = _binary(R, predicate)
        elif exhaustive:
            witness = _ternary_exhaustive(R, predicate)
        else:
            witness = _ternary_sampled(R, predicate, samples, seed)
        if witness is not None:
            report._record(axiom, predicate, witness)
    logger.debug('Validated %r', report)
    return report
