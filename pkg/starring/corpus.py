"""Enumeration of a corpus of small *-rings and verification of every theorem
check over it.

Rings are enumerated in a canonical order: by order, then Z_n before products
before matrix rings, then by descriptor. Rings travel to worker processes as
their specifications and results come back in that same order, so a summary
only depends on the corpus.
"""
import logging
from collections import OrderedDict, namedtuple
from itertools import combinations_with_replacement
from multiprocessing import Pool
from . import config
from .ring import Involution, check_order
from .ringspec import (Matrix, Product, Zmod, build, describe, order_of,
                       parse_ring_spec)
from .structure import classify
from .theorems import registry, run_all
from .validation import validate_star_ring


logger = logging.getLogger(__name__)

DEFAULT_FACTORS = (2, 3, 4, 5, 6, 8, 9)
DEFAULT_MATRICES = tuple(Matrix(2, Zmod(n), involution)
                         for n in (2, 3, 4, 6)
                         for involution in (Involution.IDENTITY,
                                            Involution.TRANSPOSE))

# checks whose antecedent cannot be met in a finite p.q.-Baer ring
ALWAYS_VACUOUS = ('TH-SIDE-IDEMPOTENT', 'COR-SIDE')

FAMILY_RANK = {Zmod: 0, Product: 1, Matrix: 2}


class TheoremViolation(AssertionError):
    def __init__(self, violations=()):
        rows = ', '.join('{0} on {1}'.format(result.id, descriptor)
                         for descriptor, result in violations)
        msg = '{0} theorem check(s) violated: {1}'.format(len(violations),
                                                         rows)
        super(TheoremViolation, self).__init__(msg)
        self.violations = list(violations)


def _product_spec(factors):
    *rest, last = factors
    spec = Zmod(last)
    for n in reversed(rest):
        spec = Product(Zmod(n), spec)
    return spec


def canonical_key(spec):
    return order_of(spec), FAMILY_RANK[type(spec)], describe(spec)


class CorpusSpec(object):
    """Selects the rings of a corpus.

    :param zmod_max: every Z_n with ``2 <= n <= zmod_max``
    :param product_order_max: every product of at least two ``factors``
                              (as Z_n, without repetition up to order) of
                              order at most this bound
    :param factors: the moduli of the product factors
    :param matrices: matrix ring specifications (nodes or texts)
    :param max_order: order cap of the enumeration
    """

    def __init__(self, zmod_max=100, product_order_max=256,
                 factors=DEFAULT_FACTORS, matrices=DEFAULT_MATRICES,
                 max_order=None):
        self.zmod_max = zmod_max
        self.product_order_max = product_order_max
        self.factors = tuple(sorted(set(factors)))
        self.matrices = tuple(parse_ring_spec(m) if isinstance(m, str) else m
                              for m in matrices)
        self.max_order = max_order

    def _candidates(self):
        for n in range(2, self.zmod_max + 1):
            yield Zmod(n)
        if self.factors:
            length = 2
            while min(self.factors) ** length <= self.product_order_max:
                for factors in combinations_with_replacement(self.factors,
                                                             length):
                    spec = _product_spec(factors)
                    if order_of(spec) <= self.product_order_max:
                        yield spec
                length += 1
        for spec in self.matrices:
            yield spec

    def specs(self):
        """The ring specifications in canonical order, without duplicates.

        :raises OrderLimitError: when a selected ring exceeds the order cap
        """
        max_order = config.get('max_order', self.max_order)
        unique = OrderedDict()
        for spec in self._candidates():
            descriptor = describe(spec)
            if descriptor in unique:
                continue
            check_order(order_of(spec), max_order, what=descriptor)
            unique[descriptor] = spec
        return sorted(unique.values(), key=canonical_key)

    def descriptors(self):
        return [describe(spec) for spec in self.specs()]

    def rings(self):
        max_order = config.get('max_order', self.max_order)
        for spec in self.specs():
            yield build(spec, max_order)

    def __len__(self):
        return len(self.specs())

    def __repr__(self):
        return '<CorpusSpec zmod<={0}, products<={1} over {2}, {3} matrix ' \
               'rings>'.format(self.zmod_max, self.product_order_max,
                               self.factors, len(self.matrices))


RingRow = namedtuple('RingRow',
                     'descriptor order results invalid implications')
RingRow.__doc__ = """Results of one corpus ring; ``invalid`` lists the failed
axioms when the ring was validated and ``implications`` the implications
between annihilator conditions its classification breaks."""


def verify_ring(spec, ids=None, validate=True, overrides=None):
    """Builds and verifies one ring; runs in worker processes."""
    saved = dict(config.global_overrides)
    config.global_overrides.update(overrides or {})
    try:
        ring = build(spec)
        invalid = []
        if validate:
            report = validate_star_ring(ring)
            invalid = [axiom.value for axiom in report.failures]
        results = run_all(ring, ids)
        implications = classify(ring).implication_failures()
    finally:
        config.global_overrides.clear()
        config.global_overrides.update(saved)
    for result in results:
        result.elapsed = 0.0
    return RingRow(ring.descriptor, ring.order, results, invalid,
                   implications)


def _verify_task(task):
    return verify_ring(*task)


class CorpusSummary(object):
    """Per-theorem counts of a corpus run.

    Each registered check gets a row with ``pass`` (holds with at least one
    instance), ``vacuous``, ``gated`` and ``violated`` counts.
    """
    columns = ('pass', 'vacuous', 'gated', 'violated')

    def __init__(self, ids):
        self.rings = []
        self.counts = OrderedDict((i, OrderedDict((c, 0)
                                                  for c in self.columns))
                                  for i in ids)
        self.violations = []
        self.invalid = OrderedDict()
        self.implications = OrderedDict()
        self.converses = OrderedDict()

    def add(self, row):
        self.rings.append(row.descriptor)
        if row.invalid:
            self.invalid[row.descriptor] = row.invalid
        if row.implications:
            logger.warning('Classification of %s breaks %s', row.descriptor,
                           ', '.join(row.implications))
            self.implications[row.descriptor] = row.implications
        for result in row.results:
            counts = self.counts[result.id]
            if result.violated:
                counts['violated'] += 1
                self.violations.append((row.descriptor, result))
            elif result.gated:
                counts['gated'] += 1
            elif result.vacuous:
                counts['vacuous'] += 1
            else:
                counts['pass'] += 1

    @property
    def ok(self):
        return not (self.violations or self.implications)

    def uncovered(self):
        """Checks that never held on a ring meeting their hypotheses."""
        return [theorem_id for theorem_id, counts in self.counts.items()
                if counts['pass'] == 0 and theorem_id not in ALWAYS_VACUOUS]

    def table(self):
        """The summary as text lines."""
        width = max([len('theorem')] + [len(i) for i in self.counts])
        header = 'theorem'.ljust(width) + ''.join(
            c.rjust(10) for c in self.columns)
        lines = ['rings: {0}'.format(len(self.rings)), header]
        for theorem_id, counts in self.counts.items():
            lines.append(theorem_id.ljust(width) + ''.join(
                str(counts[c]).rjust(10) for c in self.columns))
        for descriptor, result in self.violations:
            lines.append('VIOLATED {0} on {1}: {2}'.format(
                result.id, descriptor, result.witness))
        for descriptor, broken in self.implications.items():
            lines.append('IMPLICATION {0}: {1}'.format(descriptor,
                                                       ', '.join(broken)))
        for descriptor, failures in self.invalid.items():
            lines.append('INVALID {0}: {1}'.format(descriptor,
                                                   ', '.join(failures)))
        for converse_id, found in self.converses.items():
            if found is None:
                lines.append('converse {0}: none found'.format(converse_id))
            else:
                lines.append('converse {0}: {1} {2}'.format(
                    converse_id, found.descriptor, found.witness))
        return lines

    def __str__(self):
        return '\n'.join(self.table())

    def __repr__(self):
        return '<CorpusSummary {0} rings, {1} violated>'.format(
            len(self.rings), len(self.violations))


def run_corpus(corpus=None, jobs=1, ids=None, validate=True, strict=False):
    """Verifies every registered check on every ring of ``corpus``.

    :param corpus: a :class:`CorpusSpec`, the default corpus when ``None``
    :param jobs: number of worker processes
    :param ids: the checks to run, all registered ones by default
    :param validate: also validate the *-ring axioms of each ring
    :param strict: raise on violated rows instead of reporting them
    :rtype: CorpusSummary
    :raises TheoremViolation: with ``strict`` when any check is violated
    """
    corpus = CorpusSpec() if corpus is None else corpus
    ids = list(registry) if ids is None else list(ids)
    overrides = dict(config.global_overrides)
    if corpus.max_order is not None:
        overrides['max_order'] = corpus.max_order
    specs = corpus.specs()
    tasks = [(spec, ids, validate, overrides) for spec in specs]
    summary = CorpusSummary(ids)
    logger.info('Verifying %d checks on %d rings with %d job(s)', len(ids),
                len(specs), jobs)
    if jobs > 1:
        with Pool(jobs) as pool:
            rows = pool.imap(_verify_task, tasks)
            for index, row in enumerate(rows, 1):
                _collect(summary, row, index, len(tasks))
    else:
        for index, task in enumerate(tasks, 1):
            _collect(summary, _verify_task(task), index, len(tasks))
    if strict and summary.violations:
        raise TheoremViolation(summary.violations)
    return summary


def _collect(summary, row, index, total):
    summary.add(row)
    logger.info('[%d/%d] %s verified', index, total, row.descriptor)
