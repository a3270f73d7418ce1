"""The protocol of a theorem check and the registry of all checks.

A check is a :class:`Theorem`: a list of hypotheses evaluated in order, then
a conclusion evaluated only when every hypothesis is met. Checks never raise
for mathematical outcomes, everything is reported in a :class:`CheckResult`.
"""
import logging
import time
from abc import ABCMeta, abstractmethod
from collections import OrderedDict, namedtuple
from enum import Enum, unique
from ..analysis import analyse


logger = logging.getLogger(__name__)

registry = OrderedDict()


@unique
class Status(Enum):
    HOLDS = 'holds'
    VIOLATED = 'violated'
    HYPOTHESIS_NOT_MET = 'hypothesis_not_met'


class UnknownTheoremError(KeyError):
    def __init__(self, theorem_id=None):
        msg = 'Unknown theorem {0!r}, expected one of {1}' \
              .format(theorem_id, ', '.join(registry))
        super(UnknownTheoremError, self).__init__(msg)


class CheckResult(object):
    """Outcome of one theorem check on one ring.

    ``witness`` is set for violated results (the counterexample) and for
    unmet hypotheses (why the hypothesis fails). ``vacuous`` marks results
    that hold because the conclusion had nothing to quantify over;
    ``instances`` counts what it did quantify over.
    """

    def __init__(self, theorem_id, status, witness=None, hypothesis=None,
                 vacuous=False, instances=0, details=None, elapsed=0.0):
        self.id = theorem_id
        self.status = status
        self.witness = witness
        self.hypothesis = hypothesis
        self.vacuous = vacuous
        self.instances = instances
        self.details = details or {}
        self.elapsed = elapsed

    @property
    def holds(self):
        return self.status is Status.HOLDS

    @property
    def violated(self):
        return self.status is Status.VIOLATED

    @property
    def gated(self):
        return self.status is Status.HYPOTHESIS_NOT_MET

    def __repr__(self):
        text = '{0}: {1}'.format(self.id, self.status.value)
        if self.vacuous:
            text += ' (vacuous)'
        if self.hypothesis:
            text += ' ({0})'.format(self.hypothesis)
        return '<CheckResult {0}>'.format(text)


Outcome = namedtuple('Outcome', 'holds instances witness details')
Outcome.__new__.__defaults__ = (0, None, None)


def verdict(holds, instances, facts):
    """An :class:`Outcome` whose ``facts`` are the witness when it fails and
    the details when it holds."""
    return Outcome(holds, instances, None if holds else facts, facts)


class Hypothesis(object):
    """A named precondition; ``name`` says what fails when it is not met.

    ``test`` maps a :class:`~starring.analysis.RingAnalysis` to
    ``(met, witness)``.
    """

    def __init__(self, name, test):
        self.name = name
        self.test = test

    def __repr__(self):
        return '<Hypothesis {0}>'.format(self.name)


class Theorem(metaclass=ABCMeta):
    """A checkable statement about finite *-rings.

    Subclasses give:
    * id (class attribute)
    * citation (class attribute)
    * hypotheses (class attribute, a sequence of :class:`Hypothesis`)
    * conclusion (method)
    """
    id = None
    citation = None
    hypotheses = ()

    @abstractmethod
    def conclusion(self, analysis):
        """Evaluates the statement, giving an :class:`Outcome`."""

    def check(self, ring):
        start = time.perf_counter()
        analysis = analyse(ring)
        for hypothesis in self.hypotheses:
            met, witness = hypothesis.test(analysis)
            if not met:
                return CheckResult(self.id, Status.HYPOTHESIS_NOT_MET,
                                   witness=witness,
                                   hypothesis=hypothesis.name,
                                   elapsed=time.perf_counter() - start)
        outcome = self.conclusion(analysis)
        status = Status.HOLDS if outcome.holds else Status.VIOLATED
        if status is Status.VIOLATED:
            logger.warning('%s violated on %s: %s', self.id,
                           ring.descriptor, outcome.witness)
        return CheckResult(self.id, status,
                           witness=None if outcome.holds else outcome.witness,
                           vacuous=outcome.holds and outcome.instances == 0,
                           instances=outcome.instances,
                           details=outcome.details,
                           elapsed=time.perf_counter() - start)

    def __repr__(self):
        return '<Theorem {0}>'.format(self.id)


def register(cls):
    """Class decorator adding one instance of ``cls`` to the registry."""
    registry[cls.id] = cls()
    return cls


def get_theorem(theorem_id):
    try:
        return registry[theorem_id.strip().upper()]
    except KeyError:
        raise UnknownTheoremError(theorem_id)


def check(theorem_id, ring):
    """Runs the check ``theorem_id`` on ``ring``.

    :rtype: CheckResult
    """
    return get_theorem(theorem_id).check(ring)


def run_all(ring, ids=None):
    """Runs the given checks (all registered ones by default) on ``ring``."""
    ids = list(registry) if ids is None else ids
    return [check(theorem_id, ring) for theorem_id in ids]
