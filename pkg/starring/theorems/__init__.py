"""Theorem checks on finite *-rings.

Importing this package registers every check; ``registry`` maps check ids to
their :class:`Theorem` in declaration order.
"""
from .theorem import (CheckResult, Hypothesis, Outcome, Status, Theorem,
                      UnknownTheoremError, check, get_theorem, register,
                      registry, run_all, verdict)
from . import sections  # noqa: F401
from .converses import (ConverseWitness, UnknownConverseError, converses,
                        find_converse_counterexample, get_converse)

__all__ = ['CheckResult', 'Hypothesis', 'Outcome', 'Status', 'Theorem',
           'UnknownTheoremError', 'check', 'get_theorem', 'register',
           'registry', 'run_all', 'verdict', 'ConverseWitness',
           'UnknownConverseError', 'converses', 'find_converse_counterexample',
           'get_converse']
