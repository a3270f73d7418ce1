"""
This module gives the functions and constants shared among the different
modules.
"""
import numpy as np

INFINITY = float('inf')


def unwrap(value):
    """Turns 0-d numpy results back into plain ints."""
    if np.ndim(value) == 0:
        return int(value)
    return value


def as_ids(values):
    return np.asarray(values, dtype=np.int64)


def first_true(mask):
    """Index of the first ``True`` of a boolean array, ``None`` if none."""
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def number_text(value):
    if value is None:
        return 'undefined'
    if value == INFINITY:
        return 'infinity'
    return str(value)
