"""
This module gathers the settings shared by the ring constructors, the
validation routines and the corpus runner.

Settings are resolved through a ``ChainMap``: explicit overrides first, then
the process-wide overrides (set by the command line), then the environment
and finally the built-in defaults.
"""
import os
from collections import ChainMap

DEFAULTS = {
    'max_order': 2048,
    'table_order': 256,
    'triple_exhaustive_order': 64,
    'triple_samples': 10 ** 6,
    'sample_seed': 0,
    'split_cap': 2 ** 12,
}

# setting name -> environment variable
ENVIRONMENT = {
    'max_order': 'STARRING_MAX_ORDER',
}

global_overrides = {}


class ConfigurationError(ValueError):
    def __init__(self, name=None, value=None, reason=None):
        msg = 'Invalid value {0!r} for {1}: {2}'.format(value, name, reason)
        super(ConfigurationError, self).__init__(msg)


def _from_environment(environ):
    settings = {}
    for key, variable in ENVIRONMENT.items():
        raw = environ.get(variable)
        if raw is None or raw.strip() == '':
            continue
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(name=variable, value=raw,
                                     reason='expected an integer')
        if value < 1:
            raise ConfigurationError(name=variable, value=raw,
                                     reason='expected a positive integer')
        settings[key] = value
    return settings


def settings(environ=None, **overrides):
    """Gets the effective settings.

    :param environ: the environment mapping, ``os.environ`` by default
    :param overrides: explicit values taking precedence over everything else
    :return: the layered settings
    :rtype: ChainMap
    """
    environ = os.environ if environ is None else environ
    explicit = {k: v for k, v in overrides.items() if v is not None}
    return ChainMap(explicit, global_overrides,
                    _from_environment(environ), DEFAULTS)


def get(name, value=None):
    """Returns ``value`` when given, the effective setting otherwise."""
    if value is not None:
        return value
    return settings()[name]
