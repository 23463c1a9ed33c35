from fractions import Fraction

from django.conf import settings

DEFAULTS = {
    'DEFAULT_SCALING': {
        'd_plus_1': 1,
        's': [1],
        'types': [
            {'name': 't', 'degree': '2', 'kind': 'kernel'},
            {'name': 'u', 'degree': '3/2', 'kind': 'kernel'},
            {'name': 'l', 'degree': '-151/100', 'kind': 'noise'},
        ],
    },
    'LAURENT_ORDER': 10,
    'RTOL': 1e-9,
    'ATOL': 1e-12,
    'MODEL_TOLERANCE': 1e-8,
    'DEFAULT_SEED': 7,
    'DEFAULT_CUTOFF': '4',
    'SAMPLE_GRID': ['-1', '-1/2', '0', '1/2', '1'],
    'MAX_EDGES': 4,
    'MODEL_MAX_EDGES': 5,
}


def get_setting(name):
    """
    Read a value of the `RENORMALISATION` setting, falling back to the package default.
    """
    overrides = getattr(settings, 'RENORMALISATION', {})
    if name in overrides:
        return overrides[name]
    return DEFAULTS[name]


def tolerances():
    """Return the (rtol, atol) pair used for floating point comparisons."""
    return float(get_setting('RTOL')), float(get_setting('ATOL'))


def sample_grid():
    """Return the one dimensional sample grid as exact fractions."""
    return [Fraction(value) for value in get_setting('SAMPLE_GRID')]
