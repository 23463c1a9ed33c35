"""
Seeded random elements of the target algebras, drawn with a `numpy.random.Generator`.
"""
from fractions import Fraction

from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.laurent import LaurentSeries
from renormalisation.targets.oscillatory import OscillatoryFn
from renormalisation.targets.polynomial import Polynomial

WIDTHS = (Fraction(0), Fraction(1, 2), Fraction(1))
ALPHAS = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(5, 2), Fraction(4))


def draw_polynomial(rng, nvars, max_degree):
    terms = {}
    for _ in range(int(rng.integers(1, 4))):
        exponent = tuple(int(e) for e in rng.integers(0, max_degree + 1, size=nvars))
        terms[exponent] = Fraction(int(rng.integers(-3, 4)))
    return Polynomial(nvars, terms)


def draw_gausspoly(rng, d_plus_1=1, integrable=False, max_degree=2):
    """A Gaussian-polynomial function with small integer coefficients; never zero."""
    widths = WIDTHS[1:] if integrable else WIDTHS
    terms = [
        (widths[int(rng.integers(len(widths)))], draw_polynomial(rng, d_plus_1, max_degree))
        for _ in range(int(rng.integers(1, 3)))
    ]
    function = GaussPolyFn(d_plus_1, terms)
    return function if function else GaussPolyFn.gaussian(d_plus_1)


def draw_laurent(rng, order=6):
    """A Laurent series with integer coefficients and poles up to t^-3."""
    return LaurentSeries(
        {int(n): int(rng.integers(-4, 5)) for n in rng.integers(-3, 4, size=4)},
        order=order,
    )


def draw_oscillatory(rng, low=0):
    """
    An oscillatory function in two frequencies with integer linear phases.

    With `low=0` every phase coefficient is non-negative, so no product of non-zero phases cancels.
    """
    function = OscillatoryFn.zero(2)
    for _ in range(int(rng.integers(1, 4))):
        coefficients = [int(c) for c in rng.integers(low, 3, size=2)]
        amplitude = draw_polynomial(rng, 1, 2)
        function = function + OscillatoryFn.linear_phase(coefficients, amplitude)
    return function


def draw_alpha(rng):
    return ALPHAS[int(rng.integers(len(ALPHAS)))]
