import pytest

from renormalisation.targets.sampling import draw_gausspoly, draw_laurent, draw_oscillatory


@pytest.fixture
def random_gausspoly(rng):
    """Fixture drawing Gaussian-polynomial functions with small integer coefficients."""
    return lambda d_plus_1=1, integrable=False, max_degree=2: draw_gausspoly(rng, d_plus_1, integrable, max_degree)


@pytest.fixture
def random_laurent(rng):
    """Fixture drawing Laurent series with integer coefficients and poles up to t^-3."""
    return lambda order=6: draw_laurent(rng, order)


@pytest.fixture
def random_oscillatory(rng):
    """
    Fixture drawing oscillatory functions in two frequencies with integer linear phases.

    By default the phase coefficients are non-negative, so no product of non-zero phases cancels.
    """
    return lambda low=0: draw_oscillatory(rng, low)
