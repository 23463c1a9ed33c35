from fractions import Fraction

import numpy as np
import pytest

from renormalisation.trees.decorations import EdgeType, Scaling
from renormalisation.trees.grammar import parse_forest, parse_tree


@pytest.fixture
def scaling():
    """Fixture with d+1 = 1, s = (1), |t| = 2, |u| = 3/2 and |l| = -3/2."""
    return Scaling(
        d_plus_1=1,
        s=(1,),
        types=(
            EdgeType('t', Fraction(2), 'kernel'),
            EdgeType('u', Fraction(3, 2), 'kernel'),
            EdgeType('l', Fraction(-3, 2), 'noise'),
        ),
    )


@pytest.fixture
def generic_scaling():
    """Fixture with generic degrees (|l| = -3/2 - 1/100), so no |l|_s hits a degree exactly."""
    return Scaling.default()


@pytest.fixture
def negative_scaling():
    """Fixture with |t| = 2 and |l| = -5/2, used by the negative renormalisation examples."""
    return Scaling(
        d_plus_1=1,
        s=(1,),
        types=(
            EdgeType('t', Fraction(2), 'kernel'),
            EdgeType('l', Fraction(-5, 2), 'noise'),
        ),
    )


@pytest.fixture
def parabolic_scaling():
    """Fixture with d+1 = 2 and the parabolic scaling (2, 1)."""
    return Scaling(
        d_plus_1=2,
        s=(2, 1),
        types=(
            EdgeType('t', Fraction(2), 'kernel'),
            EdgeType('l', Fraction(-301, 100), 'noise'),
        ),
    )


@pytest.fixture
def rng():
    """Fixture with a seeded numpy generator."""
    return np.random.default_rng(7)


@pytest.fixture
def tree(scaling):
    """Fixture returning a parser bound to the `scaling` fixture."""
    return lambda text: parse_tree(text, scaling)


@pytest.fixture
def forest(scaling):
    """Fixture returning a forest parser bound to the `scaling` fixture."""
    return lambda text: parse_forest(text, scaling)
