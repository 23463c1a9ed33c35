import pytest

from renormalisation.modelmaps.kernels import KernelAssignment, canonical_pi
from renormalisation.negative.bogoliubov import lifted_character
from renormalisation.negative.checks import is_zero_decorated
from renormalisation.negative.coaction import default_coaction
from renormalisation.trees.enumeration import enumerate_trees
from renormalisation.trees.grammar import parse_forest, parse_tree


@pytest.fixture
def neg_tree(negative_scaling):
    """Fixture returning a parser bound to the `negative_scaling` fixture."""
    return lambda text: parse_tree(text, negative_scaling)


@pytest.fixture
def neg_forest(negative_scaling):
    """Fixture returning a forest parser bound to the `negative_scaling` fixture."""
    return lambda text: parse_forest(text, negative_scaling)


@pytest.fixture
def coaction(negative_scaling):
    """Fixture with the extraction-contraction coaction."""
    return default_coaction(negative_scaling)


@pytest.fixture
def pi(negative_scaling):
    """Fixture with Pi for Gaussian kernels and noises, recentred at the origin."""
    return canonical_pi(KernelAssignment.default(negative_scaling), (0.0,), negative_scaling)


@pytest.fixture
def psi(pi):
    """Fixture with Pi lifted to forests of symmetrised tensors."""
    return lifted_character(pi)


@pytest.fixture
def plain_trees(negative_scaling):
    """Fixture with the non-unit trees without decorations with at most 3 edges."""
    return [tree for tree in enumerate_trees(negative_scaling, 3) if not tree.is_unit]


@pytest.fixture
def decorated_trees(negative_scaling):
    """Fixture with the trees with at most 2 edges that carry X on at least one vertex."""
    return [tree for tree in enumerate_trees(negative_scaling, 2, node_norm=1)
            if not tree.is_unit and not is_zero_decorated(tree)]
