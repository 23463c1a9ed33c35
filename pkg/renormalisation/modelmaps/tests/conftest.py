import pytest

from renormalisation.modelmaps.kernels import KernelAssignment, canonical_pi
from renormalisation.modelmaps.model import build_model
from renormalisation.modelmaps.recursive import RecursiveModel
from renormalisation.trees.enumeration import enumerate_trees, positive_part
from renormalisation.trees.grammar import parse_tree

XBAR = (-1.0,)


@pytest.fixture
def assignment(generic_scaling):
    """Fixture with Gaussian kernels and noises for the default scaling."""
    return KernelAssignment.default(generic_scaling)


@pytest.fixture
def model(assignment, generic_scaling):
    """Fixture with the model of Pi^(x-bar) at x-bar = -1."""
    return build_model(canonical_pi(assignment, XBAR, generic_scaling), generic_scaling)


@pytest.fixture
def recursive(assignment, generic_scaling):
    """Fixture with the recursive formulation over the same kernels."""
    return RecursiveModel(assignment, generic_scaling)


@pytest.fixture
def generic_tree(generic_scaling):
    """Fixture returning a parser bound to the `generic_scaling` fixture."""
    return lambda text: parse_tree(text, generic_scaling)


@pytest.fixture
def small_trees(generic_scaling):
    """Fixture with the non-unit trees with at most 2 edges and |n|_s <= 1 at every node."""
    return [tree for tree in enumerate_trees(generic_scaling, 2, node_norm=1) if not tree.is_unit]


@pytest.fixture
def planted_positive(generic_scaling):
    """Fixture with the positive planted trees with at most 3 edges."""
    trees = enumerate_trees(generic_scaling, 3, node_norm=1, root_norm=0)
    return [tree for tree in positive_part(trees, generic_scaling) if tree.is_planted]
