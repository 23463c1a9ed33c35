from fractions import Fraction

import pytest

from renormalisation.birkhoff.characters import TREE_PRODUCT, Character
from renormalisation.hopf.ck import CK_SCALING
from renormalisation.modelmaps.kernels import KernelAssignment, canonical_family
from renormalisation.targets.algebras import laurent_algebra, scalar_algebra
from renormalisation.trees.enumeration import enumerate_trees, positive_part

LAURENT_ORDER = 10


@pytest.fixture
def laurent():
    """Fixture with Laurent series truncated above t^10."""
    return laurent_algebra(LAURENT_ORDER)


@pytest.fixture
def ck_trees():
    """Fixture with every plain rooted tree with at most 6 vertices, the single vertex included."""
    return enumerate_trees(CK_SCALING, 5)


@pytest.fixture
def small_ck_trees():
    """Fixture with every plain rooted tree with at most 4 vertices."""
    return enumerate_trees(CK_SCALING, 3)


@pytest.fixture
def family(generic_scaling):
    """Fixture with the canonical family x-bar -> Pi^(x-bar) for Gaussian kernels and noises."""
    return canonical_family(KernelAssignment.default(generic_scaling), generic_scaling)


@pytest.fixture
def positive_trees(generic_scaling):
    """Fixture with the non-unit trees of the positive part with at most 3 edges."""
    trees = enumerate_trees(generic_scaling, 3, node_norm=1, root_norm=1)
    return [tree for tree in positive_part(trees, generic_scaling) if not tree.is_unit]


@pytest.fixture
def rooted_positive_trees(generic_scaling):
    """Fixture with the positive trees with at most 3 edges, no root polynomial and no X leaves."""
    trees = enumerate_trees(generic_scaling, 3, root_norm=0)
    return [tree for tree in positive_part(trees, generic_scaling) if not tree.is_unit]


@pytest.fixture
def scalar_character():
    """
    Fixture with an exact scalar character under the tree product: zero on the X_i and
    1 / (1 + edges) on planted trees.
    """
    def generator(tree):
        if tree.is_monomial:
            return 0
        return Fraction(1, 1 + tree.edge_count)
    return Character(scalar_algebra(), generator, product=TREE_PRODUCT, name='toy')

