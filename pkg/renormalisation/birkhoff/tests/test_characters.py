from fractions import Fraction

import pytest

from renormalisation.birkhoff.characters import (FOREST_PRODUCT, TREE_PRODUCT, Character, LinearMap, convolve,
                                                  generators, unit_character)
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import HAT
from renormalisation.targets.algebras import laurent_algebra, scalar_algebra
from renormalisation.trees.enumeration import enumerate_trees
from renormalisation.trees.linear import TreeSum
from renormalisation.utils.exceptions import DomainError


@pytest.fixture
def weights():
    """Fixture with a scalar character worth 2 on X and 1 / (1 + edges) on planted trees."""
    def generator(tree):
        if tree.is_monomial:
            return 2
        return Fraction(1, 1 + tree.edge_count)
    return Character(scalar_algebra(), generator, name='weights')


class TestGenerators:
    """
    Test the splitting of trees and forests into generators.
    """

    def test_tree_product(self, tree):
        """Test the splitting of a tree product into X factors and planted trees."""
        found = sorted(generators(tree('X^2*I[t,0](1)*I[u,0](X)')))
        expected = sorted([tree('X'), tree('X'), tree('I[t,0](1)'), tree('I[u,0](X)')])
        assert found == expected

    def test_markers_are_dropped(self, tree):
        """Root markers are removed from the generators."""
        assert list(generators(tree('J[t,0](1)'))) == [tree('I[t,0](1)')]

    def test_forest_product(self, tree, forest):
        """Test that under the forest product a tree is one generator."""
        assert list(generators(tree('I[t,0](1)*I[t,0](1)'), FOREST_PRODUCT)) == [tree('I[t,0](1)*I[t,0](1)')]
        assert len(list(generators(forest('I[t,0](1) . X'), FOREST_PRODUCT))) == 2

    def test_unit_has_no_generators(self, tree):
        """Test that the unit has no generator."""
        assert list(generators(tree('1'))) == []


class TestCharacter:
    """
    Test characters and linear maps.
    """

    def test_multiplicative(self, weights, tree):
        """Test that a character is the product of its values on generators."""
        assert weights(tree('X*I[t,0](1)*I[t,0](I[u,0](1))')) == 2 * Fraction(1, 2) * Fraction(1, 3)

    def test_unit(self, weights, tree):
        """Test the value on the unit."""
        assert weights(tree('1')) == 1

    def test_linear(self, weights, tree):
        """Test the linear extension to tree sums."""
        combination = TreeSum([(tree('X'), 3), (tree('I[t,0](1)'), -2)])
        assert weights(combination) == 6 - 1

    def test_compose(self, weights, tree):
        """Test the composition with a linear map."""
        doubled = weights.compose(lambda element: TreeSum.of(element, 2))
        assert doubled(tree('X^2')) == 8

    def test_unknown_product(self):
        """Test that an unknown product name is refused."""
        with pytest.raises(DomainError):
            Character(scalar_algebra(), lambda tree: 0, product='shuffle')

    def test_unit_character(self, tree):
        """Test the counit on the unit, X and a planted tree."""
        counit = unit_character(scalar_algebra())
        assert counit(tree('1')) == 1
        assert counit(tree('X')) == 0
        assert counit(tree('I[t,0](1)')) == 0

    def test_generator_memo(self, tree):
        """Each generator is evaluated once."""
        calls = []

        def generator(element):
            calls.append(element)
            return 1

        character = Character(scalar_algebra(), generator)
        character(tree('I[t,0](1)*X'))
        character(tree('I[t,0](1)*X^2'))
        assert len(calls) == 2


class TestConvolution:
    """
    Test the convolution through the coaction Delta^+.
    """

    @pytest.fixture
    def coaction(self, scaling):
        """Fixture with the coaction Delta^+ on decorated trees."""
        return lambda tree: delta_plus(tree, HAT, scaling)

    def test_counit_law(self, weights, coaction, scaling):
        """Test that convolving with the counit gives the character back."""
        counit = unit_character(scalar_algebra())
        right = convolve(weights, counit, coaction)
        for element in enumerate_trees(scaling, 2, node_norm=1):
            assert right(element) == weights(element)

    def test_x_is_primitive(self, weights, coaction, tree):
        """Test the convolution square on the primitive X."""
        product = convolve(weights, weights, coaction)
        assert product(tree('X')) == 4

    def test_algebra_mismatch(self, weights, coaction):
        """Test that characters with different target algebras are not convolved."""
        other = Character(laurent_algebra(4), lambda tree: laurent_algebra(4).zero())
        with pytest.raises(DomainError):
            convolve(weights, other, coaction)

    def test_tree_product_default(self, weights):
        """Characters use the tree product unless told otherwise."""
        assert weights.product == TREE_PRODUCT

    def test_linear_map_memo(self, tree):
        """Test that a linear map memoises its values."""
        calls = []

        def function(element):
            calls.append(element)
            return 1

        mapping = LinearMap(scalar_algebra(), function)
        mapping(tree('X'))
        mapping(tree('X'))
        assert calls == [tree('X')]
