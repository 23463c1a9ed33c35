import pytest

from renormalisation.negative.antipode import NegativeAntipode, negative_antipode, negative_twisted_antipode
from renormalisation.negative.forests import as_forest
from renormalisation.trees.linear import ForestSum
from renormalisation.trees.tree import Forest, unit
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import WORKLIST

XI = 'I[l,0](1)'
TAU = 'I[t,0](I[l,0](1))'


class TestTwistedAntipode:
    """
    Test the negative twisted antipode.
    """

    def test_noise(self, coaction, neg_tree):
        """Test that the twisted antipode of a noise is its negative."""
        assert negative_twisted_antipode(neg_tree(XI), coaction) == ForestSum.of(as_forest(neg_tree(XI)), -1)

    def test_planted_noise(self, coaction, neg_tree):
        """Test the twisted antipode of a planted noise, keeping the contracted tree."""
        expected = ForestSum([
            (as_forest(neg_tree(TAU)), -1),
            (Forest((neg_tree(XI), neg_tree('I[t,0](1)'))), 1),
        ])
        assert negative_twisted_antipode(neg_tree(TAU), coaction) == expected

    def test_multiplicative(self, coaction, neg_forest):
        """Test that the twisted antipode is multiplicative on forests."""
        forest = neg_forest('I[l,0](1) . I[l,0](1)')
        assert negative_twisted_antipode(forest, coaction) == ForestSum.of(forest)

    def test_unit(self, coaction):
        """Test that the unit tree and the empty forest are fixed."""
        assert negative_twisted_antipode(unit(1), coaction) == ForestSum.of(Forest())
        assert negative_twisted_antipode(Forest(), coaction) == ForestSum.of(Forest())

    def test_linear(self, coaction, neg_tree):
        """Test the linear extension to forest sums."""
        element = ForestSum([(as_forest(neg_tree(XI)), 2), (Forest(), 1)])
        expected = ForestSum([(as_forest(neg_tree(XI)), -2), (Forest(), 1)])
        assert negative_twisted_antipode(element, coaction) == expected

    def test_refuses_non_negative_trees(self, coaction, neg_tree):
        """Test that trees of non-negative degree are refused, alone or in a forest."""
        with pytest.raises(DomainError):
            negative_twisted_antipode(neg_tree('I[t,0](1)'), coaction)
        with pytest.raises(DomainError):
            negative_twisted_antipode(Forest((neg_tree(XI), neg_tree('X'))), coaction)

    def test_strategies(self, coaction, plain_trees):
        """Test the worklist evaluation against the recursive one."""
        recursive = NegativeAntipode(coaction)
        worklist = NegativeAntipode(coaction, strategy=WORKLIST)
        for tree in plain_trees:
            if coaction.space.is_negative(tree):
                assert recursive(tree) == worklist(tree), tree


class TestQuotientAntipode:
    """
    Test the antipode of the quotient.
    """

    def test_planted_noise(self, coaction, neg_tree):
        """The contracted tree of non-negative degree vanishes in the quotient."""
        assert negative_antipode(neg_tree(TAU), coaction) == ForestSum.of(as_forest(neg_tree(TAU)), -1)

    def test_lands_in_the_quotient(self, coaction, plain_trees):
        """Test that no value holds a forest that is zero in the quotient."""
        antipode = NegativeAntipode(coaction, twisted=False)
        for tree in plain_trees:
            if coaction.space.is_negative(tree):
                for forest in antipode(tree).keys():
                    assert not coaction.space.is_zero(forest), tree

    def test_antipode_axiom(self, coaction, plain_trees):
        """Test the antipode axiom of the quotient on trees without decorations."""
        antipode = NegativeAntipode(coaction, twisted=False)
        for tree in plain_trees:
            if not coaction.space.is_negative(tree):
                continue
            total = ForestSum()
            for (left, right), coeff in coaction.coproduct(as_forest(tree)).items():
                total = total + coaction.space.product(antipode(left), ForestSum.of(right)) * coeff
            assert not total, tree


class TestDecoratedTrees:
    """
    Test both antipodes on trees whose vertices carry polynomials.
    """

    def test_twisted_antipode(self, coaction, neg_tree):
        """The polynomial left by the extraction of the noise stays as a factor of the forest."""
        expected = ForestSum([
            (as_forest(neg_tree('X*I[l,0](1)')), -1),
            (Forest((neg_tree(XI), neg_tree('X'))), 1),
        ])
        assert negative_twisted_antipode(neg_tree('X*I[l,0](1)'), coaction) == expected

    def test_quotient_antipode(self, coaction, neg_tree):
        """Test that the polynomial factor vanishes in the quotient."""
        tree = neg_tree('X*I[l,0](1)')
        assert negative_antipode(tree, coaction) == ForestSum.of(as_forest(tree), -1)

    def test_recursion_descends(self, coaction, decorated_trees):
        """Both strategies terminate with the same value on decorated trees."""
        recursive = NegativeAntipode(coaction)
        worklist = NegativeAntipode(coaction, strategy=WORKLIST)
        for tree in decorated_trees:
            if coaction.space.is_negative(tree):
                assert recursive(tree) == worklist(tree), tree

    def test_antipode_axiom(self, coaction, decorated_trees):
        """The quotient antipode inverts the identity on decorated trees as well."""
        antipode = NegativeAntipode(coaction, twisted=False)
        for tree in decorated_trees:
            if not coaction.space.is_negative(tree):
                continue
            total = ForestSum()
            for (left, right), coeff in coaction.coproduct(as_forest(tree)).items():
                total = total + coaction.space.product(antipode(left), ForestSum.of(right)) * coeff
            assert not total, tree
