from fractions import Fraction

import pytest

from renormalisation.hopf.coproducts import (coaction_compose_check, delta_plus, delta_plus_red,
                                             leg_product)
from renormalisation.hopf.modes import BAR, HAT, REDUCED, SIMPLIFIED_BAR, SIMPLIFIED_HAT, CoproductMode
from renormalisation.trees.enumeration import enumerate_trees, positive_part, sample
from renormalisation.trees.linear import TensorSum
from renormalisation.trees.tree import DecoratedTree, is_positive
from renormalisation.utils.exceptions import DomainError


def pairs(*terms):
    return TensorSum(((left, right), coeff) for left, right, coeff in terms)


class TestPolynomials:
    """
    Test the coproducts of X^k.
    """

    @pytest.mark.parametrize('mode', [HAT, BAR, CoproductMode.full(0), CoproductMode.full(3)])
    def test_x_is_primitive(self, tree, scaling, mode):
        """Test that X is primitive in every mode."""
        expected = pairs((tree('X'), tree('1'), 1), (tree('1'), tree('X'), 1))
        assert delta_plus(tree('X'), mode, scaling) == expected

    def test_binomial_expansion(self, tree, scaling):
        """Test the binomial coefficients of X^2."""
        expected = pairs(
            (tree('X^2'), tree('1'), 1),
            (tree('1'), tree('X^2'), 1),
            (tree('X'), tree('X'), 2),
        )
        assert delta_plus(tree('X^2'), CoproductMode.full(2), scaling) == expected

    def test_simplified(self, tree, scaling):
        """The simplified coaction leaves polynomials on the left."""
        assert delta_plus(tree('X^3'), SIMPLIFIED_HAT, scaling) == pairs((tree('X^3'), tree('1'), 1))

    def test_unit(self, tree, scaling):
        """Test the coproduct of the unit."""
        assert delta_plus(tree('1'), HAT, scaling) == pairs((tree('1'), tree('1'), 1))


class TestPlanted:
    """
    Test the coproducts of planted trees.
    """

    def test_hat(self, tree, scaling):
        """Test the hat coproduct of a planted tree."""
        expected = pairs(
            (tree('1'), tree('J[t,0](1)'), 1),
            (tree('I[t,0](1)'), tree('1'), 1),
            (tree('X'), tree('J[t,1](1)'), 1),
        )
        assert delta_plus(tree('I[t,0](1)'), HAT, scaling) == expected

    def test_full_keeps_every_shift(self, tree, scaling):
        """Test the factorial weights of the full coproduct up to the cutoff."""
        result = delta_plus(tree('I[t,0](1)'), CoproductMode.full(3), scaling)
        assert result.coefficient((tree('X^2'), tree('J[t,2](1)'))) == Fraction(1, 2)
        assert result.coefficient((tree('X^3'), tree('J[t,3](1)'))) == Fraction(1, 6)
        assert len(result) == 5

    def test_noise_leaf(self, tree, scaling):
        """Test that a noise edge is never cut."""
        assert delta_plus(tree('I[l,0](1)'), HAT, scaling) == pairs((tree('I[l,0](1)'), tree('1'), 1))

    def test_bar_projects_left_legs(self, tree, scaling):
        """Test that the bar coproduct drops left legs outside of the positive part."""
        result = delta_plus(tree('J[t,0](I[l,0](1))'), BAR, scaling)
        assert result == pairs(
            (tree('J[t,0](I[l,0](1))'), tree('1'), 1),
            (tree('1'), tree('J[t,0](I[l,0](1))'), 1),
        )

    def test_bar_needs_positive_tree(self, tree, scaling):
        """Test that the bar coproduct refuses trees outside of the positive part."""
        with pytest.raises(DomainError):
            delta_plus(tree('I[l,0](1)'), BAR, scaling)

    def test_simplified_bar(self, tree, scaling):
        """Test the simplified coproduct of a marked planted tree."""
        expected = pairs((tree('J[t,0](1)'), tree('1'), 1), (tree('1'), tree('J[t,0](1)'), 1))
        assert delta_plus(tree('J[t,0](1)'), SIMPLIFIED_BAR, scaling) == expected

    def test_simplified_bar_rejects_polynomials(self, tree, scaling):
        """Test that polynomial roots are refused by the simplified coproduct."""
        with pytest.raises(DomainError):
            delta_plus(tree('X*J[t,0](1)'), SIMPLIFIED_BAR, scaling)

    def test_negative_cutoff(self):
        """Test that a negative cutoff is refused."""
        with pytest.raises(DomainError):
            CoproductMode.full(-1)


class TestMultiplicativity:
    """
    Test Delta(a b) = Delta(a) Delta(b).
    """

    @pytest.mark.parametrize('mode', [HAT, CoproductMode.full(2), SIMPLIFIED_HAT])
    def test_random_pairs(self, generic_scaling, rng, mode):
        """Test multiplicativity on random pairs of decorated trees."""
        pool = enumerate_trees(generic_scaling, 2, node_norm=1)
        for a, b in zip(sample(pool, rng, 60), sample(pool, rng, 60)):
            expected = leg_product(delta_plus(a, mode, generic_scaling), delta_plus(b, mode, generic_scaling))
            assert delta_plus(a * b, mode, generic_scaling) == expected


class TestReducedCoproduct:
    """
    Test the modified reduced coproduct.
    """

    def test_polynomials_are_primitive(self, tree, scaling):
        """Test that polynomials have no reduced terms."""
        assert not delta_plus_red(tree('X^3'), scaling)
        assert not delta_plus(tree('1'), REDUCED, scaling)

    def test_planted_polynomial(self, tree, scaling):
        """Test the reduced coproduct of a planted X."""
        assert delta_plus_red(tree('I[t,0](X)'), scaling) == pairs((tree('I[t,0](1)'), tree('X'), 1))

    def test_planted_unit(self, tree, scaling):
        """Test that a planted unit has no reduced terms."""
        assert not delta_plus_red(tree('I[t,0](1)'), scaling)

    def test_planted_recursion(self, generic_scaling):
        """
        On planted trees the reduced coproduct is (I (x) gamma) Delta^ of the child.
        """
        for tau in enumerate_trees(generic_scaling, 3, node_norm=1):
            if not tau.is_planted:
                continue
            (edge, child), = tau.branches
            expected = TensorSum(
                ((DecoratedTree(tau.root, ((edge, left),)), right), coeff)
                for (left, right), coeff in delta_plus(child, HAT, generic_scaling).items()
                if not right.is_unit
            )
            assert delta_plus_red(tau, generic_scaling) == expected


class TestComodule:
    """
    Test (Delta^ (x) id) Delta^ = (id (x) Delta-bar) Delta^.
    """

    @pytest.mark.parametrize('text', ['X^3', 'I[t,0](1)', 'I[t,0](X*I[t,1](1))'])
    def test_examples(self, tree, scaling, text):
        """Test the comodule law on a few trees."""
        assert coaction_compose_check(tree(text), scaling)

    def test_pool(self, generic_scaling):
        """Test the comodule law on every decorated tree with at most 3 edges."""
        for tau in enumerate_trees(generic_scaling, 3, node_norm=1):
            assert coaction_compose_check(tau, generic_scaling), tau

    def test_positive_pool_is_closed(self, generic_scaling):
        """Both legs of the bar coproduct stay in the positive part."""
        for tau in positive_part(enumerate_trees(generic_scaling, 3), generic_scaling):
            for left, right in delta_plus(tau, BAR, generic_scaling).keys():
                assert is_positive(left, generic_scaling) and is_positive(right, generic_scaling)
