import math

import pytest

from renormalisation.negative.bogoliubov import NegativeBogoliubov
from renormalisation.negative.renormalise import (RenormalisedModel, counit_counterterm, renormalisation_map,
                                                  renormalised_character)
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import unit

XI = 'I[l,0](1)'
TAU = 'I[t,0](I[l,0](1))'
TAU_COUNTERTERM = math.sqrt(math.pi) - math.sqrt(math.pi / 2)
POINTS = [(0.0,), (0.5,), (-1.0,)]


@pytest.fixture
def renormalisation(psi, coaction):
    """Fixture with M built from the counterterm of the Gaussian character."""
    return renormalisation_map(NegativeBogoliubov(psi, coaction).counterterm_value, coaction)


class TestRenormalisationMap:
    """
    Test M = (psi_- (x) id) Delta^-.
    """

    def test_counit_is_the_identity(self, coaction, plain_trees):
        """Test that the counit counterterm gives the identity map."""
        identity = renormalisation_map(counit_counterterm, coaction)
        for tree in plain_trees:
            assert identity(tree) == TreeSum.of(tree, 1.0), tree

    def test_noise(self, renormalisation, neg_tree):
        """Test the renormalisation map on a noise."""
        expected = TreeSum([(neg_tree(XI), 1.0), (unit(1), -1.0)])
        assert renormalisation(neg_tree(XI)).is_close(expected)

    def test_planted_noise(self, renormalisation, neg_tree):
        """Test the renormalisation map on a planted noise."""
        expected = TreeSum([(neg_tree(TAU), 1.0), (neg_tree('I[t,0](1)'), -1.0), (unit(1), TAU_COUNTERTERM)])
        assert renormalisation(neg_tree(TAU)).is_close(expected)

    def test_polynomial(self, renormalisation, neg_tree):
        """Test that polynomials are fixed."""
        assert renormalisation(neg_tree('X')) == TreeSum.of(neg_tree('X'), 1.0)

    def test_linear(self, renormalisation, neg_tree):
        """Test the linear extension to tree sums."""
        element = TreeSum([(neg_tree(XI), 2), (neg_tree('X'), 1)])
        expected = TreeSum([(neg_tree(XI), 2.0), (unit(1), -2.0), (neg_tree('X'), 1.0)])
        assert renormalisation(element).is_close(expected)

    def test_renormalised_character(self, pi, renormalisation, neg_tree):
        """Test that the renormalised noise vanishes at the origin."""
        character = renormalised_character(pi, renormalisation)
        assert character(neg_tree(XI)).evaluate((0.0,)) == pytest.approx(0, abs=1e-12)
        assert character(neg_tree(XI)).evaluate((1.0,)) == pytest.approx(math.exp(-1) - 1)


class TestRenormalisedModel:
    """
    Test the model of Pi^M against Pi_x M.
    """

    def test_counit_gives_the_model(self, pi, coaction, negative_scaling, neg_tree):
        """Test that the counit counterterm gives the model back."""
        model = RenormalisedModel(pi, renormalisation_map(counit_counterterm, coaction), negative_scaling)
        for text in [XI, TAU, 'X*I[l,0](1)']:
            for x in POINTS:
                assert model.hat_pi(x)(neg_tree(text)).is_close(model.model.Pi(x)(neg_tree(text))), text

    @pytest.mark.parametrize('y', [0.0, 0.5, 2.0])
    def test_noise(self, pi, renormalisation, negative_scaling, neg_tree, y):
        """Test the renormalised model of a noise."""
        model = RenormalisedModel(pi, renormalisation, negative_scaling)
        assert model.hat_pi((0.5,))(neg_tree(XI)).evaluate((y,)) == pytest.approx(math.exp(-y * y) - 1)

    def test_verified_on_noise(self, pi, renormalisation, negative_scaling, neg_tree):
        """Test that the noise is in the verified set."""
        model = RenormalisedModel(pi, renormalisation, negative_scaling)
        for x in POINTS:
            assert model.is_verified(neg_tree(XI), x, 1e-8)
            assert model.gap(x, neg_tree(XI)) == pytest.approx(0, abs=1e-8)

    def test_not_verified_on_planted_noise(self, pi, renormalisation, negative_scaling, neg_tree):
        """M does not commute with f_x on a planted noise."""
        model = RenormalisedModel(pi, renormalisation, negative_scaling)
        assert not model.is_verified(neg_tree(TAU), (0.5,), 1e-8)

    def test_pi_m(self, pi, renormalisation, negative_scaling, neg_tree):
        """Test Pi_x M against the model and the counterterm."""
        model = RenormalisedModel(pi, renormalisation, negative_scaling)
        expected = model.model.Pi((0.0,))(neg_tree(TAU)) - model.model.Pi((0.0,))(neg_tree('I[t,0](1)'))
        value = model.pi_m((0.0,), neg_tree(TAU))
        assert value.evaluate((0.0,)) == pytest.approx(expected.evaluate((0.0,)) + TAU_COUNTERTERM)
