import pytest

from renormalisation.hopf.axioms import ck_antipode_identity, ck_coassociativity, ck_counit_check
from renormalisation.hopf.ck import (CK_SCALING, b_plus, bullet, ck_antipode, ck_coproduct, ladder,
                                     parse_ck_forest, parse_ck_tree)
from renormalisation.trees.enumeration import enumerate_trees
from renormalisation.trees.linear import ForestSum, TensorSum
from renormalisation.trees.tree import Forest
from renormalisation.utils.exceptions import TreeError


@pytest.fixture
def ck_pool():
    """Fixture with every plain rooted tree with at most 4 edges."""
    return enumerate_trees(CK_SCALING, 4)


def f(*trees):
    return Forest(tuple(trees))


class TestConstruction:
    """
    Test the helpers building plain trees.
    """

    def test_bullet_and_ladder(self):
        """Test the single vertex and the ladders."""
        assert ladder(1) == bullet()
        assert ladder(2) == parse_ck_tree('I[e,0](1)')
        assert ladder(3).node_count == 3

    def test_b_plus(self):
        """Test grafting forests onto a new root."""
        assert b_plus(f(bullet(), bullet())) == parse_ck_tree('I[e,0](1)*I[e,0](1)')
        assert b_plus(Forest()) == bullet()

    @pytest.mark.parametrize('text', ['X', 'I[e,1](1)', 'J[e,0](1)'])
    def test_decorated_input(self, text):
        """Test that decorated trees are not Connes-Kreimer trees."""
        with pytest.raises(TreeError):
            parse_ck_tree(text)

    def test_forest_literal(self):
        """Test the forest grammar with the dot separator."""
        assert parse_ck_forest('1 . I[e,0](1)') == f(bullet(), ladder(2))


class TestCoproduct:
    """
    Test the Butcher-Connes-Kreimer coproduct.
    """

    def test_bullet_is_primitive(self):
        """Test the coproduct of the single vertex."""
        expected = TensorSum([((f(bullet()), f()), 1), ((f(), f(bullet())), 1)])
        assert ck_coproduct(bullet()) == expected

    def test_ladder(self):
        """Test the coproduct of the ladder with two vertices."""
        l2 = ladder(2)
        expected = TensorSum([
            ((f(l2), f()), 1),
            ((f(), f(l2)), 1),
            ((f(bullet()), f(bullet())), 1),
        ])
        assert ck_coproduct(l2) == expected

    def test_cherry(self):
        """
        The trunk stays on the left: cherry (x) 1 + 1 (x) cherry + 2 l2 (x) . + . (x) ..
        """
        cherry = b_plus(f(bullet(), bullet()))
        expected = TensorSum([
            ((f(cherry), f()), 1),
            ((f(), f(cherry)), 1),
            ((f(ladder(2)), f(bullet())), 2),
            ((f(bullet()), f(bullet(), bullet())), 1),
        ])
        assert ck_coproduct(cherry) == expected

    def test_forests_are_multiplicative(self):
        """Test that the coproduct of a forest is the product of the coproducts."""
        product = ck_coproduct(bullet()).multiply(ck_coproduct(ladder(2)), lambda u, v: (u[0] * v[0], u[1] * v[1]))
        assert ck_coproduct(f(bullet(), ladder(2))) == product

    def test_decorated_tree(self, tree):
        """Test that decorated trees are refused."""
        with pytest.raises(TreeError):
            ck_coproduct(tree('X*I[t,0](1)'))

    def test_axioms(self, ck_pool):
        """Test the counit laws and coassociativity on every small tree."""
        for tau in ck_pool:
            assert ck_counit_check(tau, side=0).holds
            assert ck_counit_check(tau, side=1).holds
            assert ck_coassociativity(tau).holds


class TestAntipode:
    """
    Test the Connes-Kreimer antipode.
    """

    def test_bullet(self):
        """Test the antipode of the single vertex."""
        assert ck_antipode(bullet()) == ForestSum.of(f(bullet()), -1)

    def test_ladder(self):
        """Test the antipode of the ladder with two vertices."""
        expected = ForestSum([(f(ladder(2)), -1), (f(bullet(), bullet()), 1)])
        assert ck_antipode(ladder(2)) == expected

    def test_unit(self):
        """Test the antipode of the empty forest."""
        assert ck_antipode(Forest()) == ForestSum.of(Forest())

    def test_axiom(self, ck_pool):
        """Test the antipode axiom on trees and on one forest."""
        for tau in ck_pool:
            assert ck_antipode_identity(tau).holds, tau
        assert ck_antipode_identity(f(ladder(2), bullet())).holds

    def test_strategies(self, ck_pool):
        """Test the worklist antipode against the recursive one."""
        for tau in ck_pool:
            assert ck_antipode(tau, strategy='worklist') == ck_antipode(tau)
