from fractions import Fraction

import pytest

from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.enumeration import enumerate_trees, sample, shuffled
from renormalisation.trees.tree import (DecoratedTree, Edge, Forest, bigrade, canonical_key,
                                        degree, is_positive, mark_root, plant, tree_product,
                                        unit, unmark)
from renormalisation.utils.exceptions import ScalingError, TreeError


class TestTreeProduct:
    """
    Test the product identifying the roots.
    """

    def test_monomials_merge(self, tree):
        """Test that root monomials are added."""
        assert tree('X') * tree('X') == tree('X^[2]')

    def test_unit(self, tree):
        """Test that the unit is neutral."""
        tau = tree('I[t,0](X*I[l,0](1))')
        assert tree('1') * tau == tau

    def test_branches_are_joined(self, tree):
        """Test that the branches are joined at the root."""
        result = tree('X*I[t,0](1)') * tree('I[t,1](1)')
        assert result == tree('X*I[t,0](1)*I[t,1](1)')
        assert len(result.branches) == 2

    def test_dimension_mismatch(self, tree, parabolic_scaling):
        """Test that trees of different dimensions are refused."""
        with pytest.raises(ScalingError):
            tree_product(tree('X'), unit(parabolic_scaling.d_plus_1))

    def test_product_laws_on_random_triples(self, scaling, rng):
        """
        Commutativity, associativity and the unit law on 10^4 random triples.
        """
        pool = enumerate_trees(scaling, 3, node_norm=1, types=['t', 'l'])
        one = unit(1)
        for a, b, c in zip(sample(pool, rng, 10000), sample(pool, rng, 10000), sample(pool, rng, 10000)):
            assert canonical_key(a * b) == canonical_key(b * a)
            assert canonical_key((a * b) * c) == canonical_key(a * (b * c))
            assert a * one == a


class TestPlant:
    """
    Test grafting onto a new root.
    """

    def test_plant_unit(self, tree, scaling):
        """Test planting the unit."""
        assert plant(Edge('t', MultiIndex((0,))), tree('1'), scaling) == tree('I[t,0](1)')

    def test_new_root_is_zero(self, tree, scaling):
        """Test that planting gives a bare root."""
        planted = plant(Edge('t', MultiIndex((2,))), tree('X^[3]'), scaling)
        assert planted.root.is_zero
        assert planted.is_planted

    def test_noise_must_be_terminal(self, tree, scaling):
        """Test that a noise can only be planted on the unit."""
        with pytest.raises(TreeError):
            plant(Edge('l', MultiIndex((0,))), tree('X'), scaling)


class TestDegree:
    """
    Test the degree and the bigrading.
    """

    def test_monomial(self, tree, scaling):
        """Test the degree of a monomial."""
        assert degree(tree('X^[3]'), scaling) == 3

    def test_planted_monomial(self, tree, scaling):
        """Test the degree of a planted monomial."""
        assert degree(tree('I[t,0](X)'), scaling) == 3

    def test_noise_branch(self, tree, scaling):
        """Test the degree of a noise branch."""
        assert degree(tree('I[t,1](I[l,0](1))'), scaling) == Fraction(-1, 2)

    def test_unknown_type(self, scaling):
        """Test that an unknown edge type is refused."""
        tau = DecoratedTree(MultiIndex((0,)), ((Edge('z', MultiIndex((0,))), unit(1)),))
        with pytest.raises(ScalingError):
            degree(tau, scaling)

    def test_additivity(self, scaling, rng):
        """Test that the degree is additive under the tree product."""
        pool = enumerate_trees(scaling, 3, node_norm=1)
        for a, b in zip(sample(pool, rng, 500), sample(pool, rng, 500)):
            assert degree(a * b, scaling) == degree(a, scaling) + degree(b, scaling)
            edge = Edge('u', MultiIndex((1,)))
            expected = degree(a, scaling) + Fraction(3, 2) - 1
            assert degree(plant(edge, a, scaling), scaling) == expected

    def test_bigrade(self, tree, scaling):
        """Test the pair of grades used by the recursions."""
        assert bigrade(tree('X^[4]'), scaling) == (0, 0)
        assert bigrade(tree('I[t,2](1)'), scaling) == (2, 2)
        assert bigrade(tree('I[t,1](I[l,2](1))'), scaling) == (3, 4)


class TestPositivity:
    """
    Test the positive part.
    """

    def test_monomial_is_positive(self, tree, scaling):
        """Test that monomials are positive."""
        assert is_positive(tree('X^[5]'), scaling)

    def test_positive_branch(self, tree, scaling):
        """Test a tree with a branch of positive degree."""
        assert is_positive(tree('X*I[t,0](1)'), scaling)

    def test_noise_branch_is_not_positive(self, tree, scaling):
        """Test that a noise branch is not positive."""
        assert not is_positive(tree('I[t,0](1)*I[l,0](1)'), scaling)


class TestCanonicalKey:
    """
    Test non-planarity of the canonical form.
    """

    def test_branch_permutation(self, tree):
        """Test that permuted branches give equal trees."""
        assert canonical_key(tree('I[t,0](1)*I[u,0](1)')) == canonical_key(tree('I[u,0](1)*I[t,0](1)'))

    def test_distinct_decorations(self, tree):
        """Test that distinct decorations give distinct trees."""
        assert canonical_key(tree('I[t,0](1)')) != canonical_key(tree('I[t,1](1)'))

    def test_random_shuffles(self, tree, rng):
        """Test the canonical key under random shuffles."""
        tau = tree('X*I[t,0](I[t,1](1)*I[l,0](1))*I[u,0](X*I[l,0](1)*I[t,0](I[l,0](1)))*I[l,0](1)')
        assert tau.edge_count == 8
        keys = {canonical_key(shuffled(tau, rng)) for _ in range(1000)}
        assert keys == {canonical_key(tau)}

    def test_markers(self, tree):
        """Test marking and unmarking the root edges."""
        tau = tree('I[t,0](1)*I[t,1](1)')
        assert mark_root(tau) == tree('J[t,0](1)*J[t,1](1)')
        assert unmark(mark_root(tau)) == tau


class TestForest:
    """
    Test the forest product.
    """

    def test_commutative(self, tree):
        """Test that the forest product is commutative."""
        a, b = tree('I[t,0](1)'), tree('I[l,0](1)')
        assert Forest((a,)) * Forest((b,)) == Forest((b,)) * Forest((a,))

    def test_unit(self, tree):
        """Test that the empty forest is the unit."""
        a = Forest((tree('X'),))
        assert Forest() * a == a
        assert Forest().is_unit

    def test_canonical_form_is_sorted(self, tree):
        """Test that forests are sorted by canonical key."""
        forest = Forest((tree('I[t,0](1)'), tree('X'), tree('I[t,0](1)')))
        assert list(forest.trees) == sorted(forest.trees)
