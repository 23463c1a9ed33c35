import logging

import pytest

from renormalisation.birkhoff.bogoliubov import BogoliubovRecursion, rs_bogoliubov, rs_bogoliubov_simplified
from renormalisation.hopf.antipodes import antipode_plus
from renormalisation.hopf.modes import AntipodeVariant
from renormalisation.modelmaps.kernels import KernelAssignment, canonical_pi
from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.polynomial import Polynomial
from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.enumeration import sample
from renormalisation.trees.grammar import parse_tree
from renormalisation.trees.tree import mark_root, monomial
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import WORKLIST

X = (0.5,)
XBAR = (-1.0,)
POINTS = [((0.5,), (-1.0,)), ((0.0,), (1.0,)), ((0.25,), (0.25,)), ((-0.75,), (0.5,))]


def shifted_power(point, k):
    """(y - point)^k as a Gaussian-polynomial function of y."""
    base = Polynomial.variable(1, 0) - point[0]
    result = Polynomial.one(1)
    for _ in range(k):
        result = result * base
    return GaussPolyFn.polynomial(result)


@pytest.fixture
def generic_tree(generic_scaling):
    """Fixture returning a parser bound to the `generic_scaling` fixture."""
    return lambda text: parse_tree(text, generic_scaling)


@pytest.fixture
def recursion(family, generic_scaling):
    """Fixture with the recursion at x = 1/2 and x-bar = -1."""
    return BogoliubovRecursion(family, X, XBAR, generic_scaling)


@pytest.fixture
def small_trees(positive_trees):
    """Fixture with the positive trees with at most 2 edges."""
    return [tree for tree in positive_trees if tree.edge_count <= 2]


class TestPolynomials:
    """
    Test the closed forms on X^k.
    """

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_preparation(self, recursion, k):
        """Test that the preparation of X^k is (y - x-bar)^k."""
        assert recursion.preparation(monomial(MultiIndex((k,)))).is_close(shifted_power(XBAR, k))

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_counterterm(self, recursion, k):
        """Test the counterterm of X^k evaluated at x."""
        value = recursion.counterterm_value(monomial(MultiIndex((k,))))
        assert value == pytest.approx((XBAR[0] - X[0]) ** k)

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_renormalised(self, recursion, k):
        """Test that the renormalised value of X^k is (y - x)^k."""
        assert recursion.renormalised(monomial(MultiIndex((k,)))).is_close(shifted_power(X, k))

    def test_command_line_example(self, family, generic_scaling):
        """Test the values printed by the birkhoff command on X^2."""
        result = rs_bogoliubov(family, (0.0,), (1.0,), generic_scaling)
        tree = monomial(MultiIndex((2,)))
        assert result.counterterm(tree).evaluate((1.0,)) == pytest.approx(1.0)
        assert result.renormalised(tree).evaluate((0.5,)) == pytest.approx(0.25)

    def test_unit(self, recursion, generic_tree):
        """The unit has no preparation and a counterterm equal to one."""
        assert not recursion.preparation(generic_tree('1'))
        assert recursion.counterterm_value(generic_tree('1')) == 1

    def test_points_must_match(self, family, generic_scaling):
        """Test that base points of different dimensions are refused."""
        with pytest.raises(DomainError):
            BogoliubovRecursion(family, (0.0, 0.0), XBAR, generic_scaling)


class TestCharacter:
    """
    Test that phi^- at x-bar and phi^+ are characters.
    """

    def test_counterterm_is_multiplicative(self, recursion, small_trees, rng):
        """Test phi^- on random products of small trees."""
        for first, second in zip(sample(small_trees, rng, 40), sample(small_trees, rng, 40)):
            expected = recursion.counterterm_value(first) * recursion.counterterm_value(second)
            assert recursion.counterterm_value(first * second) == pytest.approx(expected, rel=1e-8, abs=1e-10)

    def test_renormalised_is_multiplicative(self, recursion, small_trees, rng):
        """Test phi^+ on random products of small trees."""
        for first, second in zip(sample(small_trees, rng, 20), sample(small_trees, rng, 20)):
            expected = recursion.renormalised(first) * recursion.renormalised(second)
            assert recursion.renormalised(first * second).is_close(expected, rtol=1e-8, atol=1e-10)

    def test_counterterm_is_polynomial(self, recursion, positive_trees):
        """Test that the counterterms carry no Gaussian factor."""
        for tree in positive_trees:
            assert recursion.counterterm(tree).is_polynomial


class TestTwistedAntipode:
    """
    Test phi^-_{x,xb,xb} = Pi^(xb)(twisted antipode) evaluated at x.
    """

    @pytest.mark.parametrize('x, xbar', POINTS)
    def test_identity(self, family, generic_scaling, small_trees, x, xbar):
        """Test the counterterm against the character applied to the twisted antipode."""
        recursion = BogoliubovRecursion(family, x, xbar, generic_scaling)
        character = family(xbar)
        for tree in small_trees:
            twisted = antipode_plus(mark_root(tree), AntipodeVariant.TWISTED, generic_scaling)
            expected = character(twisted).evaluate(x)
            assert recursion.counterterm_value(tree) == pytest.approx(expected, rel=1e-8, abs=1e-10)


class TestRenormalised:
    """
    Test the explicit and planted routes and the vanishing of phi^+ at x.
    """

    def test_explicit(self, recursion, small_trees):
        """Test that the explicit formula agrees with the recursion."""
        for tree in small_trees:
            assert recursion.explicit_renormalised(tree).is_close(recursion.renormalised(tree), rtol=1e-8, atol=1e-10)

    def test_planted(self, recursion, positive_trees):
        """Planted trees have the same preparation through the planted route."""
        for tree in positive_trees:
            if tree.is_planted:
                assert recursion.planted_preparation(tree).is_close(recursion.preparation(tree), rtol=1e-8,
                                                                    atol=1e-10)

    def test_planted_refuses_products(self, recursion, generic_tree):
        """Test that the planted route refuses a product of trees."""
        with pytest.raises(DomainError):
            recursion.planted_preparation(generic_tree('X*I[t,0](1)'))

    def test_vanishes_at_x(self, recursion, positive_trees):
        """Test that phi^+ vanishes at the base point on every positive tree."""
        for tree in positive_trees:
            assert recursion.renormalised(tree).evaluate(X) == pytest.approx(0, abs=1e-9)

    def test_negative_branch(self, recursion, generic_tree):
        """A planted branch of negative degree gives a zero counterterm."""
        tree = generic_tree('I[t,0](1)*I[l,0](1)')
        assert not recursion.counterterm(tree)
        assert recursion.counterterm_value(tree) == 0

    def test_result(self, family, generic_scaling, generic_tree):
        """Test the provenance and details of the result."""
        result = rs_bogoliubov(family, X, XBAR, generic_scaling)
        tree = generic_tree('I[t,0](I[l,0](1))')
        assert result.provenance == 'rs'
        assert result.details['xbar'] == XBAR
        assert result.renormalised(tree).is_close(result.details['recursion'].renormalised(tree))


class TestStrategies:
    """
    Test that the recursive and worklist evaluations agree.
    """

    def test_worklist(self, family, generic_scaling, positive_trees):
        """Test the worklist preparation against the recursive one."""
        recursive = BogoliubovRecursion(family, X, XBAR, generic_scaling)
        worklist = BogoliubovRecursion(family, X, XBAR, generic_scaling, strategy=WORKLIST)
        for tree in positive_trees:
            assert recursive.preparation(tree).is_close(worklist.preparation(tree))


class TestSimplified:
    """
    Test the recursion at x = x-bar = 0 with the simplified coaction.
    """

    @pytest.fixture
    def phi(self, generic_scaling):
        """Fixture with the canonical character centred at the origin."""
        return canonical_pi(KernelAssignment.default(generic_scaling), (0.0,), generic_scaling)

    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_polynomials(self, phi, generic_scaling, k):
        """Test the simplified recursion on X^k."""
        result = rs_bogoliubov_simplified(phi, generic_scaling)
        tree = monomial(MultiIndex((k,)))
        assert result.counterterm(tree).evaluate((0.0,)) == pytest.approx(0)
        assert result.renormalised(tree).is_close(shifted_power((0.0,), k))

    def test_counterterm_at_origin(self, phi, generic_scaling, rooted_positive_trees):
        """Test that the counterterm cancels the preparation at the origin."""
        result = rs_bogoliubov_simplified(phi, generic_scaling)
        for tree in rooted_positive_trees:
            if tree.is_planted:
                expected = -result.preparation(tree).evaluate((0.0,))
                assert result.counterterm(tree).evaluate((0.0,)) == pytest.approx(expected, abs=1e-12)

    def test_matches_full_coaction(self, phi, family, generic_scaling, rooted_positive_trees):
        """Test the simplified recursion against the full coaction at x = x-bar = 0."""
        simplified = rs_bogoliubov_simplified(phi, generic_scaling)
        full = rs_bogoliubov(family, (0.0,), (0.0,), generic_scaling)
        for tree in rooted_positive_trees:
            assert simplified.preparation(tree).is_close(full.preparation(tree))
            assert simplified.renormalised(tree).is_close(full.renormalised(tree))

    def test_provenance(self, phi, generic_scaling):
        """Test the provenance label."""
        assert rs_bogoliubov_simplified(phi, generic_scaling).provenance == 'rs-simplified'


class TestAssumptions:
    """
    Test the spot check of the derivative assumption.
    """

    def test_canonical_family(self, recursion, positive_trees):
        """The canonical family satisfies the derivative assumption."""
        assert recursion.assumption_failures(positive_trees) == []

    def test_unrecentred_family(self, generic_scaling, positive_trees, caplog):
        """Test that a family ignoring x-bar is reported with a warning."""
        assignment = KernelAssignment.default(generic_scaling)

        def frozen(xbar):
            return canonical_pi(assignment, (0.0,), generic_scaling)

        with caplog.at_level(logging.WARNING):
            rs_bogoliubov(frozen, X, XBAR, generic_scaling, check=True, trees=positive_trees)
        assert 'Derivative assumption violated' in caplog.text
