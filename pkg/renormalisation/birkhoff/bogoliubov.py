"""
Bogoliubov-type recursion for decorated trees with respect to the points x, x-bar and y.

Given a family of characters x-bar -> phi_{x-bar} with values in functions of y,

    phi_bar_{x,xb,y}(tau) = phi_{xb,y}(tau) + sum+ phi_{xb,y}(tau') phi^-_{x,xb,xb}(tau'')
    phi^-_{x,xb,y}(tau)   = -T_{|tau|_s,x,y}(phi_bar_{x,xb,.}(tau))
    phi^+_{x,xb,y}        = (phi_{xb,y} (x) phi^-_{x,xb,xb}) Delta^+

where sum+ runs over the modified reduced coproduct. The counterterm is zero outside the
positive part.
"""
import logging

from renormalisation.birkhoff.characters import BirkhoffResult, LinearMap
from renormalisation.hopf.coproducts import delta_plus, delta_plus_red
from renormalisation.hopf.modes import HAT, SIMPLIFIED_HAT
from renormalisation.targets.algebras import gausspoly_algebra
from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.jets import taylor_jet
from renormalisation.targets.polynomial import Polynomial
from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.linear import TensorSum
from renormalisation.trees.tree import DecoratedTree, Edge, degree, is_positive, unit, unmark
from renormalisation.utils.conf import tolerances
from renormalisation.utils.exceptions import DomainError, InvariantViolation
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)


def _size(tree):
    return (tree.edge_count, sum(tree.root))


class BogoliubovRecursion:
    """
    The recursion at fixed points x and x-bar.

    Args:
        family (callable): x-bar -> Character with GaussPolyFn values.
        x (tuple): Base point of the Taylor jets.
        xbar (tuple): Recentering point of the polynomials.
        scaling (Scaling): The degree table.
        simplified (bool): Use the coaction with Delta+ X_i = X_i (x) 1.
        strategy (str): `recursive` or `worklist`.
    """

    def __init__(self, family, x, xbar, scaling, simplified=False, strategy=RECURSIVE):
        self.x = tuple(x)
        self.xbar = tuple(xbar)
        if len(self.x) != scaling.d_plus_1 or len(self.xbar) != scaling.d_plus_1:
            raise DomainError(f"Points must have {scaling.d_plus_1} coordinates.")
        self.scaling = scaling
        self.simplified = simplified
        self.mode = SIMPLIFIED_HAT if simplified else HAT
        self.strategy = strategy
        self.character = family(self.xbar)
        self.algebra = gausspoly_algebra(scaling.d_plus_1)
        self._memo = {}
        self._counterterms = {}

    def reduced_coproduct(self, tree):
        """The coaction minus `tree (x) 1` minus the terms with a polynomial left leg."""
        if self.simplified:
            if tree.is_monomial:
                reduced = TensorSum()
            else:
                hat = delta_plus(tree, SIMPLIFIED_HAT, self.scaling)
                reduced = hat.filter(lambda key: not key[0].is_monomial) - TensorSum.of((tree, unit(tree.d_plus_1)))
        else:
            reduced = delta_plus_red(tree, self.scaling)
        for _, right in reduced.keys():
            if _size(right) >= _size(tree):
                raise InvariantViolation(f"The reduced coproduct does not descend at {tree!r}.")
        return reduced

    def step(self, tree, lookup):
        value = self.character(tree)
        for (left, right), coeff in self.reduced_coproduct(tree).items():
            value = value + self.character(left) * (self._counterterm_at_xbar(unmark(right), lookup) * coeff)
        return value

    def _counterterm_at_xbar(self, tree, lookup):
        if tree.is_unit:
            return 1
        if not is_positive(tree, self.scaling):
            return 0
        return self._jet(tree, lookup(tree)).evaluate(self.xbar) * -1

    def _jet(self, tree, function):
        return taylor_jet(function, degree(tree, self.scaling), self.x, self.scaling.s)

    def preparation(self, tree):
        """phi_bar_{x,xb,.}(tree) as a function of y; zero on the unit."""
        tree = unmark(tree)
        if tree.is_unit:
            return self.algebra.zero()
        return evaluate(tree, self.step, strategy=self.strategy, memo=self._memo)

    def counterterm(self, tree):
        """phi^-_{x,xb,.}(tree) as a polynomial in y."""
        tree = unmark(tree)
        if tree not in self._counterterms:
            if tree.is_unit:
                value = self.algebra.unit()
            elif not is_positive(tree, self.scaling):
                value = self.algebra.zero()
            else:
                value = -self._jet(tree, self.preparation(tree))
            self._counterterms[tree] = value
        return self._counterterms[tree]

    def counterterm_value(self, tree):
        """phi^-_{x,xb,xb}(tree)."""
        return self.counterterm(tree).evaluate(self.xbar)

    def renormalised(self, tree):
        """phi^+_{x,xb,.}(tree) through the coaction."""
        total = self.algebra.zero()
        for (left, right), coeff in delta_plus(unmark(tree), self.mode, self.scaling).items():
            weight = self.counterterm_value(right)
            if weight:
                total = total + self.character(left) * (weight * coeff)
        return total

    def planted_preparation(self, tree):
        """
        phi_bar on a planted tree I_(t,p)(tau) through (phi I_(t,p) (x) phi^-) Delta^+ tau.
        """
        tree = unmark(tree)
        if not tree.is_planted:
            raise DomainError(f"{tree!r} is not a planted tree.")
        (edge, child), = tree.branches
        zero = MultiIndex.zero(tree.d_plus_1)
        total = self.algebra.zero()
        for (left, right), coeff in delta_plus(child, self.mode, self.scaling).items():
            weight = self.counterterm_value(right)
            if weight:
                total = total + self.character(DecoratedTree(zero, ((edge, left),))) * (weight * coeff)
        return total

    def explicit_renormalised(self, tree):
        """
        phi^+ as the branchwise product of phi_bar minus its Taylor jet: the polynomial part X^n
        and every root branch are recentred separately.
        """
        tree = unmark(tree)
        monomial = DecoratedTree(tree.root)
        result = self._recentred(monomial)
        for factor in tree.planted_factors():
            result = result * self._recentred(factor)
        return result

    def _recentred(self, tree):
        if tree.is_unit:
            return self.algebra.unit()
        function = self.preparation(tree)
        return function - self._jet(tree, function)

    def assumption_failures(self, trees, rtol=None, atol=None):
        """
        Spot-check that phi_{xb,y}(X_i) = y_i - xb_i and that phi_{xb}(I_(t,p)(tau)) is the
        derivative D^p of phi_{xb}(I_(t,0)(tau)) on the planted factors of `trees`.

        Returns:
            list: Descriptions of the failures, each also logged as a warning.
        """
        default_rtol, default_atol = tolerances()
        rtol = default_rtol if rtol is None else rtol
        atol = default_atol if atol is None else atol
        failures = []
        d_plus_1 = self.scaling.d_plus_1
        for i in range(d_plus_1):
            expected = GaussPolyFn.polynomial(Polynomial.variable(d_plus_1, i) - self.xbar[i])
            value = self.character(DecoratedTree(MultiIndex.unit(d_plus_1, i)))
            if not value.is_close(expected, rtol=rtol, atol=atol):
                failures.append(f"phi(X_{i}) is not y_{i} - xbar_{i}")
        for tree in trees:
            for factor in unmark(tree).planted_factors():
                (edge, child), = factor.branches
                if edge.derivative.is_zero:
                    continue
                base = DecoratedTree(factor.root, ((Edge(edge.type, MultiIndex.zero(d_plus_1)), child),))
                expected = self.character(base).derivative(edge.derivative)
                if not self.character(factor).is_close(expected, rtol=rtol, atol=atol):
                    failures.append(f"phi({factor!r}) is not a derivative of phi({base!r})")
        for failure in failures:
            logger.warning("Derivative assumption violated: %s", failure)
        return failures

    def result(self):
        provenance = 'rs-simplified' if self.simplified else 'rs'
        return BirkhoffResult(
            counterterm=LinearMap(self.algebra, self.counterterm, name='phi^-'),
            renormalised=LinearMap(self.algebra, self.renormalised, name='phi^+'),
            preparation=LinearMap(self.algebra, self.preparation, name='phi_bar'),
            provenance=provenance,
            details={'x': self.x, 'xbar': self.xbar, 'recursion': self},
        )


def rs_bogoliubov(family, x, xbar, scaling, strategy=RECURSIVE, check=False, trees=()):
    """
    Run the recursion for a family of characters satisfying the derivative assumption.

    Args:
        family (callable): x-bar -> Character into functions of y.
        x (tuple): Base point of the Taylor jets.
        xbar (tuple): Recentering point.
        scaling (Scaling): The degree table.
        strategy (str): `recursive` or `worklist`.
        check (bool): Spot-check the derivative assumption on `trees` and warn on violations.

    Returns:
        BirkhoffResult: Maps from trees to functions of y. `details['recursion']` exposes the
        explicit and planted routes.
    """
    recursion = BogoliubovRecursion(family, x, xbar, scaling, strategy=strategy)
    if check:
        recursion.assumption_failures(trees)
    return recursion.result()


def rs_bogoliubov_simplified(phi, scaling, strategy=RECURSIVE):
    """
    The recursion at x = x-bar = 0 with the simplified coaction, for a single character.

    At y = 0 the counterterm is phi^-(tau)(0) = -phi_bar(tau)(0) on trees of positive degree.
    """
    origin = (0,) * scaling.d_plus_1
    recursion = BogoliubovRecursion(lambda xbar: phi, origin, origin, scaling, simplified=True,
                                    strategy=strategy)
    return recursion.result()
