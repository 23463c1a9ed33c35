"""
The model (Pi_x, Gamma_xy) built from a character Pi through the positive coaction:

    f_z             = (Pi A~+ .)(z)                    A~+ the positive twisted antipode
    Pi_z            = (Pi (x) f_z) Delta^+
    gamma_{z,zb}    = (f_z A+ (x) f_zb) Delta-bar^+
    Gamma_{z,zb}    = (id (x) gamma_{z,zb}) Delta^+

so that Gamma_xx = id, Gamma_xy Gamma_yz = Gamma_xz and Pi_y = Pi_x Gamma_xy.
"""
import logging

from renormalisation.birkhoff.characters import TREE_PRODUCT, Character, LinearMap
from renormalisation.hopf.antipodes import AntipodeRecursion
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import BAR, HAT, AntipodeVariant
from renormalisation.targets.algebras import gausspoly_algebra, scalar_algebra
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import is_positive, mark_root, unmark
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import RECURSIVE

logger = logging.getLogger(__name__)


def _point(point):
    return tuple(float(value) for value in point)


class Model:
    """
    The model maps of a character Pi with values in Gaussian-polynomial functions.

    Maps are memoised per point, so a `Model` is meant to be queried at a handful of points.

    Args:
        pi (Character): The character Pi, usually `canonical_pi`.
        scaling (Scaling): The degree table.
        strategy (str): Evaluation strategy of the antipodes.
    """

    def __init__(self, pi, scaling, strategy=RECURSIVE):
        self.pi = pi
        self.scaling = scaling
        self.strategy = strategy
        self.algebra = gausspoly_algebra(scaling.d_plus_1)
        self._twisted = AntipodeRecursion(AntipodeVariant.TWISTED, scaling)
        self._positive = AntipodeRecursion(AntipodeVariant.BAR, scaling)
        self._twisted_memo = {}
        self._positive_memo = {}
        self._f = {}
        self._pi = {}
        self._gamma = {}
        self._Gamma = {}

    def twisted_antipode(self, tree):
        return self._twisted(mark_root(tree), strategy=self.strategy, memo=self._twisted_memo)

    def positive_antipode(self, tree):
        if tree.is_unit:
            return TreeSum.of(tree)
        return self._positive(mark_root(tree), strategy=self.strategy, memo=self._positive_memo)

    def f(self, x):
        """The character f_x on the positive part, with scalar values."""
        x = _point(x)
        if x not in self._f:

            def generator(tree):
                if not tree.is_monomial and not is_positive(tree, self.scaling):
                    raise DomainError(f"f_x is defined on the positive part, got {tree!r}.")
                return float(self.pi(self.twisted_antipode(tree)).evaluate(x))

            self._f[x] = Character(scalar_algebra(), generator, product=TREE_PRODUCT, name=f"f_{x}")
        return self._f[x]

    def Pi(self, x):
        """The map Pi_x from trees to functions of y."""
        x = _point(x)
        if x not in self._pi:
            f_x = self.f(x)

            def function(tree):
                total = self.algebra.zero()
                for (left, right), coeff in delta_plus(unmark(tree), HAT, self.scaling).items():
                    weight = f_x(right) * coeff
                    if weight:
                        total = total + self.pi(left) * weight
                return total

            self._pi[x] = LinearMap(self.algebra, function, name=f"Pi_{x}")
        return self._pi[x]

    def gamma(self, x, y):
        """The character gamma_xy on the positive part."""
        key = (_point(x), _point(y))
        if key not in self._gamma:
            f_x, f_y = self.f(key[0]), self.f(key[1])

            def function(tree):
                tree = mark_root(tree)
                total = 0.0
                for (left, right), coeff in delta_plus(tree, BAR, self.scaling).items():
                    total += f_x(self.positive_antipode(left)) * f_y(right) * float(coeff)
                return total

            self._gamma[key] = LinearMap(scalar_algebra(), function, name=f"gamma_{key}")
        return self._gamma[key]

    def Gamma(self, x, y):
        """
        The re-expansion map Gamma_xy as a function TreeSum -> TreeSum with float coefficients.
        """
        key = (_point(x), _point(y))
        if key not in self._Gamma:
            gamma = self.gamma(*key)
            memo = {}

            def on_tree(tree):
                tree = unmark(tree)
                if tree not in memo:
                    terms = []
                    for (left, right), coeff in delta_plus(tree, HAT, self.scaling).items():
                        weight = gamma(right) * float(coeff)
                        if weight:
                            terms.append((left, weight))
                    memo[tree] = TreeSum(terms)
                return memo[tree]

            def apply(element):
                if isinstance(element, TreeSum):
                    return element.map(on_tree)
                return on_tree(element)

            self._Gamma[key] = apply
        return self._Gamma[key]

    def evaluate(self, x, element, y):
        """(Pi_x element)(y) for a tree or a TreeSum."""
        return float(self.Pi(x)(element).evaluate(_point(y)))


def build_model(pi, scaling, strategy=RECURSIVE):
    """
    Build the model of a character satisfying the derivative assumption.

    Args:
        pi (Character): Usually `canonical_pi(assignment, xbar, scaling)`.
        scaling (Scaling): The degree table.
        strategy (str): `recursive` or `worklist` for the antipodes.

    Returns:
        Model
    """
    logger.debug("Building the model of %s", pi.name)
    return Model(pi, scaling, strategy=strategy)
