"""
Recursive formulations of the model maps, computed directly from the kernels without the coaction.

    (Pi_x I_(t,k) tau)(y) = (D^k K_t * Pi_x tau)(y) - sum_{|l|_s <= a} (y - x)^l / l! (D^(k+l) K_t * Pi_x tau)(x)
    f_x^(xb)(J_(t,k) tau) = - sum_{|l|_s <= a} (xb - x)^l / l! (D^(k+l) K_t * Pi_x tau)(x)
    Gamma_xy I_(t,k) tau  = I_(t,k) Gamma_xy tau - sum_{|l|_s < a} (X + (x - y) 1)^l / l! (Pi_x I_(t,k+l) Gamma_xy tau)(y)

where a = |I_(t,k) tau|_s. The jets are empty when a <= 0.
"""
import logging

from renormalisation.targets.gausspoly import GaussPolyFn, gp_convolve
from renormalisation.targets.polynomial import Polynomial
from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import monomial, plant, planted_degree, tree_product, unmark
from renormalisation.utils.exceptions import DomainError, ScalingError, TreeError

logger = logging.getLogger(__name__)


def _point(point):
    return tuple(float(value) for value in point)


class RecursiveModel:
    """
    Pi_x, f_x and Gamma_xy through their recursions on planted trees.

    Args:
        assignment (KernelAssignment): Kernels and noises.
        scaling (Scaling): The degree table.
    """

    def __init__(self, assignment, scaling):
        self.assignment = assignment.check(scaling)
        self.scaling = scaling
        self.d_plus_1 = scaling.d_plus_1
        self._pi = {}
        self._gamma = {}

    def _check_point(self, point):
        point = _point(point)
        if len(point) != self.d_plus_1:
            raise ScalingError(f"Point {point} does not have {self.d_plus_1} coordinates.")
        return point

    def jet_indices(self, alpha, strict=False):
        if alpha <= 0:
            return []
        return self.scaling.multi_indices(alpha, strict=strict)

    def convolved(self, edge, child, x):
        """D^k K_t * Pi_x tau for a kernel edge (t, k)."""
        return gp_convolve(self.assignment.kernel(edge.type).derivative(edge.derivative), self.pi_x(child, x))

    def pi_x(self, tree, x):
        """
        The recentred function y -> (Pi_x tree)(y).

        Raises:
            TreeError: A noise edge that is not terminal.
        """
        x = self._check_point(x)
        tree = unmark(tree)
        key = (tree, x)
        if key not in self._pi:
            self._pi[key] = self._pi_x(tree, x)
        return self._pi[key]

    def _pi_x(self, tree, x):
        if not tree.is_planted:
            result = GaussPolyFn.polynomial(Polynomial.shifted_power(tree.root, x))
            for factor in tree.planted_factors():
                result = result * self.pi_x(factor, x)
            return result
        (edge, child), = tree.branches
        if self.scaling.is_noise(edge.type):
            if not child.is_unit:
                raise TreeError(f"Noise edge {edge.type!r} must be terminal.")
            return self.assignment.noise(edge.type).derivative(edge.derivative)
        value = self.convolved(edge, child, x)
        alpha = planted_degree(edge, child, self.scaling)
        jet = Polynomial.zero(self.d_plus_1)
        for ell in self.jet_indices(alpha):
            coeff = value.derivative(ell).evaluate(x)
            if coeff:
                jet = jet + Polynomial.shifted_power(ell, x) * (coeff / ell.factorial())
        return value - GaussPolyFn.polynomial(jet)

    def f_x(self, tree, x, xbar):
        """
        f_x^(xb) on a positive planted tree.

        Raises:
            DomainError: The planted tree has non-positive degree or a noise edge.
        """
        x, xbar = self._check_point(x), self._check_point(xbar)
        tree = unmark(tree)
        if not tree.is_planted:
            raise DomainError(f"f_x is computed here on planted trees only, got {tree!r}.")
        (edge, child), = tree.branches
        alpha = planted_degree(edge, child, self.scaling)
        if alpha <= 0 or self.scaling.is_noise(edge.type):
            raise DomainError(f"{tree!r} is not in the positive part.")
        value = self.convolved(edge, child, x)
        total = 0.0
        for ell in self.jet_indices(alpha):
            shift = tuple(b - a for a, b in zip(x, xbar))
            total -= ell.power(shift) / ell.factorial() * value.derivative(ell).evaluate(x)
        return total

    def gamma(self, tree, x, y):
        """
        Gamma_xy(tree) as a TreeSum with float coefficients.
        """
        x, y = self._check_point(x), self._check_point(y)
        tree = unmark(tree)
        key = (tree, x, y)
        if key not in self._gamma:
            self._gamma[key] = self._gamma_step(tree, x, y)
        return self._gamma[key]

    def _gamma_step(self, tree, x, y):
        if not tree.is_planted:
            result = self.shifted_monomial(tree.root, x, y)
            for factor in tree.planted_factors():
                result = result.multiply(self.gamma(factor, x, y), tree_product)
            return result
        (edge, child), = tree.branches
        inner = self.gamma(child, x, y)
        result = inner.map_keys(lambda image: plant(edge, image), cls=TreeSum)
        if self.scaling.is_noise(edge.type):
            return result
        alpha = planted_degree(edge, child, self.scaling)
        for ell in self.jet_indices(alpha, strict=True):
            value = 0.0
            for image, coeff in inner.items():
                value += coeff * self.pi_x(plant(edge.shifted(ell), image), x).evaluate(y)
            if value:
                result = result - self.shifted_monomial(ell, x, y) * (value / ell.factorial())
        return result

    def shifted_monomial(self, k, x, y):
        """(X + (x - y) 1)^k expanded into monomials."""
        k = MultiIndex(tuple(k))
        shift = tuple(a - b for a, b in zip(x, y))
        terms = []
        for j in k.below():
            coeff = k.binomial(j) * (k - j).power(shift)
            if coeff:
                terms.append((monomial(j), coeff))
        return TreeSum(terms)
