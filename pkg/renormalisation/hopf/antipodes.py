"""
Antipodes and twisted antipodes on decorated trees.

All variants are multiplicative and send X_i to -X_i. On a planted tree J_(t,p)(tau) they read

    A J_(t,p)(tau) = - sum_l (-X)^l / l!  M (J_(t,p+l) (x) A) Delta tau

and differ in the range of l, the coproduct used on tau and whether the new root edge is
projected onto the positive part.
"""
import logging
from fractions import Fraction

from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import HAT, SIMPLIFIED_HAT, AntipodeVariant, CoproductMode
from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import (DecoratedTree, is_positive, mark_root, monomial,
                                        planted_degree, tree_product, unit, unmark)
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)


def _polynomial_antipode(k):
    sign = -1 if sum(k) % 2 else 1
    return TreeSum.of(monomial(k), sign)


def _product_step(tree, lookup):
    """Multiplicativity: A(X^k prod_i J_i) = A(X^k) prod_i A(J_i)."""
    result = _polynomial_antipode(tree.root)
    for factor in tree.planted_factors():
        result = result.multiply(lookup(factor), tree_product)
    return result


class AntipodeRecursion:
    """
    One antipode variant over a fixed scaling.

    Args:
        variant (AntipodeVariant): Which antipode.
        scaling (Scaling): The degree table.
        cutoff (Fraction): Bound on |l|_s for the full antipode.
    """

    def __init__(self, variant, scaling, cutoff=None):
        self.variant = AntipodeVariant(variant)
        self.scaling = scaling
        if self.variant is AntipodeVariant.FULL_TRUNCATED:
            if cutoff is None:
                raise DomainError("The full antipode needs a cutoff.")
            self.mode = CoproductMode.full(cutoff)
        elif self.variant.is_simplified:
            self.mode = SIMPLIFIED_HAT
        else:
            self.mode = HAT

    def prepare(self, tree):
        """Check the domain and put the markers in the form used by the memo table."""
        if self.variant is AntipodeVariant.FULL_TRUNCATED:
            return unmark(tree)
        if not is_positive(tree, self.scaling):
            raise DomainError(f"The {self.variant.value} antipode needs a tree of the positive part.")
        return mark_root(tree)

    def step(self, tree, lookup):
        if not tree.is_planted:
            return _product_step(tree, lookup)
        (edge, child), = tree.branches
        zero = MultiIndex.zero(tree.d_plus_1)
        marked = self.variant is not AntipodeVariant.FULL_TRUNCATED
        project = self.variant in (AntipodeVariant.BAR, AntipodeVariant.SIMPLIFIED)

        terms = []
        for ell in self.shifts(edge, child):
            sign = -1 if sum(ell) % 2 else 1
            weight = Fraction(-sign, ell.factorial())
            shifted = edge.shifted(ell).with_marker(marked)
            for (left, right), coeff in delta_plus(child, self.mode, self.scaling).items():
                if project and planted_degree(shifted, left, self.scaling) <= 0:
                    continue
                head = tree_product(monomial(ell), DecoratedTree(zero, ((shifted, left),)))
                tail = lookup(right if marked else unmark(right))
                for image, image_coeff in tail.items():
                    terms.append((tree_product(head, image), weight * coeff * image_coeff))
        return TreeSum(terms)

    def shifts(self, edge, child):
        if self.variant is AntipodeVariant.FULL_TRUNCATED:
            return self.scaling.multi_indices(self.mode.cutoff)
        if self.variant.is_simplified:
            return [MultiIndex.zero(child.d_plus_1)]
        bound = planted_degree(edge, child, self.scaling)
        if self.variant is AntipodeVariant.TWISTED:
            return self.scaling.multi_indices(bound) if bound >= 0 else []
        # BAR: the projection keeps |l|_s < |J_(t,p)(tau)|_s
        return self.scaling.multi_indices(bound, strict=True) if bound > 0 else []

    def __call__(self, tree, strategy=RECURSIVE, memo=None):
        return evaluate(self.prepare(tree), self.step, strategy=strategy, memo=memo)


def antipode_plus(tree, variant, scaling, cutoff=None, strategy=RECURSIVE):
    """
    Apply an antipode variant to a tree.

    Args:
        tree (DecoratedTree): The input, in the positive part for every variant but the full one.
        variant (AntipodeVariant): FULL_TRUNCATED, BAR, TWISTED, SIMPLIFIED or SIMPLIFIED_TWISTED.
        scaling (Scaling): The degree table.
        cutoff (Fraction): Bound on |l|_s, only for FULL_TRUNCATED.
        strategy (str): `recursive` or `worklist`.

    Returns:
        TreeSum: The image. Marked edges stand for J (positive part) or J-hat (twisted output).
    """
    if tree.is_unit:
        return TreeSum.of(unit(tree.d_plus_1))
    return AntipodeRecursion(variant, scaling, cutoff=cutoff)(tree, strategy=strategy)


def apply_antipode(combination, variant, scaling, cutoff=None, strategy=RECURSIVE):
    """Extend an antipode linearly to a TreeSum, sharing one memo table."""
    recursion = AntipodeRecursion(variant, scaling, cutoff=cutoff)
    memo = {}
    return combination.map(lambda tree: recursion(tree, strategy=strategy, memo=memo))
