"""
The antipode of the negative forest algebra and its twisted version.

On a tree of negative degree both read

    A tau = - sum A(F) . i(tau / F)

over the terms F (x) tau / F of the coaction other than the full extraction. The twisted antipode
keeps every contracted tree; the antipode of the quotient drops the forests holding a tree of
non-negative degree. Both are multiplicative on forests.
"""
import logging

from renormalisation.negative.forests import as_forest
from renormalisation.trees.linear import ForestSum
from renormalisation.trees.tree import DecoratedTree, Forest
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)


def _forest_product(a, b):
    return a * b


class NegativeAntipode:
    """
    Args:
        coaction (NegCoaction): The negative coaction.
        twisted (bool): Compute the twisted antipode, valued in the forest algebra before the quotient.
        strategy (str): `recursive` or `worklist`.
    """

    def __init__(self, coaction, twisted=True, strategy=RECURSIVE):
        self.coaction = coaction
        self.space = coaction.space
        self.twisted = twisted
        self.strategy = strategy
        self._memo = {}

    def _product(self, values):
        result = ForestSum.of(Forest())
        for value in values:
            result = result.multiply(value, _forest_product)
        return result

    def step(self, tree, lookup):
        full = as_forest(tree)
        terms = ForestSum()
        for (forest, contracted), coeff in self.coaction(tree).items():
            if forest == full and contracted.is_unit:
                continue
            value = self._product([lookup(piece) for piece in forest] + [ForestSum.of(as_forest(contracted))])
            terms = terms + value * coeff
        if not self.twisted:
            terms = self.space.project(terms)
        return -terms

    def on_tree(self, tree):
        if tree.is_unit:
            return ForestSum.of(Forest())
        if not self.space.is_negative(tree):
            raise DomainError(f"{tree!r} is not in the negative forest algebra.")
        return evaluate(tree, self.step, strategy=self.strategy, memo=self._memo)

    def __call__(self, element):
        """Apply the antipode to a tree, a forest or a ForestSum."""
        if isinstance(element, DecoratedTree):
            return self.on_tree(element)
        if isinstance(element, Forest):
            return self._product([self.on_tree(tree) for tree in self.space.check(element)])
        result = ForestSum()
        for forest, coeff in element.items():
            result = result + self(forest) * coeff
        return result


def negative_twisted_antipode(element, coaction, strategy=RECURSIVE):
    """
    The negative twisted antipode of a tree, forest or ForestSum of the quotient.

    Raises:
        DomainError: The input holds a tree of non-negative degree.
    """
    return NegativeAntipode(coaction, twisted=True, strategy=strategy)(element)


def negative_antipode(element, coaction, strategy=RECURSIVE):
    """The antipode of the quotient forest algebra."""
    return NegativeAntipode(coaction, twisted=False, strategy=strategy)(element)
