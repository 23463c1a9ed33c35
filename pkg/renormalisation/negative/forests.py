"""
Forests of decorated trees for negative renormalisation.

The free commutative algebra over decorated trees, with the trivial tree identified with the empty
forest 1_1. In the quotient by the ideal of trees of non-negative degree, a forest vanishes as soon
as one of its trees has degree >= 0.
"""
import logging
from dataclasses import dataclass

from renormalisation.trees.decorations import Scaling
from renormalisation.trees.linear import ForestSum
from renormalisation.trees.tree import DecoratedTree, Forest, degree
from renormalisation.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def as_forest(element):
    """The injection of a tree (or a forest) into forests, dropping trivial trees."""
    trees = (element,) if isinstance(element, DecoratedTree) else tuple(element)
    return Forest(tuple(tree for tree in trees if not tree.is_unit))


@dataclass(frozen=True)
class NegForestSpace:
    """
    The forest algebra over a scaling.

    Args:
        scaling (Scaling): The degree table.
        quotient (bool): Work in the quotient, where forests holding a tree of degree >= 0 are zero.
    """

    scaling: Scaling
    quotient: bool = True

    def unit(self):
        return Forest()

    def forest(self, *trees):
        return as_forest(trees)

    def is_negative(self, tree):
        return degree(tree, self.scaling) < 0

    def is_zero(self, forest):
        return self.quotient and not all(self.is_negative(tree) for tree in forest)

    def project(self, combination):
        """Drop the forests that vanish; TensorSum terms are projected on every forest leg."""
        return combination.filter(lambda key: not any(
            self.is_zero(leg) for leg in (key if isinstance(key, tuple) else (key,)) if isinstance(leg, Forest)
        ))

    def product(self, a, b):
        """The forest product, extended bilinearly to ForestSum values."""
        if isinstance(a, Forest) and isinstance(b, Forest):
            return ForestSum() if self.is_zero(a * b) else ForestSum.of(a * b)
        return self.project(ForestSum.of(a) if isinstance(a, Forest) else a).multiply(
            ForestSum.of(b) if isinstance(b, Forest) else b, lambda u, v: u * v
        ).filter(lambda forest: not self.is_zero(forest))

    def counit(self, forest):
        """The counit 1_1*."""
        return 1 if forest.is_unit else 0

    def grade(self, forest):
        return forest.edge_count

    def check(self, forest):
        """Raise `DomainError` if `forest` is zero in the quotient."""
        forest = as_forest(forest)
        if self.is_zero(forest):
            raise DomainError(f"{forest!r} is zero in the quotient: it holds a tree of non-negative degree.")
        return forest
