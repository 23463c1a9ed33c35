"""
The negative coaction: extraction of negative subtrees and contraction of the remainder.

A subtree is spanned by a vertex set that contains, with every vertex but its top one, the parent
of that vertex; it holds every edge between its vertices. Marked edges (the J symbols of the
positive part) are never extracted. A subforest is a set of vertex-disjoint subtrees of negative
degree. Its contraction replaces every extracted subtree by one node; edge decorations are
unchanged.

Node decorations are split between the two legs: a vertex decorated by n keeps n_A <= n in the
extracted subtree, with weight binomial(n, n_A), and the contracted node carries the sum of the
remainders n - n_A. With zero node decorations this is the plain contraction, and extracting a
whole tree with every n_A = n gives tree (x) 1.

The deformed coaction with extended decorations is not implemented: `NegCoaction` accepts any
implementation and `extraction_contraction` is the default one.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable

from renormalisation.hopf.coproducts import apply_leg
from renormalisation.negative.forests import NegForestSpace, as_forest
from renormalisation.trees.decorations import Scaling
from renormalisation.trees.linear import TensorSum, TreeSum
from renormalisation.trees.tree import DecoratedTree, Forest, degree

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1 << 14)
def _grown(tree, scaling):
    """
    The subtrees topped at the root of `tree`, each with what remains below it.

    Returns tuples (subtree, remainder, hanging branches, extracted pieces, weight): the remainder
    is the part of the node decorations left to the contracted node, the hanging branches are the
    contracted subtrees attached under the subtree's vertices.
    """
    options = [(kept, (), tree.root - kept, (), (), tree.root.binomial(kept)) for kept in tree.root.below()]
    for edge, child in tree.branches:
        grown = []
        for kept, inner, remainder, hanging, pieces, weight in options:
            for child_pieces, contracted, child_weight in _extractions(child, scaling):
                grown.append((kept, inner, remainder, hanging + ((edge, contracted),), pieces + child_pieces,
                              weight * child_weight))
            if edge.marked:
                continue
            for subtree, child_remainder, child_hanging, child_pieces, child_weight in _grown(child, scaling):
                grown.append((kept, inner + ((edge, subtree),), remainder + child_remainder,
                              hanging + child_hanging, pieces + child_pieces, weight * child_weight))
        options = grown
    return tuple((DecoratedTree(kept, inner), remainder, hanging, pieces, weight)
                 for kept, inner, remainder, hanging, pieces, weight in options)


@lru_cache(maxsize=1 << 14)
def _extractions(tree, scaling):
    """Every subforest of negative subtrees of `tree`, as (pieces, contracted tree, weight) triples."""
    options = [((), (), 1)]
    for edge, child in tree.branches:
        options = [
            (branches + ((edge, contracted),), pieces + child_pieces, weight * child_weight)
            for branches, pieces, weight in options
            for child_pieces, contracted, child_weight in _extractions(child, scaling)
        ]
    results = [(pieces, DecoratedTree(tree.root, branches), weight) for branches, pieces, weight in options]
    for subtree, remainder, hanging, pieces, weight in _grown(tree, scaling):
        if degree(subtree, scaling) < 0:
            results.append((pieces + (subtree,), DecoratedTree(remainder, hanging), weight))
    return tuple(results)


@lru_cache(maxsize=1 << 14)
def extraction_contraction(tree, scaling):
    """
    The undeformed negative coaction of a tree.

    Args:
        tree (DecoratedTree): The tree; marked root edges are kept out of every extraction.
        scaling (Scaling): The degree table.

    Returns:
        TensorSum: Terms keyed by (extracted forest, contracted tree). The empty extraction gives
        1_1 (x) tree and, for a tree of negative degree, the full extraction gives tree (x) 1.
    """
    return TensorSum(
        ((Forest(pieces), contracted), Fraction(weight))
        for pieces, contracted, weight in _extractions(tree, scaling)
    )


@dataclass(frozen=True)
class NegCoaction:
    """
    A negative coaction, given on trees and extended multiplicatively to forests.

    Args:
        name (str): Label.
        scaling (Scaling): The degree table.
        on_tree (callable): Tree -> TensorSum of (forest, tree) pairs.
    """

    name: str
    scaling: Scaling
    on_tree: Callable

    @cached_property
    def space(self):
        return NegForestSpace(self.scaling)

    def __call__(self, tree):
        return self.on_tree(tree)

    def on_forest(self, forest):
        """The multiplicative extension: right legs are forests of contracted trees."""
        result = TensorSum.of((Forest(), Forest()))
        for tree in as_forest(forest):
            image = self.on_tree(tree).map_keys(lambda key: (key[0], as_forest(key[1])))
            result = result.multiply(image, lambda u, v: (u[0] * v[0], u[1] * v[1]))
        return result

    def coproduct(self, forest):
        """The coproduct of the quotient, both legs projected."""
        return self.space.project(self.on_forest(self.space.check(forest)))

    def reduced(self, forest):
        """The coproduct minus 1_1 (x) forest minus forest (x) 1_1."""
        forest = self.space.check(forest)
        return self.coproduct(forest) - TensorSum([((Forest(), forest), 1), ((forest, Forest()), 1)])

    def counit_sides(self, tree):
        """(1_1* (x) id) applied to the coaction of `tree`, next to `tree` itself."""
        image = TreeSum(
            (contracted, coeff) for (forest, contracted), coeff in self.on_tree(tree).items() if forest.is_unit
        )
        return image, TreeSum.of(tree)

    def coassociativity_sides(self, tree):
        """
        (Delta-bar (x) id) and (id (x) Delta) applied to the coaction of `tree`, both projected on
        the quotient.
        """
        image = self.on_tree(tree)
        lhs = apply_leg(image, 0, lambda forest: self.space.project(self.on_forest(forest)))
        rhs = apply_leg(image, 1, self.on_tree)
        return self.space.project(lhs), self.space.project(rhs)


def default_coaction(scaling):
    """The extraction-contraction instance."""
    return NegCoaction('extraction-contraction', scaling, lambda tree: extraction_contraction(tree, scaling))
