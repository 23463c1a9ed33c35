"""
Compatibility of the negative coaction with the positive one:

    M^(13)(2)(4) (Delta^- (x) Delta^-) Delta^+  =  (id (x) Delta^+) Delta^-

Both sides are TensorSums keyed by (forest, tree, positive tree).
"""
import logging

from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import CoproductMode
from renormalisation.trees.linear import TensorSum

logger = logging.getLogger(__name__)

#: Every edge can be cut and no derivative is moved onto the polynomials.
CK_STYLE = CoproductMode.full(0)


def cointeraction_sides(tree, coaction, mode=CK_STYLE):
    """
    Args:
        tree (DecoratedTree): The tree.
        coaction (NegCoaction): The negative coaction.
        mode (CoproductMode): The positive coaction, by default the Connes-Kreimer-style one.

    Returns:
        tuple[TensorSum, TensorSum]: The left and right hand sides.
    """
    scaling = coaction.scaling
    lhs = TensorSum(
        ((left_forest * right_forest, left_tree, right_tree), coeff * left_coeff * right_coeff)
        for (left, right), coeff in delta_plus(tree, mode, scaling).items()
        for (left_forest, left_tree), left_coeff in coaction(left).items()
        for (right_forest, right_tree), right_coeff in coaction(right).items()
    )
    rhs = TensorSum(
        ((forest, left, right), coeff * positive_coeff)
        for (forest, contracted), coeff in coaction(tree).items()
        for (left, right), positive_coeff in delta_plus(contracted, mode, scaling).items()
    )
    return coaction.space.project(lhs), coaction.space.project(rhs)


def cointeraction_check(tree, coaction, mode=CK_STYLE):
    """Whether both sides agree exactly on `tree`."""
    lhs, rhs = cointeraction_sides(tree, coaction, mode=mode)
    if lhs != rhs:
        logger.debug("Cointeraction fails on %r (%s)", tree, mode)
    return lhs == rhs
