"""
Coproducts and coactions on decorated trees.

Every mode is computed by the same recursion: the polynomial part X^k at the root is split with
binomial coefficients, and each root branch I_(t,p)(tau) contributes

    (I_(t,p) (x) id) Delta tau  +  sum_l X^l / l! (x) J_(t,p+l)(tau)

with the sum over l and the projections depending on the mode. Right legs are elements of the
positive part: their root edges are marked.
"""
import logging
from fractions import Fraction
from functools import lru_cache

from renormalisation.hopf.modes import HAT, SIMPLIFIED_HAT, CoproductMode, ModeKind
from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.tree import (DecoratedTree, is_positive, monomial, planted_degree,
                                        tree_product, unit)
from renormalisation.trees.linear import TensorSum, TreeSum
from renormalisation.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def counit(tree):
    """The counit 1*: one on the unit, zero elsewhere."""
    return 1 if tree.is_unit else 0


def leg_product(a, b):
    """Multiply two tensors leg by leg with the tree product."""
    return a.multiply(b, lambda u, v: tuple(tree_product(x, y) for x, y in zip(u, v)))


def multiply_legs(combination):
    """The multiplication M of the tensor legs."""
    terms = []
    for key, coeff in combination.items():
        tree = key[0]
        for leg in key[1:]:
            tree = tree_product(tree, leg)
        terms.append((tree, coeff))
    return TreeSum(terms)


def apply_leg(combination, index, function):
    """
    Apply a linear map to one leg of a tensor.

    `function` returns a TreeSum (the leg is replaced) or a TensorSum (the leg is split).
    """
    terms = []
    for key, coeff in combination.items():
        for element, image_coeff in function(key[index]).items():
            middle = element if isinstance(element, tuple) else (element,)
            terms.append((key[:index] + middle + key[index + 1:], coeff * image_coeff))
    return TensorSum(terms)


def polynomial_coproduct(k, simplified=False):
    """
    Split X^k with binomial coefficients, or send it to X^k (x) 1 in the simplified setting.
    """
    one = unit(len(k))
    if simplified:
        return TensorSum.of((monomial(k), one))
    return TensorSum(
        ((monomial(j), monomial(k - j)), k.binomial(j))
        for j in k.below()
    )


def _check_domain(tree, mode, scaling):
    if mode.kind in (ModeKind.BAR, ModeKind.SIMPLIFIED_BAR) and not is_positive(tree, scaling):
        raise DomainError(f"{mode} coproduct needs a tree of the positive part.")
    if mode.kind is ModeKind.SIMPLIFIED_BAR and not tree.root.is_zero:
        raise DomainError("The simplified positive part contains no polynomials.")


def delta_plus(tree, mode, scaling):
    """
    Compute the coproduct of `tree` in the given mode.

    Args:
        tree (DecoratedTree): The tree.
        mode (CoproductMode): Which coproduct or coaction.
        scaling (Scaling): The degree table.

    Returns:
        TensorSum: Terms keyed by (left, right) pairs.

    Raises:
        DomainError: BAR modes on a tree outside of the positive part.
    """
    if mode.kind is ModeKind.REDUCED:
        return delta_plus_red(tree, scaling)
    _check_domain(tree, mode, scaling)
    return _delta(tree, mode, scaling)


@lru_cache(maxsize=1 << 14)
def _delta(tree, mode, scaling):
    result = polynomial_coproduct(tree.root, simplified=mode.is_simplified)
    for edge, child in tree.branches:
        result = leg_product(result, _planted(edge, child, mode, scaling))
    return result


def _planted(edge, child, mode, scaling):
    if mode.kind is ModeKind.BAR:
        inner_mode = HAT
    elif mode.kind is ModeKind.SIMPLIFIED_BAR:
        inner_mode = SIMPLIFIED_HAT
    else:
        inner_mode = mode
    project_left = mode.kind in (ModeKind.BAR, ModeKind.SIMPLIFIED_BAR)
    left_edge = edge.with_marker(True) if project_left else edge
    zero = MultiIndex.zero(child.d_plus_1)

    terms = []
    for (left, right), coeff in _delta(child, inner_mode, scaling).items():
        if project_left and planted_degree(left_edge, left, scaling) <= 0:
            continue
        terms.append(((DecoratedTree(zero, ((left_edge, left),)), right), coeff))

    if mode.kind is ModeKind.FULL_TRUNCATED:
        shifts = scaling.multi_indices(mode.cutoff)
    elif mode.kind is ModeKind.SIMPLIFIED_BAR:
        shifts = [zero]
    else:
        bound = planted_degree(edge, child, scaling)
        shifts = scaling.multi_indices(bound, strict=True) if bound > 0 else []
    for ell in shifts:
        marked = edge.shifted(ell).with_marker(True)
        terms.append(((monomial(ell), DecoratedTree(zero, ((marked, child),))), Fraction(1, ell.factorial())))
    return TensorSum(terms)


def delta_plus_red(tree, scaling):
    """
    The modified reduced coproduct.

    Zero on X^k. Otherwise the coaction minus `tree (x) 1` minus every term whose left leg is a
    pure polynomial.
    """
    if tree.is_monomial:
        return TensorSum()
    hat = _delta(tree, HAT, scaling)
    reduced = hat.filter(lambda key: not key[0].is_monomial)
    return reduced - TensorSum.of((tree, unit(tree.d_plus_1)))


def left_grade(tree, scaling):
    """Sum of |n(v)|_s over the nodes of a tree."""
    return scaling.norm(tree.root) + sum(left_grade(child, scaling) for _, child in tree.branches)


def coaction_compose_check(tree, scaling):
    """
    Whether (Delta^ (x) id) Delta^ = (id (x) Delta-bar) Delta^ holds exactly on `tree`.
    """
    lhs, rhs = comodule_sides(tree, scaling)
    if lhs != rhs:
        logger.debug("Comodule identity fails on %r", tree)
    return lhs == rhs


def comodule_sides(tree, scaling, mode=HAT):
    hat = delta_plus(tree, mode, scaling)
    bar = CoproductMode(ModeKind.SIMPLIFIED_BAR) if mode.is_simplified else CoproductMode(ModeKind.BAR)
    lhs = apply_leg(hat, 0, lambda left: _delta(left, mode, scaling))
    rhs = apply_leg(hat, 1, lambda right: delta_plus(right, bar, scaling))
    return lhs, rhs
