"""
Exact checks of the Hopf algebra and comodule axioms on single trees.

Each check returns a `Comparison` of both sides, so callers can report the discrepancy.
"""
import logging
from dataclasses import dataclass

from renormalisation.hopf.antipodes import AntipodeRecursion, antipode_plus
from renormalisation.hopf.ck import as_forest, ck_antipode, ck_coproduct, ck_counit
from renormalisation.hopf.coproducts import (apply_leg, comodule_sides, counit, delta_plus,
                                             left_grade, multiply_legs)
from renormalisation.hopf.modes import (BAR, HAT, SIMPLIFIED_BAR, SIMPLIFIED_HAT, AntipodeVariant,
                                        CoproductMode)
from renormalisation.trees.linear import ForestSum, LinearCombination, TreeSum
from renormalisation.trees.tree import Forest, mark_root, planted_degree, unit
from renormalisation.utils.conf import tolerances

logger = logging.getLogger(__name__)


@dataclass
class Comparison:
    lhs: LinearCombination
    rhs: LinearCombination

    @property
    def holds(self):
        return self.lhs == self.rhs

    def is_close(self, rtol=None, atol=None):
        default_rtol, default_atol = tolerances()
        return self.lhs.is_close(
            self.rhs,
            rtol=default_rtol if rtol is None else rtol,
            atol=default_atol if atol is None else atol,
        )

    @property
    def gap(self):
        return self.lhs.max_gap(self.rhs)


def _unit_sum(tree):
    return TreeSum.of(unit(tree.d_plus_1), counit(tree))


def counit_hat(tree, scaling):
    """(id (x) 1*) Delta^ tau = tau."""
    hat = delta_plus(tree, HAT, scaling)
    lhs = TreeSum((left, coeff) for (left, right), coeff in hat.items() if right.is_unit)
    return Comparison(lhs, TreeSum.of(tree))


def counit_bar(tree, scaling, mode=BAR):
    """(1* (x) id) Delta-bar tau = tau on the positive part."""
    bar = delta_plus(tree, mode, scaling)
    lhs = TreeSum((right, coeff) for (left, right), coeff in bar.items() if left.is_unit)
    return Comparison(lhs, TreeSum.of(mark_root(tree)))


def coassociativity(tree, scaling, mode=BAR):
    """(Delta-bar (x) id) Delta-bar = (id (x) Delta-bar) Delta-bar."""
    bar = delta_plus(tree, mode, scaling)
    lhs = apply_leg(bar, 0, lambda leg: delta_plus(leg, mode, scaling))
    rhs = apply_leg(bar, 1, lambda leg: delta_plus(leg, mode, scaling))
    return Comparison(lhs, rhs)


def comodule(tree, scaling, mode=HAT):
    """(Delta^ (x) id) Delta^ = (id (x) Delta-bar) Delta^."""
    return Comparison(*comodule_sides(tree, scaling, mode=mode))


def antipode_identity(tree, scaling, variant=AntipodeVariant.BAR, side=0):
    """
    M (A (x) id) Delta-bar tau = 1*(tau) 1 for the antipode of the positive part.

    `side=1` checks M (id (x) A) Delta-bar instead.
    """
    mode = SIMPLIFIED_BAR if variant is AntipodeVariant.SIMPLIFIED else BAR
    recursion = AntipodeRecursion(variant, scaling)
    memo = {}
    bar = delta_plus(tree, mode, scaling)
    applied = apply_leg(bar, side, lambda leg: recursion(leg, memo=memo))
    return Comparison(multiply_legs(applied), _unit_sum(tree))


def stabilisation(tree, scaling, grade, cutoffs):
    """
    Terms of the full coproduct with left grade at most `grade`, for every cutoff above it.

    Returns:
        list: One `Comparison` per cutoff, against the smallest cutoff.
    """
    cutoffs = sorted(cutoff for cutoff in cutoffs if cutoff >= grade)
    sides = [
        delta_plus(tree, CoproductMode.full(cutoff), scaling).filter(
            lambda key: left_grade(key[0], scaling) <= grade
        )
        for cutoff in cutoffs
    ]
    return [Comparison(side, sides[0]) for side in sides[1:]]


def simplified_applies(tree, scaling):
    """
    Whether every left leg J_(t,k)(tau') met by the simplified recursion has positive degree.
    """
    for factor in tree.planted_factors():
        (edge, child), = factor.branches
        for (left, right), _ in delta_plus(child, SIMPLIFIED_HAT, scaling).items():
            if planted_degree(edge, left, scaling) <= 0:
                return False
            if not right.is_unit and not simplified_applies(right, scaling):
                return False
    return True


def simplified_consistency(tree, scaling):
    """
    The simplified twisted antipode against the simplified antipode, or None when a left leg of
    non-positive degree makes them differ.
    """
    if not simplified_applies(tree, scaling):
        return None
    return Comparison(
        antipode_plus(tree, AntipodeVariant.SIMPLIFIED_TWISTED, scaling),
        antipode_plus(tree, AntipodeVariant.SIMPLIFIED, scaling),
    )


def ck_counit_check(forest, side=0):
    """The counit applied to leg `side` of the coproduct gives the identity."""
    kept = 1 - side
    lhs = ForestSum((key[kept], coeff) for key, coeff in ck_coproduct(forest).items() if key[side].is_unit)
    return Comparison(lhs, ForestSum.of(as_forest(forest)))


def ck_coassociativity(forest):
    coproduct = ck_coproduct(forest)
    return Comparison(apply_leg(coproduct, 0, ck_coproduct), apply_leg(coproduct, 1, ck_coproduct))


def ck_antipode_identity(forest):
    """M (A (x) id) Delta = 1* 1 on forests."""
    lhs = ForestSum()
    for (left, right), coeff in ck_coproduct(forest).items():
        lhs += ck_antipode(left).multiply(ForestSum.of(right), Forest.__mul__) * coeff
    return Comparison(lhs, ForestSum.of(Forest(), ck_counit(forest)))
