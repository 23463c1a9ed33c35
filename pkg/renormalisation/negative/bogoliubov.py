"""
The negative Bogoliubov recursion.

For a character psi on forests with values in symmetrised tensors, and the projector
Q = ev_0 o E~ onto the constants:

    psi_bar(F) = sum psi_-(A) psi(B)   over the terms A (x) B of the coaction of F but F (x) 1_1
    psi_-(tau) = -Q(psi_bar(tau))      on trees of negative degree, multiplicative on forests
    psi_+(F)   = sum psi_-(A) psi(B)   over every term
"""
import logging
import math

from renormalisation.birkhoff.characters import FOREST_PRODUCT, BirkhoffResult, Character, LinearMap
from renormalisation.birkhoff.structures import Comodule
from renormalisation.negative.forests import as_forest
from renormalisation.targets.algebras import symtensor_algebra
from renormalisation.targets.symtensor import SymTensor, expectation_projector, sym_expectation
from renormalisation.trees.tree import Forest
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)


def lifted_character(pi, name='psi'):
    """The multiplicative extension of `pi` to forests: a tree becomes a one-factor tensor."""
    return Character(symtensor_algebra(), lambda tree: SymTensor.sym(pi(tree)), product=FOREST_PRODUCT, name=name)


class NegativeBogoliubov:
    """
    Args:
        psi (Character): A character on forests into symmetrised tensors.
        coaction (NegCoaction): The negative coaction.
        projector (callable): Q, by default the expectation at the origin.
        strategy (str): `recursive` or `worklist`.
    """

    def __init__(self, psi, coaction, projector=expectation_projector, strategy=RECURSIVE):
        self.psi = psi
        self.coaction = coaction
        self.space = coaction.space
        self.projector = projector
        self.strategy = strategy
        self.algebra = psi.algebra
        self._memo = {}

    def _sum(self, forest, lookup, full):
        total = self.algebra.zero()
        for (left, right), coeff in self.coaction.on_forest(forest).items():
            if not full and left == forest and right.is_unit:
                continue
            value = self.psi(right) * coeff
            for tree in left:
                value = value * lookup(tree)
            total = total + value
        return total

    def step(self, tree, lookup):
        return -self.projector(self._sum(as_forest(tree), lookup, full=False))

    def _counterterm_tree(self, tree):
        return evaluate(tree, self.step, strategy=self.strategy, memo=self._memo)

    def counterterm(self, forest):
        """psi_-, a constant tensor."""
        forest = self.space.check(forest)
        return math.prod((self._counterterm_tree(tree) for tree in forest), start=self.algebra.unit())

    def counterterm_value(self, forest):
        return self.counterterm(forest).constant_term

    def preparation(self, forest):
        forest = as_forest(forest)
        if forest.is_unit:
            return self.algebra.zero()
        return self._sum(forest, self._counterterm_tree, full=False)

    def renormalised(self, forest):
        return self._sum(as_forest(forest), self._counterterm_tree, full=True)

    def result(self):
        logger.debug("Negative Bogoliubov recursion through %s", self.coaction.name)
        return BirkhoffResult(
            counterterm=LinearMap(self.algebra, self.counterterm, name='psi_-'),
            renormalised=LinearMap(self.algebra, self.renormalised, name='psi_+'),
            preparation=LinearMap(self.algebra, self.preparation, name='psi_bar'),
            provenance='negative',
            details={'coaction': self.coaction.name},
        )


def negative_bogoliubov(psi, coaction, projector=expectation_projector, strategy=RECURSIVE):
    """
    Run the negative Bogoliubov recursion.

    Returns:
        BirkhoffResult: `counterterm` (psi_-) is defined on forests of the quotient, `renormalised`
        (psi_+) and `preparation` (psi_bar) on all forests.
    """
    return NegativeBogoliubov(psi, coaction, projector=projector, strategy=strategy).result()


def negative_comodule(coaction):
    """Forests as a left comodule over the quotient, for `comodule_birkhoff`."""
    return Comodule(
        name='negative',
        coaction=coaction.on_forest,
        injection=as_forest,
        unit=Forest,
        hat_unit=Forest,
        product=FOREST_PRODUCT,
        side='left',
        normalise=coaction.space.check,
    )


def twisted_counterterm(psi, antipode, forest, projector=expectation_projector):
    """psi_- through the twisted antipode: Q(psi(A~ F))."""
    return projector(psi(antipode(forest)))


def in_positive_range(value, tolerance):
    """Whether E~(value)(0) vanishes, i.e. `value` lies in the range of id - Q."""
    return abs(sym_expectation(value)) <= tolerance
