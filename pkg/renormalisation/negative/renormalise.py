"""
The renormalisation map M = (psi_- (x) id) Delta^- and the renormalised model.

The renormalised model is built from Pi^M = Pi M through the positive coaction, like the model of
any character. Where the cointeraction holds it agrees with Pi_x M.
"""
import logging

from renormalisation.birkhoff.characters import LinearMap
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import HAT
from renormalisation.modelmaps.model import build_model
from renormalisation.negative.cointeraction import cointeraction_check
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import unmark

logger = logging.getLogger(__name__)


class RenormalisationMap:
    """
    Args:
        counterterm (callable): Scalar psi_- on forests of the quotient.
        coaction (NegCoaction): The negative coaction.
    """

    def __init__(self, counterterm, coaction):
        self.counterterm = counterterm
        self.coaction = coaction
        self._memo = {}

    def on_tree(self, tree):
        if tree not in self._memo:
            terms = []
            for (forest, contracted), coeff in self.coaction(tree).items():
                weight = float(self.counterterm(forest)) * float(coeff)
                if weight:
                    terms.append((contracted, weight))
            self._memo[tree] = TreeSum(terms)
        return self._memo[tree]

    def __call__(self, element):
        if isinstance(element, TreeSum):
            return element.map(self.on_tree)
        return self.on_tree(element)


def counit_counterterm(forest):
    """The counit 1_1*: the trivial counterterm."""
    return 1 if forest.is_unit else 0


def renormalisation_map(counterterm, coaction):
    """
    Build M from a scalar counterterm.

    Returns:
        RenormalisationMap: Maps a tree (or a TreeSum) to a TreeSum with float coefficients.
    """
    return RenormalisationMap(counterterm, coaction)


def renormalised_character(pi, renormalisation):
    """Pi^M = Pi o M. On the positive part it is multiplicative since M never crosses J symbols."""
    return LinearMap(pi.algebra, lambda tree: pi(renormalisation(tree)), name=f"{pi.name}^M")


class RenormalisedModel:
    """
    The model of Pi^M next to the model of Pi composed with M.

    Args:
        pi (Character): The character Pi.
        renormalisation (RenormalisationMap): M.
        scaling (Scaling): The degree table.
    """

    def __init__(self, pi, renormalisation, scaling):
        self.renormalisation = renormalisation
        self.scaling = scaling
        self.model = build_model(pi, scaling)
        self.renormalised = build_model(renormalised_character(pi, renormalisation), scaling)

    def hat_pi(self, x):
        """The renormalised Pi-hat_x = (Pi M (x) f_x M) Delta^+."""
        return self.renormalised.Pi(x)

    def pi_m(self, x, tree):
        """Pi_x M tree."""
        return self.model.Pi(x)(self.renormalisation(tree))

    def gap(self, x, tree):
        return self.hat_pi(x)(tree).max_gap(self.pi_m(x, tree))

    def is_verified(self, tree, x, tolerance):
        """
        Whether the formula Pi-hat_x = Pi_x M is expected on `tree`: the cointeraction holds for the
        positive coaction in use, and M commutes with f_x on the right legs.
        """
        if not cointeraction_check(unmark(tree), self.renormalisation.coaction, mode=HAT):
            return False
        f_x, hat_f_x = self.model.f(x), self.renormalised.f(x)
        for (_, right), _ in delta_plus(unmark(tree), HAT, self.scaling).items():
            if abs(hat_f_x(right) - f_x(self.renormalisation(right))) > tolerance:
                return False
        return True
