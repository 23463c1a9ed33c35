"""
Birkhoff-type factorisation through a coaction.

For a character phi on the comodule H^ and a Rota-Baxter map Q (or a family Q_alpha indexed by
a degree on H) the counterterm lives on H:

    phi_bar(iota tau) = phi(iota tau) + sum' phi(iota(tau)') phi_-(iota(tau)'')
    phi_-(tau)        = -Q(phi_bar(iota tau))
    phi_+             = (phi (x) phi_-) Delta^
"""
import logging

from renormalisation.birkhoff.characters import BirkhoffResult, LinearMap
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)


class ComoduleRecursion:
    """
    The counterterm recursion over a comodule.

    Args:
        phi (LinearMap): A character on H^.
        comodule (Comodule): The coaction and the injection of H into H^.
        projector (callable): The map Q, or None when `family` is given.
        family (callable): `family(alpha, value)`, a Rota-Baxter family.
        degree (callable): The index alpha = |tau| used with `family`.
        strategy (str): `recursive` or `worklist`.
    """

    def __init__(self, phi, comodule, projector=None, family=None, degree=None, strategy=RECURSIVE):
        if (projector is None) == (family is None):
            raise DomainError("Give either a Rota-Baxter map or a Rota-Baxter family.")
        if family is not None and degree is None:
            raise DomainError("A Rota-Baxter family needs a degree on H.")
        self.phi = phi
        self.comodule = comodule
        self.projector = projector
        self.family = family
        self.degree = degree
        self.strategy = strategy
        self.algebra = phi.algebra
        self._memo = {}

    def project(self, element, value):
        if self.family is not None:
            return self.family(self.degree(element), value)
        return self.projector(value)

    def step(self, element, lookup):
        value = self.phi(self.comodule.injection(element))
        for (hat_leg, leg), coeff in self.comodule.oriented(self.comodule.reduced(element)):
            value = value + self.phi(hat_leg) * self._counterterm(leg, lookup) * coeff
        return value

    def _counterterm(self, element, lookup):
        if element.is_unit:
            return self.algebra.unit()
        return -self.project(element, lookup(element))

    def preparation_value(self, element):
        """phi_bar o iota, zero on the unit."""
        element = self.comodule.normalise(element)
        if element.is_unit:
            return self.algebra.zero()
        return evaluate(element, self.step, strategy=self.strategy, memo=self._memo)

    def counterterm_value(self, element):
        element = self.comodule.normalise(element)
        if element.is_unit:
            return self.algebra.unit()
        return -self.project(element, self.preparation_value(element))

    def renormalised_value(self, element):
        total = self.algebra.zero()
        for (hat_leg, leg), coeff in self.comodule.oriented(self.comodule.coaction(element)):
            total = total + self.phi(hat_leg) * self.counterterm_value(leg) * coeff
        return total

    def result(self):
        logger.debug("Comodule recursion over %s", self.comodule.name)
        return BirkhoffResult(
            counterterm=LinearMap(self.algebra, self.counterterm_value, name='phi_-'),
            renormalised=LinearMap(self.algebra, self.renormalised_value, name='phi_+'),
            preparation=LinearMap(self.algebra, self.preparation_value, name='phi_bar'),
            provenance='comodule',
            details={'comodule': self.comodule.name},
        )


def comodule_birkhoff(phi, comodule, projector=None, family=None, degree=None, strategy=RECURSIVE):
    """
    Run the counterterm recursion over a comodule.

    With Q = id the counterterm is phi composed with the twisted antipode of the comodule.

    Returns:
        BirkhoffResult: `counterterm` is defined on H, `renormalised` on H^ and `preparation` on H.
    """
    return ComoduleRecursion(phi, comodule, projector=projector, family=family, degree=degree,
                             strategy=strategy).result()
