"""
Graded coproducts and coactions that drive the Birkhoff recursions.
"""
import logging
from dataclasses import dataclass
from typing import Callable

from renormalisation.birkhoff.characters import FOREST_PRODUCT, TREE_PRODUCT
from renormalisation.hopf import ck
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import SIMPLIFIED_BAR, SIMPLIFIED_HAT
from renormalisation.trees.linear import TensorSum
from renormalisation.trees.tree import Forest, is_positive, mark_root, unit, unmark
from renormalisation.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _is_unit(element):
    return element.is_unit


@dataclass(frozen=True)
class GradedStructure:
    """
    A graded connected bialgebra, described by its coproduct and grading.

    Args:
        name (str): Label.
        coproduct (callable): Basis element -> TensorSum of (left, right) pairs.
        grade (callable): Basis element -> non-negative integer.
        product (str): How characters on this bialgebra factor (`tree` or `forest`).
        normalise (callable): Puts an element in the form used as key of the coproduct.
    """

    name: str
    coproduct: Callable
    grade: Callable
    product: str
    normalise: Callable = lambda element: element

    def reduced(self, element):
        """The coproduct without the terms whose left or right leg is the unit."""
        return self.coproduct(self.normalise(element)).filter(
            lambda key: not (_is_unit(key[0]) or _is_unit(key[1]))
        )

    def check_connected(self, element):
        """
        Raise `DomainError` if a leg of grade 0 other than the unit appears in the coproduct.
        """
        for left, right in self.coproduct(self.normalise(element)).keys():
            for leg in (left, right):
                if self.grade(leg) == 0 and not _is_unit(leg):
                    raise DomainError(f"The {self.name} coproduct is not connected: {leg!r} has grade 0.")
        return True


def ck_structure():
    """The Connes-Kreimer Hopf algebra of plain rooted trees, graded by vertices."""
    return GradedStructure(
        name='ck',
        coproduct=ck.ck_coproduct,
        grade=ck.grade,
        product=FOREST_PRODUCT,
        normalise=ck.as_forest,
    )


def simplified_structure(scaling):
    """
    The simplified positive Hopf algebra, connected and graded by edge count.

    Elements are products of J symbols without polynomials.
    """

    def normalise(tree):
        if not tree.root.is_zero or not is_positive(tree, scaling):
            raise DomainError("The simplified positive part holds products of positive planted trees.")
        return mark_root(tree)

    def grade(tree):
        return tree.edge_count

    return GradedStructure(
        name='simplified',
        coproduct=lambda tree: delta_plus(tree, SIMPLIFIED_BAR, scaling),
        grade=grade,
        product=TREE_PRODUCT,
        normalise=normalise,
    )


@dataclass(frozen=True)
class Comodule:
    """
    A comodule H^ over a Hopf algebra H together with an injection iota: H -> H^.

    Args:
        name (str): Label.
        coaction (callable): Basis element of H^ -> TensorSum.
        injection (callable): iota on basis elements of H.
        unit (callable): The unit of H.
        hat_unit (callable): The unit of H^.
        product (str): How characters on H factor.
        side (str): `right` when the coaction lands in H^ (x) H, `left` for H (x) H^.
        normalise (callable): Puts an element of H in the form used by the coaction.
    """

    name: str
    coaction: Callable
    injection: Callable
    unit: Callable
    hat_unit: Callable
    product: str = TREE_PRODUCT
    side: str = 'right'
    normalise: Callable = lambda element: element

    def oriented(self, combination):
        """Yield ((H^ leg, H leg), coeff) whatever the side of the coaction."""
        for key, coeff in combination.items():
            yield (key if self.side == 'right' else (key[1], key[0])), coeff

    def pair(self, hat_leg, leg):
        return (hat_leg, leg) if self.side == 'right' else (leg, hat_leg)

    def reduced(self, element):
        """Delta^ iota(tau) minus iota(tau) (x) 1 minus 1 (x) tau."""
        element = self.normalise(element)
        image = self.injection(element)
        return self.coaction(image) - TensorSum([
            (self.pair(image, self.unit()), 1),
            (self.pair(self.hat_unit(), element), 1),
        ])


def simplified_comodule(scaling):
    """
    Decorated trees as a right comodule over the simplified positive part. The injection erases
    the root markers.
    """
    d_plus_1 = scaling.d_plus_1
    return Comodule(
        name='simplified',
        coaction=lambda tree: delta_plus(unmark(tree), SIMPLIFIED_HAT, scaling),
        injection=unmark,
        unit=lambda: unit(d_plus_1),
        hat_unit=lambda: unit(d_plus_1),
        product=TREE_PRODUCT,
        normalise=mark_root,
    )


def ck_comodule():
    """The Connes-Kreimer coproduct seen as a coaction of the Hopf algebra on itself."""
    return Comodule(
        name='ck',
        coaction=ck.ck_coproduct,
        injection=ck.as_forest,
        unit=Forest,
        hat_unit=Forest,
        product=FOREST_PRODUCT,
        normalise=ck.as_forest,
    )
