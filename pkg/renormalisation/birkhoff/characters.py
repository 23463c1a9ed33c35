"""
Linear maps and characters from tree algebras into target algebras, and their convolution.

Two products are in use. Under the tree product a decorated tree factors as X^k times its planted
root branches, and the generators are the X_i and the planted trees. Under the forest product the
generators are whole trees (the Connes-Kreimer convention) and forests are their products.
"""
import logging
from dataclasses import dataclass, field

from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.linear import LinearCombination
from renormalisation.trees.tree import DecoratedTree, Forest, unmark
from renormalisation.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

TREE_PRODUCT = 'tree'
FOREST_PRODUCT = 'forest'
PRODUCTS = (TREE_PRODUCT, FOREST_PRODUCT)


def generators(element, product=TREE_PRODUCT):
    """
    Split a tree or a forest into the generators of the given product.

    Markers are dropped: characters see J and J-hat symbols as the I symbols they stand for.
    """
    if isinstance(element, Forest):
        for tree in element:
            yield from generators(tree, product)
        return
    if product == FOREST_PRODUCT:
        yield element
        return
    for i, power in enumerate(element.root):
        for _ in range(power):
            yield DecoratedTree(MultiIndex.unit(element.d_plus_1, i))
    for factor in element.planted_factors():
        yield unmark(factor)


class LinearMap:
    """
    A linear map into a target algebra, defined on basis elements and extended to linear
    combinations. Values on basis elements are memoised per instance.

    Args:
        algebra (TargetAlgebra): The codomain.
        function (callable): The value on one basis element.
        name (str): Label used in logs and reprs.
    """

    def __init__(self, algebra, function, name='map'):
        self.algebra = algebra
        self.function = function
        self.name = name
        self._memo = {}

    def value(self, element):
        if element not in self._memo:
            self._memo[element] = self.function(element)
        return self._memo[element]

    def __call__(self, element):
        if isinstance(element, LinearCombination):
            return element.evaluate(self.value, zero=self.algebra.zero())
        return self.value(element)

    def compose(self, operator, name=None):
        """The map `element -> self(operator(element))` for a linear operator on the source."""
        return LinearMap(self.algebra, lambda element: self(operator(element)),
                         name=name or f"{self.name}o{getattr(operator, '__name__', 'op')}")

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r}, {self.algebra.name})"


class Character(LinearMap):
    """
    A multiplicative linear map, given by its values on generators.

    Args:
        algebra (TargetAlgebra): The codomain.
        generator (callable): The value on one generator.
        product (str): `tree` or `forest`, see `generators`.
        name (str): Label used in logs and reprs.
    """

    def __init__(self, algebra, generator, product=TREE_PRODUCT, name='character'):
        if product not in PRODUCTS:
            raise DomainError(f"Unknown product {product!r}.")
        super().__init__(algebra, self._extend, name=name)
        self.generator = generator
        self.product = product
        self._generators = {}

    def generator_value(self, element):
        if element not in self._generators:
            self._generators[element] = self.generator(element)
        return self._generators[element]

    def _extend(self, element):
        result = self.algebra.unit()
        for factor in generators(element, self.product):
            result = result * self.generator_value(factor)
        return result


def unit_character(algebra, product=TREE_PRODUCT):
    """The counit 1*, one on the unit and zero on every generator."""
    return Character(algebra, lambda element: algebra.zero(), product=product, name='1*')


def convolve(phi, psi, structure, name=None):
    """
    The convolution m_A (phi (x) psi) Delta for a coproduct or a coaction.

    Args:
        phi (LinearMap): Applied to the left legs.
        psi (LinearMap): Applied to the right legs.
        structure (callable): Maps a basis element to a TensorSum of (left, right) pairs.

    Returns:
        LinearMap: The convolution product. It is multiplicative whenever phi, psi and the
        structure are.
    """
    if phi.algebra.name != psi.algebra.name:
        raise DomainError(f"Cannot convolve maps into {phi.algebra.name} and {psi.algebra.name}.")

    def function(element):
        total = phi.algebra.zero()
        for (left, right), coeff in structure(element).items():
            total = total + phi(left) * psi(right) * coeff
        return total

    return LinearMap(phi.algebra, function, name=name or f"{phi.name}*{psi.name}")


@dataclass
class BirkhoffResult:
    """
    The outcome of a Bogoliubov-type recursion.

    `counterterm` is phi_-, `renormalised` is phi_+ and `preparation` is Bogoliubov's
    preparation map. `provenance` names the recursion.
    """

    counterterm: LinearMap
    renormalised: LinearMap
    preparation: LinearMap
    provenance: str
    details: dict = field(default_factory=dict)
