"""
Algebraic Birkhoff factorisation on a connected graded Hopf algebra.

For a character phi and a Rota-Baxter projector Q the recursion reads

    phi_bar(tau) = phi(tau) + sum' phi(tau') phi_-(tau'')
    phi_-(tau)   = -Q(phi_bar(tau))
    phi_+(tau)   = (id - Q)(phi_bar(tau))

over the reduced coproduct. Then phi = phi_+ * phi_-^{-1}.
"""
import logging
from fractions import Fraction

from renormalisation.birkhoff.characters import (FOREST_PRODUCT, BirkhoffResult, Character, LinearMap,
                                                  convolve, generators)
from renormalisation.targets.laurent import LaurentSeries
from renormalisation.targets.oscillatory import OscillatoryFn
from renormalisation.targets.polynomial import Polynomial
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)


class ClassicalRecursion:
    """
    Bogoliubov's recursion for a character on a connected graded bialgebra.

    Args:
        phi (Character): The character to factorise.
        structure (GradedStructure): The coproduct, its grading and product.
        projector (callable): The Rota-Baxter map Q on the target algebra.
        max_grade (int): Grades above this bound are refused.
        strategy (str): `recursive` or `worklist`.
    """

    def __init__(self, phi, structure, projector, max_grade, strategy=RECURSIVE):
        self.phi = phi
        self.structure = structure
        self.projector = projector
        self.max_grade = max_grade
        self.strategy = strategy
        self.algebra = phi.algebra
        self._memo = {}
        self.counterterm = Character(self.algebra, self._counterterm_generator,
                                     product=structure.product, name='phi_-')

    def _check(self, element):
        grade = self.structure.grade(element)
        if grade > self.max_grade:
            raise DomainError(f"Grade {grade} exceeds the bound {self.max_grade} of the recursion.")
        self.structure.check_connected(element)

    def step(self, element, lookup):
        """phi_bar on one generator; `lookup` returns phi_bar on generators of lower grade."""
        value = self.phi(element)
        for (left, right), coeff in self.structure.reduced(element).items():
            value = value + self.phi(left) * self._counterterm_from(right, lookup) * coeff
        return value

    def _counterterm_from(self, element, lookup):
        result = self.algebra.unit()
        for factor in self._factors(element):
            result = result * -self.projector(lookup(factor))
        return result

    def _factors(self, element):
        return list(generators(element, self.structure.product))

    def preparation_value(self, element):
        """phi_bar on a generator. A bare Connes-Kreimer vertex is a generator, never the unit."""
        element = self.structure.normalise(element)
        if _is_unit(element):
            return self.algebra.zero()
        self._check(element)
        return evaluate(self._key(element), self.step, strategy=self.strategy, memo=self._memo)

    def _key(self, element):
        factors = self._factors(element)
        if len(factors) != 1:
            raise DomainError(f"Bogoliubov's preparation is defined here on generators, got {element!r}.")
        return factors[0]

    def _counterterm_generator(self, element):
        return -self.projector(self.preparation_value(element))

    def renormalised_value(self, element):
        """phi_+ = phi_bar + phi_- on generators, extended multiplicatively."""
        result = self.algebra.unit()
        for factor in self._factors(element):
            result = result * (self.preparation_value(factor) + self.counterterm(factor))
        return result

    def result(self):
        product = self.structure.product
        return BirkhoffResult(
            counterterm=self.counterterm,
            renormalised=Character(self.algebra, self.renormalised_value, product=product, name='phi_+'),
            preparation=LinearMap(self.algebra, self.preparation_value, name='phi_bar'),
            provenance='classical',
            details={'structure': self.structure.name, 'max_grade': self.max_grade},
        )


def _is_unit(element):
    return element.is_unit


def classical_birkhoff(phi, structure, projector, max_grade, strategy=RECURSIVE):
    """
    Factorise `phi` as phi_+ * phi_-^{-1}.

    Args:
        phi (Character): A character on the bialgebra of `structure`.
        structure (GradedStructure): A connected graded coproduct (Connes-Kreimer or the simplified
            positive one).
        projector (callable): A Rota-Baxter map on the target algebra.
        max_grade (int): Maximal grade of the arguments.
        strategy (str): `recursive` or `worklist`.

    Returns:
        BirkhoffResult: phi_- lands in the image of Q, phi_+ in the image of id - Q.

    Raises:
        DomainError: A grade-0 element other than the unit, or an argument above `max_grade`.
    """
    if phi.product != structure.product:
        raise DomainError(f"Character factors with the {phi.product} product, the coproduct with {structure.product}.")
    return ClassicalRecursion(phi, structure, projector, max_grade, strategy=strategy).result()


def inverse(phi, antipode):
    """The convolution inverse of a character, phi o A."""
    return phi.compose(antipode, name=f"{phi.name}^-1")


def factorisation_sides(result, structure, antipode, element):
    """Return (phi_+ * phi_-^{-1})(element), to be compared with phi(element)."""
    product = convolve(result.renormalised, inverse(result.counterterm, antipode), structure.coproduct)
    return product(structure.normalise(element))


def factorised_character(phi, structure, antipode, projector, evaluation=lambda value: value):
    """
    The recentred character (phi (x) ev Q phi A) Delta.

    With Q an idempotent morphism on the algebra generated by the values of phi, the result is a
    character; Q = id gives the counit and Q = 0 gives phi back. The unit leg is not projected, which
    only matters for projectors with Q(1) != 1.
    """
    correction = inverse(phi, antipode)
    algebra = phi.algebra

    def function(element):
        total = algebra.zero()
        for (left, right), coeff in structure.coproduct(structure.normalise(element)).items():
            value = algebra.unit() if right.is_unit else projector(correction(right))
            total = total + phi(left) * evaluation(value) * coeff
        return total

    return LinearMap(algebra, function, name=f"{phi.name}^")


def _tree_factorial(tree):
    result = tree.node_count
    for _, child in tree.branches:
        result *= _tree_factorial(child)
    return result


def _pole_generator(order):

    def generator(tree):
        result = LaurentSeries.one(order)
        for _ in range(tree.node_count):
            result = result * LaurentSeries({-1: 1, 0: 1}, order=order)
        return result

    return generator


def _factorial_generator(order):
    return lambda tree: LaurentSeries({-tree.node_count: Fraction(1, _tree_factorial(tree))}, order=order)


def _exponential_generator(order):

    def generator(tree):
        n = tree.node_count
        coefficients = {}
        factorial = 1
        for j in range(order + n + 1):
            if j:
                factorial *= j
            coefficients[j - n] = Fraction(1, factorial)
        return LaurentSeries(coefficients, order=order)

    return generator


LAURENT_CHARACTERS = {
    'pole': _pole_generator,
    'factorial': _factorial_generator,
    'exponential': _exponential_generator,
}


def laurent_character(name, algebra, order):
    """
    A toy character on Connes-Kreimer forests with Laurent series values.

    `pole` sends a tree with n vertices to (1/t + 1)^n, `factorial` to t^-n / tree factorial and
    `exponential` to e^t t^-n.
    """
    try:
        generator = LAURENT_CHARACTERS[name](order)
    except KeyError:
        raise DomainError(f"Unknown toy character {name!r}.") from None
    return Character(algebra, generator, product=FOREST_PRODUCT, name=name)


def oscillatory_character(algebra):
    """
    A toy character on Connes-Kreimer forests with oscillatory values,
    tau -> z^n / tau! + z^(n-1) e^{i z n k} for a tree with n vertices.

    Every phase has a non-negative coefficient, so the projection onto the phase-free part is a
    morphism on the values.
    """

    def generator(tree):
        n = tree.node_count
        polynomial = Polynomial.monomial((n,), Fraction(1, _tree_factorial(tree)))
        return (OscillatoryFn.polynomial(1, polynomial)
                + OscillatoryFn.linear_phase([n], Polynomial.monomial((n - 1,))))

    return Character(algebra, generator, product=FOREST_PRODUCT, name='oscillatory')
