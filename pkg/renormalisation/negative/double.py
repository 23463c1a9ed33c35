"""
The tensor product of the negative and positive quotient algebras, with the product leg by leg,

    Delta_+-(a (x) b) = M^(14)(3)(2)(5) (id (x) id (x) id (x) Delta-bar^-)(Delta-bar^- (x) Delta-bar^+)(a (x) b)
    A_+-              = (A_- M (x) A_+)(id (x) Delta-bar^-)

and the semi-direct product of the character groups,

    (g1, f1)(g2, f2) = (g1 *- g2, f1 *+ (g1 *- f2)).

Elements are TensorSums keyed by (forest, positive tree) pairs.
"""
import logging
from functools import lru_cache

from renormalisation.birkhoff.characters import convolve
from renormalisation.hopf.antipodes import antipode_plus
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import BAR, AntipodeVariant
from renormalisation.negative.antipode import NegativeAntipode
from renormalisation.trees.linear import TensorSum, tensor
from renormalisation.trees.tree import DecoratedTree, Forest, is_positive, tree_product, unit
from renormalisation.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _pair_product(u, v):
    return tuple(a * b if isinstance(a, Forest) else tree_product(a, b) for a, b in zip(u, v))


@lru_cache(maxsize=1 << 12)
def _negative_coproduct(coaction, forest):
    return coaction.coproduct(forest)


@lru_cache(maxsize=1 << 12)
def _negative_on_positive(coaction, tree):
    return coaction.space.project(coaction(tree))


class DoubleAlgebra:
    """
    Args:
        coaction (NegCoaction): The negative coaction, also acting on positive trees.
    """

    def __init__(self, coaction):
        self.coaction = coaction
        self.space = coaction.space
        self.scaling = coaction.scaling
        self._negative_antipode = NegativeAntipode(coaction, twisted=False)

    def unit(self):
        return TensorSum.of((Forest(), unit(self.scaling.d_plus_1)))

    def element(self, forest, tree):
        return TensorSum.of(self.check((forest, tree)))

    def check(self, pair):
        """Raise `DomainError` unless `pair` is (forest of the quotient, tree of the positive part)."""
        forest, tree = pair
        if not isinstance(forest, Forest) or not isinstance(tree, DecoratedTree):
            raise DomainError("Elements pair a forest with a positive tree.")
        self.space.check(forest)
        if not tree.is_monomial and not (is_positive(tree, self.scaling)
                                         and all(edge.marked for edge, _ in tree.branches)):
            raise DomainError(f"{tree!r} is not in the positive part.")
        return pair

    def counit(self, element):
        return sum(coeff for (forest, tree), coeff in element.items() if forest.is_unit and tree.is_unit)

    def product(self, x, y):
        return self.space.project(x.multiply(y, _pair_product))

    def negative_coproduct(self, forest):
        return _negative_coproduct(self.coaction, forest)

    def positive_coproduct(self, tree):
        """Delta-bar^+ on the positive part."""
        return delta_plus(tree, BAR, self.scaling)

    def negative_on_positive(self, tree):
        """Delta-bar^- seen as a map from the positive part to (quotient) (x) (positive part)."""
        return _negative_on_positive(self.coaction, tree)

    def coproduct(self, element):
        """Delta_+-, keyed by (forest, tree, forest, tree) tuples."""
        for pair in element.keys():
            self.check(pair)
        result = TensorSum(
            ((a1 * c1, b1, a2, c2), coeff * ca * cb * cc)
            for (forest, tree), coeff in element.items()
            for (a1, a2), ca in self.negative_coproduct(forest).items()
            for (b1, b2), cb in self.positive_coproduct(tree).items()
            for (c1, c2), cc in self.negative_on_positive(b2).items()
        )
        return self.space.project(result)

    def antipode(self, element):
        terms = []
        for (forest, tree), coeff in element.items():
            self.check((forest, tree))
            for (extracted, contracted), c in self.negative_on_positive(tree).items():
                negative = self._negative_antipode(forest * extracted)
                positive = antipode_plus(contracted, AntipodeVariant.BAR, self.scaling)
                terms.append(tensor(negative, positive) * (coeff * c))
        return TensorSum.sum(terms)

    def multiplicativity_sides(self, x, y):
        """Delta_+-(x y) next to Delta_+-(x) Delta_+-(y)."""
        lhs = self.coproduct(self.product(x, y))
        rhs = self.space.project(self.coproduct(x).multiply(self.coproduct(y), _pair_product))
        return lhs, rhs

    def antipode_sides(self, element):
        """M (A_+- (x) id) Delta_+- applied to `element`, next to its counit times the unit."""
        lhs = TensorSum.sum(
            self.product(self.antipode(TensorSum.of((a1, b1))), TensorSum.of((a2, b2))) * coeff
            for (a1, b1, a2, b2), coeff in self.coproduct(element).items()
        )
        return lhs, self.unit() * self.counit(element)

    # characters

    def star_negative(self, g1, g2):
        """g1 *- g2 on the quotient."""
        return convolve(g1, g2, self.negative_coproduct, name=f"{g1.name}*-{g2.name}")

    def act(self, g, f):
        """g *- f on the positive part, through Delta-bar^-."""
        return convolve(g, f, self.negative_on_positive, name=f"{g.name}*-{f.name}")

    def star_positive(self, f1, f2):
        """f1 *+ f2 on the positive part."""
        return convolve(f1, f2, self.positive_coproduct, name=f"{f1.name}*+{f2.name}")

    def semidirect_product(self, first, second):
        """(g1, f1)(g2, f2) = (g1 *- g2, f1 *+ (g1 *- f2))."""
        g1, f1 = first
        g2, f2 = second
        return self.star_negative(g1, g2), self.star_positive(f1, self.act(g1, f2))
