"""
The Butcher-Connes-Kreimer Hopf algebra of undecorated rooted trees.

Trees are `DecoratedTree` values with zero decorations and the single edge label `e`. The single
vertex is written `1` in the tree grammar (the bullet). The unit of the algebra is the empty forest.
Coproduct legs are forests; the trunk sits on the left.
"""
import logging
from fractions import Fraction
from functools import lru_cache

from renormalisation.trees.decorations import EdgeType, MultiIndex, Scaling
from renormalisation.trees.grammar import parse_forest, parse_tree
from renormalisation.trees.linear import ForestSum, TensorSum
from renormalisation.trees.tree import DecoratedTree, Edge, Forest
from renormalisation.utils.exceptions import TreeError
from renormalisation.utils.recursion import RECURSIVE, evaluate

logger = logging.getLogger(__name__)

CK_SCALING = Scaling(d_plus_1=1, s=(1,), types=(EdgeType('e', Fraction(1), 'kernel'),))
CK_EDGE = Edge('e', MultiIndex((0,)))


def bullet():
    """The single vertex."""
    return DecoratedTree(MultiIndex((0,)))


def b_plus(forest):
    """Graft the trees of a forest onto a new root."""
    return DecoratedTree(MultiIndex((0,)), tuple((CK_EDGE, tree) for tree in forest))


def ladder(n):
    """The ladder with `n` vertices."""
    tree = bullet()
    for _ in range(n - 1):
        tree = b_plus(Forest((tree,)))
    return tree


def parse_ck_tree(text):
    return check_undecorated(parse_tree(text, CK_SCALING))


def parse_ck_forest(text):
    forest = parse_forest(text, CK_SCALING)
    for tree in forest:
        check_undecorated(tree)
    return forest


def check_undecorated(tree):
    """Raise `TreeError` unless `tree` is a plain rooted tree."""
    if not tree.root.is_zero or tree.d_plus_1 != 1:
        raise TreeError("Connes-Kreimer trees carry no node decorations.")
    for edge, child in tree.branches:
        if edge != CK_EDGE:
            raise TreeError(f"Connes-Kreimer trees carry no edge decorations, found {edge}.")
        check_undecorated(child)
    return tree


def grade(element):
    """Number of vertices of a tree or a forest."""
    if isinstance(element, Forest):
        return sum(tree.node_count for tree in element)
    return element.node_count


def as_forest(element):
    return element if isinstance(element, Forest) else Forest((element,))


def _forest_product(a, b):
    return tuple(x * y for x, y in zip(a, b))


@lru_cache(maxsize=1 << 12)
def _tree_coproduct(tree):
    terms = [((Forest(), Forest((tree,))), 1)]
    for (left, right), coeff in _coproduct(Forest(tuple(child for _, child in tree.branches))).items():
        terms.append(((Forest((b_plus(left),)), right), coeff))
    return TensorSum(terms)


def _coproduct(forest):
    result = TensorSum.of((Forest(), Forest()))
    for tree in forest:
        result = result.multiply(_tree_coproduct(tree), _forest_product)
    return result


def ck_coproduct(element):
    """
    The coproduct 1 (x) tau + (B+ (x) id) Delta(tau_1 ... tau_n), extended multiplicatively.

    Args:
        element (DecoratedTree | Forest): An undecorated tree or forest.

    Returns:
        TensorSum: Terms keyed by (left forest, right forest).
    """
    forest = as_forest(element)
    for tree in forest:
        check_undecorated(tree)
    return _coproduct(forest)


def ck_reduced_coproduct(tree):
    """The coproduct without the terms `tau (x) 1` and `1 (x) tau`."""
    forest = as_forest(tree)
    return ck_coproduct(forest) - TensorSum([((forest, Forest()), 1), ((Forest(), forest), 1)])


def ck_counit(forest):
    return 1 if as_forest(forest).is_unit else 0


def _antipode_step(tree, lookup):
    terms = ForestSum.of(Forest((tree,)), -1)
    for (left, right), coeff in ck_reduced_coproduct(tree).items():
        trunk, = left.trees
        terms -= lookup(trunk).multiply(ForestSum.of(right), Forest.__mul__) * coeff
    return terms


def ck_antipode(element, strategy=RECURSIVE):
    """
    The antipode A(tau) = -tau - sum' A(tau') tau'', multiplicative on forests.
    """
    result = ForestSum.of(Forest())
    memo = {}
    for tree in as_forest(element):
        check_undecorated(tree)
        image = evaluate(tree, _antipode_step, strategy=strategy, memo=memo)
        result = result.multiply(image, Forest.__mul__)
    return result
