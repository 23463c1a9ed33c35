"""
Decorated rooted trees and forests.

A tree is written symbolically as X^{k0} prod_i I_{(t_i,p_i)}(tau_i): a root decoration and a
multiset of branches. Branches are stored in canonical order, so two trees are equal exactly when
they are equal as non-planar decorated trees.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from renormalisation.trees.decorations import MultiIndex
from renormalisation.utils.exceptions import ScalingError, TreeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge:
    """
    An edge decoration (t, p). Marked edges stand for the planted symbols J of the positive part.
    """

    type: str
    derivative: MultiIndex
    marked: bool = False

    @property
    def key(self):
        return (self.type, self.derivative.entries, self.marked)

    def shifted(self, ell):
        return Edge(self.type, self.derivative + ell, self.marked)

    def with_marker(self, marked=True):
        return Edge(self.type, self.derivative, marked)


@dataclass(frozen=True, eq=False)
class DecoratedTree:
    root: MultiIndex
    branches: tuple = ()

    def __post_init__(self):
        for edge, child in self.branches:
            if len(edge.derivative) != len(self.root) or len(child.root) != len(self.root):
                raise ScalingError("Dimension mismatch between decorations of a tree.")
        branches = tuple(sorted(self.branches, key=lambda branch: (branch[0].key, branch[1].key)))
        object.__setattr__(self, 'branches', branches)
        key = (self.root.entries, tuple((edge.key, child.key) for edge, child in branches))
        object.__setattr__(self, '_key', key)
        object.__setattr__(self, '_hash', hash(key))

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, DecoratedTree):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        from renormalisation.trees.grammar import format_tree
        return f"DecoratedTree({format_tree(self)!r})"

    def __mul__(self, other):
        return tree_product(self, other)

    @property
    def d_plus_1(self):
        return len(self.root)

    @property
    def is_monomial(self):
        return not self.branches

    @property
    def is_unit(self):
        return not self.branches and self.root.is_zero

    @property
    def is_planted(self):
        return self.root.is_zero and len(self.branches) == 1

    @property
    def edge_count(self):
        return sum(1 + child.edge_count for _, child in self.branches)

    @property
    def node_count(self):
        return 1 + sum(child.node_count for _, child in self.branches)

    def planted_factors(self):
        """The root branches as planted trees I_{(t,p)}(tau)."""
        zero = MultiIndex.zero(self.d_plus_1)
        return [DecoratedTree(zero, (branch,)) for branch in self.branches]

    def with_root(self, root):
        return DecoratedTree(root, self.branches)


def unit(d_plus_1):
    """The tree 1 = X^0."""
    return DecoratedTree(MultiIndex.zero(d_plus_1))


def monomial(k):
    """The tree X^k."""
    return DecoratedTree(k)


def tree_product(a, b):
    """Identify the roots of `a` and `b`: root decorations add and branch multisets merge."""
    if a.d_plus_1 != b.d_plus_1:
        raise ScalingError("Cannot multiply trees of different dimensions.")
    return DecoratedTree(a.root + b.root, a.branches + b.branches)


def product(trees, d_plus_1):
    result = unit(d_plus_1)
    for tree in trees:
        result = tree_product(result, tree)
    return result


def plant(edge, child, scaling=None):
    """
    Graft `child` onto a new root decorated by 0 through `edge`.

    With a scaling that enforces terminal noises, a noise edge only accepts the trivial child.
    """
    if scaling is not None:
        scaling.edge_type(edge.type)
        if scaling.terminal_noise and scaling.is_noise(edge.type) and not child.is_unit:
            raise TreeError(f"Noise edge {edge.type!r} must be terminal.")
    return DecoratedTree(MultiIndex.zero(child.d_plus_1), ((edge, child),))


def validate(tree, scaling):
    """Check type labels, dimensions and the terminal-noise rule against a scaling."""
    if tree.d_plus_1 != scaling.d_plus_1:
        raise ScalingError(f"Tree dimension {tree.d_plus_1} does not match the scaling.")
    for edge, child in tree.branches:
        scaling.edge_type(edge.type)
        if scaling.terminal_noise and scaling.is_noise(edge.type) and not child.is_unit:
            raise TreeError(f"Noise edge {edge.type!r} must be terminal.")
        validate(child, scaling)
    return tree


@lru_cache(maxsize=1 << 16)
def degree(tree, scaling):
    """
    Sum of |n(v)|_s over the nodes plus |t|_s - |p|_s over the edges.
    """
    total = scaling.norm(tree.root)
    for edge, child in tree.branches:
        total += scaling.type_degree(edge.type) - scaling.norm(edge.derivative) + degree(child, scaling)
    return total


def planted_degree(edge, child, scaling):
    """Degree of I_{(t,p)}(child)."""
    return scaling.type_degree(edge.type) - scaling.norm(edge.derivative) + degree(child, scaling)


def bigrade(tree, scaling):
    """
    The pair (sum of |p|_s over the edges, non-root nodes plus edges).
    """
    first = 0
    second = 0
    for edge, child in tree.branches:
        child_first, child_second = bigrade(child, scaling)
        first += scaling.norm(edge.derivative) + child_first
        second += 2 + child_second
    return first, second


def is_positive(tree, scaling):
    """Whether every root branch has strictly positive degree."""
    return all(planted_degree(edge, child, scaling) > 0 for edge, child in tree.branches)


def canonical_key(tree):
    return tree.key


def mark_root(tree):
    """Mark the root edges: the injection of I-symbols into J-symbols."""
    return DecoratedTree(tree.root, tuple((edge.with_marker(True), child) for edge, child in tree.branches))


def unmark(tree):
    """Erase the markers of the root edges."""
    if not any(edge.marked for edge, _ in tree.branches):
        return tree
    return DecoratedTree(tree.root, tuple((edge.with_marker(False), child) for edge, child in tree.branches))


@dataclass(frozen=True, eq=False)
class Forest:
    """
    A commutative monomial in trees. The empty forest is the unit 1_1.
    """

    trees: tuple = ()

    def __post_init__(self):
        trees = tuple(sorted(self.trees))
        object.__setattr__(self, 'trees', trees)
        key = tuple(tree.key for tree in trees)
        object.__setattr__(self, '_key', key)
        object.__setattr__(self, '_hash', hash(('forest', key)))

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (len(self._key), self._key) < (len(other._key), other._key)

    def __repr__(self):
        from renormalisation.trees.grammar import format_forest
        return f"Forest({format_forest(self)!r})"

    def __mul__(self, other):
        return Forest(self.trees + other.trees)

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    @property
    def is_unit(self):
        return not self.trees

    @property
    def edge_count(self):
        return sum(tree.edge_count for tree in self.trees)
