"""
Enumeration of decoration pools for the verification suites.
"""
import logging

from renormalisation.trees.tree import DecoratedTree, Edge, is_positive

logger = logging.getLogger(__name__)


def _multisets(pool, total, start=0):
    """Multisets of (size, item) entries from `pool` whose sizes add up to `total`."""
    if total == 0:
        yield ()
        return
    for i in range(start, len(pool)):
        size, item = pool[i]
        if size <= total:
            for rest in _multisets(pool, total - size, i):
                yield (item,) + rest


def enumerate_trees(scaling, max_edges, node_norm=0, derivative_norm=0, types=None,
                    root_norm=None):
    """
    Enumerate all non-isomorphic decorated trees with at most `max_edges` edges.

    Args:
        scaling (Scaling): The scaling and degree table.
        max_edges (int): Maximal number of edges.
        node_norm (int): Bound on |n(v)|_s at non-root nodes.
        derivative_norm (int): Bound on |p|_s on kernel edges and noise edges.
        types (list): Type labels to use (default all types of the scaling).
        root_norm (int): Bound on |n(root)|_s (default `node_norm`).

    Returns:
        list: Trees sorted by (edge count, canonical key).
    """
    types = list(types) if types is not None else [t.name for t in scaling.types]
    root_norm = node_norm if root_norm is None else root_norm
    node_decorations = scaling.multi_indices(node_norm)
    root_decorations = scaling.multi_indices(root_norm)
    derivatives = scaling.multi_indices(derivative_norm)
    edges = [Edge(name, p) for name in types for p in derivatives]
    unit = DecoratedTree(scaling.zero())

    trees_cache = {}
    planted_cache = {}

    def trees_with(n, roots):
        key = (n, roots is root_decorations)
        if key in trees_cache:
            return trees_cache[key]
        pool = [(size, branch) for size in range(1, n + 1) for branch in planted_with(size)]
        result = [
            DecoratedTree(k, branches)
            for branches in _multisets(pool, n)
            for k in roots
        ]
        trees_cache[key] = result
        return result

    def planted_with(m):
        if m in planted_cache:
            return planted_cache[m]
        result = []
        for edge in edges:
            if scaling.terminal_noise and scaling.is_noise(edge.type):
                if m == 1:
                    result.append((edge, unit))
                continue
            result.extend((edge, child) for child in trees_with(m - 1, node_decorations))
        planted_cache[m] = result
        return result

    found = []
    for n in range(max_edges + 1):
        found.extend(sorted(set(trees_with(n, root_decorations))))
    logger.debug("Enumerated %d trees with at most %d edges", len(found), max_edges)
    return found


def positive_part(trees, scaling):
    """Keep the trees of the positive part."""
    return [tree for tree in trees if is_positive(tree, scaling)]


def sample(trees, rng, count):
    """Draw `count` trees (with replacement) using a numpy generator."""
    if not trees:
        return []
    return [trees[i] for i in rng.integers(len(trees), size=count)]


def shuffled(tree, rng):
    """Rebuild a tree after a random permutation of the branches at every node."""
    branches = [(edge, shuffled(child, rng)) for edge, child in tree.branches]
    order = rng.permutation(len(branches))
    return DecoratedTree(tree.root, tuple(branches[i] for i in order))
