"""
Evaluation strategies for recursions over trees.

A recursion is given by a step function `step(tree, lookup)` that computes the value on one tree
from `lookup` calls on strictly smaller trees. Both strategies call the same step, so they return
identical values.
"""
import logging

from renormalisation.utils.exceptions import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

RECURSIVE = 'recursive'
WORKLIST = 'worklist'
STRATEGIES = (RECURSIVE, WORKLIST)


class _Pending(Exception):

    def __init__(self, key):
        super().__init__(key)
        self.key = key


def evaluate(key, step, strategy=RECURSIVE, memo=None):
    """
    Evaluate a recursion on `key`.

    Args:
        key: The tree (or any hashable argument) to evaluate.
        step (callable): `step(key, lookup)` computing one value.
        strategy (str): `recursive` (memoised recursion) or `worklist` (explicit stack).
        memo (dict): Optional table shared between calls.

    Returns:
        The value of the recursion on `key`.
    """
    memo = {} if memo is None else memo
    if strategy == RECURSIVE:
        return _recursive(key, step, memo, set())
    if strategy == WORKLIST:
        return _worklist(key, step, memo)
    raise DomainError(f"Unknown evaluation strategy {strategy!r}.")


def _recursive(key, step, memo, active):
    if key in memo:
        return memo[key]
    if key in active:
        raise InvariantViolation(f"Recursion does not descend at {key!r}.")
    active.add(key)
    value = step(key, lambda other: _recursive(other, step, memo, active))
    active.discard(key)
    memo[key] = value
    return value


def _worklist(key, step, memo):

    def lookup(other):
        if other in memo:
            return memo[other]
        raise _Pending(other)

    stack = [key]
    while stack:
        current = stack[-1]
        if current in memo:
            stack.pop()
            continue
        try:
            memo[current] = step(current, lookup)
        except _Pending as pending:
            if pending.key in stack:
                raise InvariantViolation(f"Recursion does not descend at {pending.key!r}.") from None
            stack.append(pending.key)
        else:
            stack.pop()
    logger.debug("Worklist evaluation finished with %d memo entries", len(memo))
    return memo[key]
