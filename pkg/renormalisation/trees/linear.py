"""
Finite linear combinations of trees, forests and tensors of them.

Coefficients are `Fraction` in the combinatorial layer; float coefficients are accepted for the
model layer (re-expansion maps carry point evaluations).
"""
from fractions import Fraction
from numbers import Rational

import numpy as np


def as_coefficient(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    return value


def format_coefficient(value):
    """Render a coefficient as ``num/den`` for rationals and ``repr`` for floats."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def parse_coefficient(text):
    text = str(text)
    if any(char in text for char in '.eE') and 'inf' not in text.lower():
        return float(text)
    return Fraction(text)


class LinearCombination:
    """
    A map from hashable basis elements to non-zero coefficients.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            self._add_term(key, coeff)

    def _add_term(self, key, coeff):
        coeff = as_coefficient(coeff)
        total = self._terms.get(key, 0) + coeff
        if total == 0:
            self._terms.pop(key, None)
        else:
            self._terms[key] = total

    @classmethod
    def of(cls, key, coeff=1):
        return cls([(key, coeff)])

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def sum(cls, combinations):
        result = cls()
        for combination in combinations:
            for key, coeff in combination.items():
                result._add_term(key, coeff)
        return result

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(key, 0)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: item[0])

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        result = type(self)(self._terms)
        for key, coeff in other.items():
            result._add_term(key, coeff)
        return result

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)((key, -coeff) for key, coeff in self._terms.items())

    def __mul__(self, scalar):
        scalar = as_coefficient(scalar)
        if scalar == 0:
            return type(self)()
        return type(self)((key, coeff * scalar) for key, coeff in self._terms.items())

    __rmul__ = __mul__

    def __repr__(self):
        terms = ', '.join(f"{format_coefficient(c)}*{k!r}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({terms})"

    def map(self, function, cls=None):
        """Extend `function` (basis element -> linear combination) linearly."""
        result = (cls or type(self))()
        for key, coeff in self._terms.items():
            for image, image_coeff in function(key).items():
                result._add_term(image, coeff * image_coeff)
        return result

    def map_keys(self, function, cls=None):
        """Apply a map between basis elements."""
        result = (cls or type(self))()
        for key, coeff in self._terms.items():
            image = function(key)
            if image is not None:
                result._add_term(image, coeff)
        return result

    def filter(self, predicate):
        return type(self)((key, coeff) for key, coeff in self._terms.items() if predicate(key))

    def evaluate(self, function, zero=0):
        """Apply a scalar or algebra-valued linear functional."""
        total = zero
        for key, coeff in self._terms.items():
            total = total + function(key) * coeff
        return total

    def multiply(self, other, product):
        """Bilinear extension of `product` on basis elements."""
        result = type(self)()
        for a, ca in self._terms.items():
            for b, cb in other.items():
                result._add_term(product(a, b), ca * cb)
        return result

    def is_close(self, other, rtol=1e-9, atol=1e-12):
        keys = set(self._terms) | set(other.keys())
        if not keys:
            return True
        mine = np.array([float(self.coefficient(key)) for key in keys])
        theirs = np.array([float(other.coefficient(key)) for key in keys])
        return bool(np.all(np.isclose(mine, theirs, rtol=rtol, atol=atol)))

    def max_gap(self, other):
        keys = set(self._terms) | set(other.keys())
        return max((abs(float(self.coefficient(k)) - float(other.coefficient(k))) for k in keys), default=0.0)


class TreeSum(LinearCombination):
    __slots__ = ()


class ForestSum(LinearCombination):
    __slots__ = ()


class TensorSum(LinearCombination):
    """Basis elements are tuples (left, right, ...)."""

    __slots__ = ()


def tensor(*combinations):
    """The tensor product of linear combinations, with tuple basis elements."""
    result = TensorSum([((), 1)])
    for combination in combinations:
        result = TensorSum(
            (left + (right,), cl * cr)
            for left, cl in result.items()
            for right, cr in combination.items()
        )
    return result
