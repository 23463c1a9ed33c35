"""
Symmetrised tensors f_1 . ... . f_n of target functions.

Factors are Gaussian-polynomial or oscillatory functions. The processes are deterministic, so the
expectation of a factor is its value at the origin and the expectation of a symmetrised tensor is
the product over its factors.
"""
import math

import numpy as np

from renormalisation.utils.conf import tolerances
from renormalisation.utils.exceptions import DomainError


def _factor_key(factor):
    return type(factor).__name__, factor.key


class SymTensor:
    """
    A linear combination of multisets of factors.

    Constant factors are absorbed in the coefficient, so the empty multiset spans the constants.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for factors, coeff in items:
            self._add_term(factors, coeff)

    def _add_term(self, factors, coeff):
        kept = []
        for factor in factors:
            value = factor.constant_value
            if value is None:
                kept.append(factor)
            else:
                coeff = coeff * value
        if coeff == 0:
            return
        key = tuple(sorted(kept, key=_factor_key))
        total = self._terms.get(key, 0) + coeff
        if total == 0:
            self._terms.pop(key, None)
        else:
            self._terms[key] = total

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, value):
        return cls([((), value)])

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def sym(cls, *factors, coeff=1):
        return cls([(factors, coeff)])

    def items(self):
        return self._terms.items()

    @property
    def constant_term(self):
        return self._terms.get((), 0)

    @property
    def is_constant(self):
        return all(not factors for factors in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SymTensor):
            return self._terms == other._terms
        if isinstance(other, (int, float)):
            return self == SymTensor.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(
            (tuple(_factor_key(f) for f in factors), coeff) for factors, coeff in self._terms.items()
        )))

    def _coerce(self, other):
        if isinstance(other, SymTensor):
            return other
        if hasattr(other, 'constant_value'):
            return SymTensor.sym(other)
        return SymTensor.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        return SymTensor(list(self._terms.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return SymTensor([(factors, -coeff) for factors, coeff in self._terms.items()])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not (isinstance(other, SymTensor) or hasattr(other, 'constant_value')):
            return SymTensor([(factors, coeff * other) for factors, coeff in self._terms.items()])
        other = self._coerce(other)
        return SymTensor([
            (a + b, ca * cb)
            for a, ca in self._terms.items()
            for b, cb in other.items()
        ])

    __rmul__ = __mul__

    def apply(self, factor_value):
        """Extend a map on factors multiplicatively and linearly: sum coeff * prod_i value(f_i)."""
        total = 0
        for factors, coeff in self._terms.items():
            total = total + coeff * math.prod(factor_value(factor) for factor in factors)
        return total

    def is_close(self, other, rtol=None, atol=None):
        default_rtol, default_atol = tolerances()
        other = self._coerce(other)
        keys = set(self._terms) | set(other._terms)
        if not keys:
            return True
        mine = np.array([complex(self._terms.get(key, 0)) for key in keys])
        theirs = np.array([complex(other._terms.get(key, 0)) for key in keys])
        return bool(np.all(np.isclose(
            mine, theirs,
            rtol=default_rtol if rtol is None else rtol,
            atol=default_atol if atol is None else atol,
        )))

    def format(self):
        if not self._terms:
            return '0'
        parts = []
        for factors in sorted(self._terms, key=lambda key: tuple(_factor_key(f) for f in key)):
            body = ' . '.join(f'[{factor}]' for factor in factors)
            parts.append(f'{self._terms[factors]} {body}'.rstrip())
        return ' + '.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'SymTensor({self.format()})'


def _value_at_origin(factor):
    if hasattr(factor, 'd_plus_1'):
        return factor.evaluate((0.0,) * factor.d_plus_1)
    raise DomainError(f"No expectation is defined for factors of type {type(factor).__name__}.")


def sym_expectation(tensor, point=None):
    """The deterministic expectation E~(F) at the origin (or at `point`)."""
    if point is None:
        return tensor.apply(_value_at_origin)
    return tensor.apply(lambda factor: factor.evaluate(tuple(point)))


def expectation_projector(tensor):
    """E~ as a map onto the constants: F -> E~(F)(0) 1."""
    return SymTensor.constant(sym_expectation(tensor))


def symmetrised_osc_projector(tensor):
    """ev_0 of the multiplicative extension of the oscillatory projector, as a constant tensor."""
    return SymTensor.constant(tensor.apply(lambda factor: factor.polynomial_part.constant_term))
