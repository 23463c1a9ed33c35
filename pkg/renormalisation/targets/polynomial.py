"""
Multivariate polynomials with exact or floating point coefficients.

This is the coefficient layer of the target algebras: Gaussian-polynomial functions, Taylor jets
and the oscillatory algebra all store their polynomial parts as `Polynomial` values.
"""
import math
from fractions import Fraction

import numpy as np

from renormalisation.trees.linear import format_coefficient
from renormalisation.utils.conf import tolerances
from renormalisation.utils.exceptions import DomainError


def _as_exponent(values):
    return tuple(int(value) for value in values)


def _falling(n, k):
    return math.factorial(n) // math.factorial(n - k)


class Polynomial:
    """
    A polynomial in `nvars` variables, stored as a map from exponent tuples to non-zero coefficients.

    Instances are immutable and hashable, so they can be used as keys (phases of the oscillatory
    algebra, factors of symmetric tensors).
    """

    __slots__ = ('nvars', '_terms', '_key')

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        self._terms = {}
        self._key = None
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for exponent, coeff in items:
            exponent = _as_exponent(exponent)
            if len(exponent) != self.nvars or any(value < 0 for value in exponent):
                raise DomainError(f"Invalid exponent {exponent} for {self.nvars} variables.")
            total = self._terms.get(exponent, 0) + coeff
            if total == 0:
                self._terms.pop(exponent, None)
            else:
                self._terms[exponent] = total

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        exponent = _as_exponent(exponent)
        return cls(len(exponent), {exponent: coeff})

    @classmethod
    def variable(cls, nvars, i):
        exponent = [0] * nvars
        exponent[i] = 1
        return cls(nvars, {tuple(exponent): 1})

    @classmethod
    def shifted_power(cls, exponent, point):
        """
        Expand prod_i (y_i - p_i)^{k_i} as a polynomial in y.

        Args:
            exponent (iterable): The multi-index k.
            point (iterable): The point p.
        """
        exponent = _as_exponent(exponent)
        nvars = len(exponent)
        result = cls.one(nvars)
        for i, (k, p) in enumerate(zip(exponent, point)):
            factor = {}
            for j in range(k + 1):
                entry = [0] * nvars
                entry[i] = j
                factor[tuple(entry)] = math.comb(k, j) * (-p) ** (k - j)
            result = result * cls(nvars, factor)
        return result

    @property
    def key(self):
        if self._key is None:
            self._key = (self.nvars, tuple(sorted(self._terms.items(), key=lambda item: item[0])))
        return self._key

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent):
        return self._terms.get(_as_exponent(exponent), 0)

    @property
    def is_constant(self):
        return all(not any(exponent) for exponent in self._terms)

    @property
    def constant_term(self):
        return self._terms.get((0,) * self.nvars, 0)

    def degree(self):
        """Total degree, -1 for the zero polynomial."""
        return max((sum(exponent) for exponent in self._terms), default=-1)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, float, complex, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DomainError(f"Cannot combine polynomials in {self.nvars} and {other.nvars} variables.")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.nvars, list(self._terms.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {exponent: -coeff for exponent, coeff in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars, {exponent: coeff * other for exponent, coeff in self._terms.items()})
        other = self._coerce(other)
        terms = []
        for a, ca in self._terms.items():
            for b, cb in other.items():
                terms.append((tuple(x + y for x, y in zip(a, b)), ca * cb))
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Polynomial.one(self.nvars)
        for _ in range(int(n)):
            result = result * self
        return result

    def map_coefficients(self, function):
        return Polynomial(self.nvars, {exponent: function(coeff) for exponent, coeff in self._terms.items()})

    def derivative(self, ell):
        """Return D^ell of the polynomial."""
        ell = _as_exponent(ell)
        terms = []
        for exponent, coeff in self._terms.items():
            if all(e >= l for e, l in zip(exponent, ell)):
                factor = math.prod(_falling(e, l) for e, l in zip(exponent, ell))
                terms.append((tuple(e - l for e, l in zip(exponent, ell)), coeff * factor))
        return Polynomial(self.nvars, terms)

    def evaluate(self, point):
        total = 0
        for exponent, coeff in self._terms.items():
            total = total + coeff * math.prod(p ** e for p, e in zip(point, exponent))
        return total

    def compose(self, substitutions):
        """
        Substitute polynomials for the variables.

        Args:
            substitutions (list): One `Polynomial` per variable, all in the same number of variables.
        """
        if len(substitutions) != self.nvars:
            raise DomainError(f"Expected {self.nvars} substitutions, got {len(substitutions)}.")
        target = substitutions[0].nvars if substitutions else 0
        powers = [{0: Polynomial.one(target)} for _ in substitutions]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * substitutions[i]
            return cache[e]

        result = Polynomial.zero(target)
        for exponent, coeff in self._terms.items():
            term = Polynomial.constant(target, coeff)
            for i, e in enumerate(exponent):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def is_close(self, other, rtol=None, atol=None):
        default_rtol, default_atol = tolerances()
        rtol = default_rtol if rtol is None else rtol
        atol = default_atol if atol is None else atol
        other = self._coerce(other)
        keys = set(self._terms) | set(other._terms)
        if not keys:
            return True
        mine = np.array([complex(self.coefficient(key)) for key in keys])
        theirs = np.array([complex(other.coefficient(key)) for key in keys])
        return bool(np.all(np.isclose(mine, theirs, rtol=rtol, atol=atol)))

    def max_gap(self, other):
        other = self._coerce(other)
        keys = set(self._terms) | set(other._terms)
        return max((abs(complex(self.coefficient(key)) - complex(other.coefficient(key))) for key in keys),
                   default=0.0)

    def format(self, names=None):
        if names is None:
            names = ['x'] if self.nvars == 1 else [f'x{i}' for i in range(self.nvars)]
        if not self._terms:
            return '0'
        parts = []
        for exponent, coeff in sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0])):
            factors = [_format_scalar(coeff)]
            for name, e in zip(names, exponent):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f'{name}^{e}')
            parts.append('*'.join(factors))
        return ' + '.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'Polynomial({self.format()})'


def _format_scalar(value):
    if isinstance(value, complex):
        return repr(value)
    if isinstance(value, (int, Fraction)):
        return format_coefficient(Fraction(value))
    return format_coefficient(value)
