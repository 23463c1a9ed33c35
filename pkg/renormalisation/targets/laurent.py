"""
Truncated Laurent series in t with minimal subtraction.
"""
from fractions import Fraction

import numpy as np

from renormalisation.trees.linear import format_coefficient
from renormalisation.utils.conf import get_setting, tolerances
from renormalisation.utils.exceptions import DomainError


def default_order():
    return int(get_setting('LAURENT_ORDER'))


class LaurentSeries:
    """
    A Laurent series sum_n a_n t^n with finitely many poles, truncated above `order`.

    The order of a sum or product is the smaller of the two orders.
    """

    __slots__ = ('order', '_coefficients')

    def __init__(self, coefficients=None, order=None):
        self.order = default_order() if order is None else int(order)
        self._coefficients = {}
        items = coefficients.items() if isinstance(coefficients, dict) else (coefficients or ())
        for exponent, coeff in items:
            exponent = int(exponent)
            if exponent > self.order or coeff == 0:
                continue
            total = self._coefficients.get(exponent, 0) + coeff
            if total == 0:
                self._coefficients.pop(exponent, None)
            else:
                self._coefficients[exponent] = total

    @classmethod
    def constant(cls, value, order=None):
        return cls({0: value}, order=order)

    @classmethod
    def one(cls, order=None):
        return cls.constant(1, order=order)

    @classmethod
    def zero(cls, order=None):
        return cls(order=order)

    @classmethod
    def monomial(cls, exponent, coeff=1, order=None):
        return cls({exponent: coeff}, order=order)

    def items(self):
        return sorted(self._coefficients.items())

    def coefficient(self, exponent):
        return self._coefficients.get(int(exponent), 0)

    @property
    def valuation(self):
        """The lowest exponent, None for the zero series."""
        return min(self._coefficients, default=None)

    def __bool__(self):
        return bool(self._coefficients)

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return self._coefficients == other._coefficients
        if isinstance(other, (int, float, Fraction)):
            return self == LaurentSeries.constant(other, order=self.order)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.items()))

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries.constant(other, order=self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentSeries(
            list(self._coefficients.items()) + list(other._coefficients.items()),
            order=min(self.order, other.order),
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries({n: -c for n, c in self._coefficients.items()}, order=self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return LaurentSeries({n: c * other for n, c in self._coefficients.items()}, order=self.order)
        return LaurentSeries(
            [
                (n + m, a * b)
                for n, a in self._coefficients.items()
                for m, b in other._coefficients.items()
            ],
            order=min(self.order, other.order),
        )

    __rmul__ = __mul__

    def inverse(self):
        """
        Invert a unit: t^v g with g(0) != 0 gives t^{-v} / g computed term by term up to the order.
        """
        if not self._coefficients:
            raise DomainError("The zero series is not invertible.")
        v = self.valuation
        leading = self._coefficients[v]
        shifted = {n - v: c for n, c in self._coefficients.items()}
        inverse = {}
        for n in range(self.order + v + 1):
            total = 1 if n == 0 else 0
            for k in range(1, n + 1):
                if k in shifted and n - k in inverse:
                    total = total - shifted[k] * inverse[n - k]
            inverse[n] = _divide(total, leading)
        return LaurentSeries({n - v: c for n, c in inverse.items()}, order=self.order)

    def pole_part(self):
        """Minimal subtraction: keep sum_{n<0} a_n t^n."""
        return LaurentSeries({n: c for n, c in self._coefficients.items() if n < 0}, order=self.order)

    def regular_part(self):
        return LaurentSeries({n: c for n, c in self._coefficients.items() if n >= 0}, order=self.order)

    @property
    def is_pole(self):
        return all(n < 0 for n in self._coefficients)

    @property
    def is_regular(self):
        return all(n >= 0 for n in self._coefficients)

    def evaluate(self, t):
        return sum(c * t ** n for n, c in self._coefficients.items())

    def is_close(self, other, rtol=None, atol=None):
        default_rtol, default_atol = tolerances()
        other = self._coerce(other)
        keys = set(self._coefficients) | set(other._coefficients)
        if not keys:
            return True
        mine = np.array([complex(self.coefficient(n)) for n in keys])
        theirs = np.array([complex(other.coefficient(n)) for n in keys])
        return bool(np.all(np.isclose(
            mine, theirs,
            rtol=default_rtol if rtol is None else rtol,
            atol=default_atol if atol is None else atol,
        )))

    def format(self):
        if not self._coefficients:
            return '0'
        parts = []
        for n, c in self.items():
            coeff = format_coefficient(Fraction(c) if isinstance(c, int) else c)
            if n == 0:
                parts.append(coeff)
            elif n == 1:
                parts.append(f'{coeff}*t')
            else:
                parts.append(f'{coeff}*t^{n}')
        return ' + '.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'LaurentSeries({self.format()}, order={self.order})'


def _divide(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


def laurent_pole_project(series):
    """Q(f) = sum_{n<0} a_n t^n."""
    return series.pole_part()


def laurent_regular_project(series):
    """(id - Q)(f)."""
    return series - series.pole_part()
