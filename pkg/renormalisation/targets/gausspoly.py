"""
Gaussian-polynomial functions x -> sum_j p_j(x) exp(-a_j |x|^2) on R^{d+1}.

The class is closed under sums, products, derivatives and (when one factor is integrable)
convolution, so kernels, noises and the functions Pi_x tau are represented exactly in structure.
"""
import logging
import math
from fractions import Fraction

from scipy import special

from renormalisation.targets.polynomial import Polynomial
from renormalisation.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _gaussian_moment(n, c):
    """Return the integral of u^n exp(-c u^2) over R."""
    if n % 2:
        return 0.0
    return float(special.gamma((n + 1) / 2)) / float(c) ** ((n + 1) / 2)


class GaussPolyFn:
    """
    A finite sum of polynomials times isotropic Gaussians, keyed by their (rational) width.

    Width 0 terms are plain polynomials; a function whose widths are all positive is integrable.
    """

    __slots__ = ('d_plus_1', '_terms', '_key')

    def __init__(self, d_plus_1, terms=None):
        self.d_plus_1 = int(d_plus_1)
        self._terms = {}
        self._key = None
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for width, polynomial in items:
            width = Fraction(width)
            if width < 0:
                raise DomainError(f"Gaussian widths must be non-negative, got {width}.")
            if polynomial.nvars != self.d_plus_1:
                raise DomainError(f"Polynomial in {polynomial.nvars} variables in dimension {self.d_plus_1}.")
            total = self._terms.get(width, Polynomial.zero(self.d_plus_1)) + polynomial
            if total:
                self._terms[width] = total
            else:
                self._terms.pop(width, None)

    @classmethod
    def zero(cls, d_plus_1):
        return cls(d_plus_1)

    @classmethod
    def constant(cls, d_plus_1, value):
        return cls(d_plus_1, [(0, Polynomial.constant(d_plus_1, value))])

    @classmethod
    def one(cls, d_plus_1):
        return cls.constant(d_plus_1, 1)

    @classmethod
    def polynomial(cls, polynomial):
        return cls(polynomial.nvars, [(0, polynomial)])

    @classmethod
    def monomial(cls, exponent, coeff=1, width=0):
        polynomial = Polynomial.monomial(exponent, coeff)
        return cls(polynomial.nvars, [(width, polynomial)])

    @classmethod
    def gaussian(cls, d_plus_1, width=1, coeff=1):
        return cls(d_plus_1, [(width, Polynomial.constant(d_plus_1, coeff))])

    def items(self):
        return self._terms.items()

    @property
    def widths(self):
        return sorted(self._terms)

    @property
    def key(self):
        if self._key is None:
            self._key = tuple((width, self._terms[width].key) for width in sorted(self._terms))
        return self._key

    @property
    def is_polynomial(self):
        return all(width == 0 for width in self._terms)

    @property
    def is_integrable(self):
        return all(width > 0 for width in self._terms)

    @property
    def polynomial_part(self):
        """The width 0 part, as a `Polynomial`."""
        return self._terms.get(Fraction(0), Polynomial.zero(self.d_plus_1))

    @property
    def is_constant(self):
        return self.is_polynomial and self.polynomial_part.is_constant

    @property
    def constant_value(self):
        """The value of a constant function, None otherwise."""
        return self.polynomial_part.constant_term if self.is_constant else None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, GaussPolyFn):
            return self.d_plus_1 == other.d_plus_1 and self._terms == other._terms
        if isinstance(other, (int, float, Fraction)):
            return self == GaussPolyFn.constant(self.d_plus_1, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def _coerce(self, other):
        if isinstance(other, GaussPolyFn):
            if other.d_plus_1 != self.d_plus_1:
                raise DomainError(f"Dimension mismatch: {self.d_plus_1} and {other.d_plus_1}.")
            return other
        if isinstance(other, Polynomial):
            return GaussPolyFn.polynomial(other)
        return GaussPolyFn.constant(self.d_plus_1, other)

    def __add__(self, other):
        other = self._coerce(other)
        return GaussPolyFn(self.d_plus_1, list(self._terms.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return GaussPolyFn(self.d_plus_1, [(width, -p) for width, p in self._terms.items()])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (GaussPolyFn, Polynomial)):
            return GaussPolyFn(self.d_plus_1, [(width, p * other) for width, p in self._terms.items()])
        other = self._coerce(other)
        return GaussPolyFn(self.d_plus_1, [
            (a + b, p * q)
            for a, p in self._terms.items()
            for b, q in other.items()
        ])

    __rmul__ = __mul__

    def derivative(self, ell):
        """
        Return D^ell f, using d/dx_i (p e^{-a|x|^2}) = (d_i p - 2a x_i p) e^{-a|x|^2}.
        """
        result = self
        for i, order in enumerate(ell):
            x_i = Polynomial.variable(self.d_plus_1, i)
            for _ in range(order):
                result = GaussPolyFn(self.d_plus_1, [
                    (width, p.derivative(_direction(self.d_plus_1, i)) - p * x_i * (2 * width))
                    for width, p in result.items()
                ])
        return result

    def evaluate(self, point):
        point = tuple(point)
        if len(point) != self.d_plus_1:
            raise DomainError(f"Point {point} is not in dimension {self.d_plus_1}.")
        radius = sum(float(value) ** 2 for value in point)
        total = 0
        for width, polynomial in self._terms.items():
            value = polynomial.evaluate(point)
            total = total + (value if width == 0 else value * math.exp(-float(width) * radius))
        return total

    def __call__(self, point):
        return self.evaluate(point)

    def convolve(self, other):
        """
        Return (f * g)(x) = int f(x - y) g(y) dy in closed form.

        Raises:
            DomainError: When neither factor is integrable.
        """
        other = self._coerce(other)
        if not (self.is_integrable or other.is_integrable):
            raise DomainError("Divergent convolution: neither factor is integrable.")
        n = self.d_plus_1
        terms = []
        for a, p in self._terms.items():
            for b, q in other.items():
                terms.append(_convolve_terms(n, a, p, b, q))
        logger.debug("Convolved %d by %d Gaussian terms.", len(self._terms), len(other._terms))
        return GaussPolyFn(n, terms)

    def is_close(self, other, rtol=None, atol=None):
        other = self._coerce(other)
        zero = Polynomial.zero(self.d_plus_1)
        return all(
            self._terms.get(width, zero).is_close(other._terms.get(width, zero), rtol=rtol, atol=atol)
            for width in set(self._terms) | set(other._terms)
        )

    def max_gap(self, other):
        other = self._coerce(other)
        zero = Polynomial.zero(self.d_plus_1)
        return max(
            (self._terms.get(width, zero).max_gap(other._terms.get(width, zero))
             for width in set(self._terms) | set(other._terms)),
            default=0.0,
        )

    def format(self):
        if not self._terms:
            return '0'
        parts = []
        for width in sorted(self._terms):
            polynomial = self._terms[width].format()
            if width == 0:
                parts.append(polynomial)
            else:
                parts.append(f'({polynomial})*exp(-{width}|x|^2)')
        return ' + '.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'GaussPolyFn({self.format()})'


def _direction(n, i):
    ell = [0] * n
    ell[i] = 1
    return ell


def _convolve_terms(n, a, p, b, q):
    """
    Convolve p(x) e^{-a|x|^2} with q(x) e^{-b|x|^2}.

    With c = a + b, substitute y = (a/c) x + u so that x - y = (b/c) x - u and the exponent becomes
    c|u|^2 + (ab/c)|x|^2, then integrate the Gaussian moments in u.
    """
    c = a + b
    if c == 0:
        raise DomainError("Divergent convolution of two polynomial terms.")
    variables = [Polynomial.variable(2 * n, i) for i in range(2 * n)]
    xs, us = variables[:n], variables[n:]
    left = p.compose([x * (b / c) - u for x, u in zip(xs, us)])
    right = q.compose([x * (a / c) + u for x, u in zip(xs, us)])
    integrand = left * right
    result = {}
    for exponent, coeff in integrand.items():
        weight = math.prod(_gaussian_moment(k, c) for k in exponent[n:])
        if weight:
            result[exponent[:n]] = result.get(exponent[:n], 0) + coeff * weight
    return a * b / c, Polynomial(n, result)


def gp_convolve(f, g):
    """Closed-form convolution of two Gaussian-polynomial functions."""
    return f.convolve(g)
