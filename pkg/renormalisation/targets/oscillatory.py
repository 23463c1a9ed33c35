"""
The oscillatory algebra of functions z -> sum_j Q_j(z) exp(i z P_j(k)).

Q_j are polynomials in z and the phases P_j are integer polynomials in the frequencies k_1..k_n.
The polynomial part (phase 0) is the image of the projector `osc_project`.
"""
import cmath

from renormalisation.targets.polynomial import Polynomial
from renormalisation.utils.exceptions import DomainError


class OscillatoryFn:
    """
    A finite sum of polynomials in z times exponentials of integer phases, keyed by phase.
    """

    __slots__ = ('frequencies', '_terms')

    def __init__(self, frequencies, terms=None):
        self.frequencies = int(frequencies)
        self._terms = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for phase, polynomial in items:
            if phase.nvars != self.frequencies:
                raise DomainError(f"Phase in {phase.nvars} frequencies, expected {self.frequencies}.")
            if any(int(coeff) != coeff for _, coeff in phase.items()):
                raise DomainError(f"Phase {phase} must have integer coefficients.")
            if polynomial.nvars != 1:
                raise DomainError("Amplitudes are polynomials in the single variable z.")
            total = self._terms.get(phase, Polynomial.zero(1)) + polynomial
            if total:
                self._terms[phase] = total
            else:
                self._terms.pop(phase, None)

    @classmethod
    def zero(cls, frequencies):
        return cls(frequencies)

    @classmethod
    def constant(cls, frequencies, value):
        return cls(frequencies, [(Polynomial.zero(frequencies), Polynomial.constant(1, value))])

    @classmethod
    def one(cls, frequencies):
        return cls.constant(frequencies, 1)

    @classmethod
    def polynomial(cls, frequencies, polynomial):
        return cls(frequencies, [(Polynomial.zero(frequencies), polynomial)])

    @classmethod
    def exponential(cls, phase, amplitude=None):
        """Return amplitude(z) exp(i z P(k)) for an integer phase polynomial P."""
        amplitude = Polynomial.one(1) if amplitude is None else amplitude
        return cls(phase.nvars, [(phase, amplitude)])

    @classmethod
    def linear_phase(cls, coefficients, amplitude=None):
        """Return exp(i z sum_j c_j k_j)."""
        n = len(coefficients)
        phase = Polynomial.zero(n)
        for j, c in enumerate(coefficients):
            phase = phase + Polynomial.variable(n, j) * int(c)
        return cls.exponential(phase, amplitude)

    def items(self):
        return self._terms.items()

    @property
    def phases(self):
        return sorted(self._terms)

    @property
    def polynomial_part(self):
        return self._terms.get(Polynomial.zero(self.frequencies), Polynomial.zero(1))

    @property
    def is_polynomial(self):
        return all(not phase for phase in self._terms)

    @property
    def constant_value(self):
        """The value of a constant function, None otherwise."""
        part = self.polynomial_part
        return part.constant_term if self.is_polynomial and part.is_constant else None

    @property
    def key(self):
        return tuple(sorted((phase.key, q.key) for phase, q in self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, OscillatoryFn):
            return self.frequencies == other.frequencies and self._terms == other._terms
        if isinstance(other, (int, float)):
            return self == OscillatoryFn.constant(self.frequencies, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.key)

    def _coerce(self, other):
        if isinstance(other, OscillatoryFn):
            if other.frequencies != self.frequencies:
                raise DomainError(f"Frequency mismatch: {self.frequencies} and {other.frequencies}.")
            return other
        return OscillatoryFn.constant(self.frequencies, other)

    def __add__(self, other):
        other = self._coerce(other)
        return OscillatoryFn(self.frequencies, list(self._terms.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return OscillatoryFn(self.frequencies, [(phase, -q) for phase, q in self._terms.items()])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, OscillatoryFn):
            return OscillatoryFn(self.frequencies, [(phase, q * other) for phase, q in self._terms.items()])
        other = self._coerce(other)
        return OscillatoryFn(self.frequencies, [
            (p1 + p2, q1 * q2)
            for p1, q1 in self._terms.items()
            for p2, q2 in other.items()
        ])

    __rmul__ = __mul__

    def evaluate(self, z, k):
        """Return the complex value at z for the frequencies k."""
        if len(k) != self.frequencies:
            raise DomainError(f"Expected {self.frequencies} frequencies, got {len(k)}.")
        total = 0j
        for phase, q in self._terms.items():
            total += complex(q.evaluate((z,))) * cmath.exp(1j * z * float(phase.evaluate(k)))
        return total

    def is_close(self, other, rtol=None, atol=None):
        other = self._coerce(other)
        zero = Polynomial.zero(1)
        return all(
            self._terms.get(phase, zero).is_close(other._terms.get(phase, zero), rtol=rtol, atol=atol)
            for phase in set(self._terms) | set(other._terms)
        )

    def format(self):
        if not self._terms:
            return '0'
        names = ['k'] if self.frequencies == 1 else [f'k{j + 1}' for j in range(self.frequencies)]
        parts = []
        for phase in sorted(self._terms):
            amplitude = self._terms[phase].format(names=['z'])
            if not phase:
                parts.append(amplitude)
            else:
                parts.append(f'({amplitude})*exp(iz({phase.format(names=names)}))')
        return ' + '.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'OscillatoryFn({self.format()})'


def osc_project(function):
    """Keep exactly the terms of phase 0."""
    return OscillatoryFn.polynomial(function.frequencies, function.polynomial_part)
