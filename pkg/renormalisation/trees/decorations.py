"""
Scalings, type labels and multi-indices.

Degrees are exact `Fraction` values so that strict and non-strict thresholds never depend on
rounding.
"""
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from renormalisation.utils.exceptions import ScalingError


@dataclass(frozen=True, order=True)
class MultiIndex:
    """A multi-index k in N^{d+1}."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(value) for value in self.entries)
        if any(value < 0 for value in entries):
            raise ScalingError(f"Multi-index entries must be non-negative, got {entries}.")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def zero(cls, d_plus_1):
        return cls((0,) * d_plus_1)

    @classmethod
    def unit(cls, d_plus_1, i):
        entries = [0] * d_plus_1
        entries[i] = 1
        return cls(tuple(entries))

    @classmethod
    def up_to(cls, d_plus_1, s, bound, strict=False):
        """
        Enumerate every multi-index l with |l|_s <= bound (or < bound when `strict`).

        Args:
            d_plus_1 (int): Length of the multi-indices.
            s (tuple): The scaling.
            bound (Fraction): The threshold on |l|_s.
            strict (bool): Whether to use a strict inequality.

        Returns:
            list: Multi-indices sorted by (|l|_s, entries).
        """
        bound = Fraction(bound)
        results = []

        def _walk(position, prefix, norm):
            if position == d_plus_1:
                results.append(cls(tuple(prefix)))
                return
            value = 0
            while True:
                current = norm + s[position] * value
                if current > bound or (strict and current >= bound):
                    break
                _walk(position + 1, prefix + [value], current)
                value += 1

        _walk(0, [], 0)
        return sorted(results, key=lambda k: (k.norm(s), k.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other):
        self._check_length(other)
        return MultiIndex(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_length(other)
        return MultiIndex(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def _check_length(self, other):
        if len(self.entries) != len(other.entries):
            raise ScalingError(f"Dimension mismatch between {self.entries} and {other.entries}.")

    @property
    def is_zero(self):
        return not any(self.entries)

    def norm(self, s):
        """Return |k|_s = sum_i s_i k_i."""
        return sum(si * ki for si, ki in zip(s, self.entries))

    def factorial(self):
        return math.prod(math.factorial(value) for value in self.entries)

    def binomial(self, other):
        """Return the product of the binomials (self_i choose other_i)."""
        return math.prod(math.comb(a, b) for a, b in zip(self.entries, other.entries))

    def dominates(self, other):
        return all(a >= b for a, b in zip(self.entries, other.entries))

    def below(self):
        """Every multi-index k <= self componentwise."""
        ranges = [range(value + 1) for value in self.entries]

        def _walk(position, prefix):
            if position == len(ranges):
                yield MultiIndex(tuple(prefix))
                return
            for value in ranges[position]:
                yield from _walk(position + 1, prefix + [value])

        return list(_walk(0, []))

    def power(self, point):
        """Evaluate the monomial z^k at a point."""
        return math.prod(float(z) ** k for z, k in zip(point, self.entries))


class TypeKind(enum.Enum):
    KERNEL = 'kernel'
    NOISE = 'noise'


@dataclass(frozen=True)
class EdgeType:
    name: str
    degree: Fraction
    kind: TypeKind

    def __post_init__(self):
        object.__setattr__(self, 'degree', Fraction(self.degree))
        object.__setattr__(self, 'kind', TypeKind(self.kind))
        if self.kind is TypeKind.KERNEL and self.degree <= 0:
            raise ScalingError(f"Kernel type {self.name!r} must have a positive degree.")
        if self.kind is TypeKind.NOISE and self.degree >= 0:
            raise ScalingError(f"Noise type {self.name!r} must have a negative degree.")


@dataclass(frozen=True)
class Scaling:
    """
    The ambient dimension, the scaling s and the degree table of the type labels.
    """

    d_plus_1: int
    s: tuple
    types: tuple
    terminal_noise: bool = True
    _by_name: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        s = tuple(int(value) for value in self.s)
        if self.d_plus_1 < 1 or len(s) != self.d_plus_1:
            raise ScalingError(f"Scaling {s} does not match the dimension {self.d_plus_1}.")
        if any(value <= 0 for value in s):
            raise ScalingError("Scaling entries must be positive integers.")
        types = tuple(sorted(self.types, key=lambda t: t.name))
        if len({t.name for t in types}) != len(types):
            raise ScalingError("Type labels must be unique.")
        object.__setattr__(self, 's', s)
        object.__setattr__(self, 'types', types)
        object.__setattr__(self, '_by_name', {t.name: t for t in types})

    @classmethod
    def from_config(cls, config):
        """Build a scaling from the `{d_plus_1, s, types}` JSON shape."""
        types = tuple(
            EdgeType(name=entry['name'], degree=Fraction(str(entry['degree'])), kind=entry['kind'])
            for entry in config['types']
        )
        return cls(
            d_plus_1=int(config['d_plus_1']),
            s=tuple(config['s']),
            types=types,
            terminal_noise=config.get('terminal_noise', True),
        )

    @classmethod
    def default(cls):
        from renormalisation.utils.conf import get_setting
        return cls.from_config(get_setting('DEFAULT_SCALING'))

    def to_config(self):
        return {
            'd_plus_1': self.d_plus_1,
            's': list(self.s),
            'types': [
                {'name': t.name, 'degree': str(t.degree), 'kind': t.kind.value}
                for t in self.types
            ],
        }

    def edge_type(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise ScalingError(f"Unknown type label {name!r}.") from None

    def type_degree(self, name):
        return self.edge_type(name).degree

    def is_noise(self, name):
        return self.edge_type(name).kind is TypeKind.NOISE

    @cached_property
    def kernel_types(self):
        return tuple(t.name for t in self.types if t.kind is TypeKind.KERNEL)

    @cached_property
    def noise_types(self):
        return tuple(t.name for t in self.types if t.kind is TypeKind.NOISE)

    def norm(self, k):
        if len(k) != self.d_plus_1:
            raise ScalingError(f"Multi-index {tuple(k)} does not have length {self.d_plus_1}.")
        return k.norm(self.s)

    def zero(self):
        return MultiIndex.zero(self.d_plus_1)

    def unit(self, i=0):
        return MultiIndex.unit(self.d_plus_1, i)

    def multi_indices(self, bound, strict=False):
        return MultiIndex.up_to(self.d_plus_1, self.s, bound, strict=strict)

    def with_degrees(self, **degrees):
        """Return a copy with some type degrees replaced."""
        types = tuple(
            EdgeType(t.name, Fraction(degrees[t.name]) if t.name in degrees else t.degree, t.kind)
            for t in self.types
        )
        return Scaling(self.d_plus_1, self.s, types, self.terminal_noise)
