"""
Coproduct modes and antipode variants.
"""
import enum
from dataclasses import dataclass
from fractions import Fraction

from renormalisation.utils.exceptions import DomainError


class ModeKind(enum.Enum):
    FULL_TRUNCATED = 'full'
    HAT = 'hat'
    BAR = 'bar'
    REDUCED = 'reduced'
    SIMPLIFIED_HAT = 'simplified-hat'
    SIMPLIFIED_BAR = 'simplified-bar'


@dataclass(frozen=True)
class CoproductMode:
    """
    Which coproduct or coaction to compute.

    `FULL_TRUNCATED` restricts the infinite sums over l to |l|_s <= cutoff. The other modes
    apply the projection onto the positive part and need no cutoff.
    """

    kind: ModeKind
    cutoff: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', ModeKind(self.kind))
        if self.kind is ModeKind.FULL_TRUNCATED:
            if self.cutoff is None:
                raise DomainError("The full coproduct needs a cutoff.")
            cutoff = Fraction(self.cutoff)
            if cutoff < 0:
                raise DomainError(f"Cutoff must be non-negative, got {cutoff}.")
            object.__setattr__(self, 'cutoff', cutoff)
        else:
            object.__setattr__(self, 'cutoff', None)

    @classmethod
    def full(cls, cutoff):
        return cls(ModeKind.FULL_TRUNCATED, cutoff)

    @classmethod
    def parse(cls, name, cutoff=None):
        """Build a mode from its CLI name (`full`, `hat`, `bar`, ...)."""
        try:
            kind = ModeKind(name)
        except ValueError:
            raise DomainError(f"Unknown coproduct mode {name!r}.") from None
        return cls(kind, cutoff if kind is ModeKind.FULL_TRUNCATED else None)

    @property
    def is_simplified(self):
        return self.kind in (ModeKind.SIMPLIFIED_HAT, ModeKind.SIMPLIFIED_BAR)

    def __str__(self):
        if self.kind is ModeKind.FULL_TRUNCATED:
            return f"{self.kind.value}({self.cutoff})"
        return self.kind.value


HAT = CoproductMode(ModeKind.HAT)
BAR = CoproductMode(ModeKind.BAR)
REDUCED = CoproductMode(ModeKind.REDUCED)
SIMPLIFIED_HAT = CoproductMode(ModeKind.SIMPLIFIED_HAT)
SIMPLIFIED_BAR = CoproductMode(ModeKind.SIMPLIFIED_BAR)


class AntipodeVariant(enum.Enum):
    FULL_TRUNCATED = 'full'
    BAR = 'bar'
    TWISTED = 'twisted'
    SIMPLIFIED = 'simplified'
    SIMPLIFIED_TWISTED = 'simplified-twisted'

    @property
    def needs_positive_input(self):
        return self is not AntipodeVariant.FULL_TRUNCATED

    @property
    def is_simplified(self):
        return self in (AntipodeVariant.SIMPLIFIED, AntipodeVariant.SIMPLIFIED_TWISTED)
