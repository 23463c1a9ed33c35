"""
Descriptions of the target algebras that characters take values in.
"""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.laurent import LaurentSeries, default_order, laurent_pole_project
from renormalisation.targets.oscillatory import OscillatoryFn, osc_project
from renormalisation.targets.rota_baxter import evaluation_projector
from renormalisation.targets.symtensor import SymTensor, expectation_projector
from renormalisation.utils.conf import tolerances
from renormalisation.utils.exceptions import DomainError


@dataclass(frozen=True)
class TargetAlgebra:
    """
    A commutative unital algebra, given by its unit, zero and an optional Rota-Baxter projector.

    Values are the algebra's own objects, combined with `+`, `-` and `*`.
    """

    name: str
    one: Callable
    zero: Callable
    projector: Optional[Callable] = None

    def unit(self):
        return self.one()

    def is_close(self, a, b, rtol=None, atol=None):
        default_rtol, default_atol = tolerances()
        rtol = default_rtol if rtol is None else rtol
        atol = default_atol if atol is None else atol
        if hasattr(a, 'is_close'):
            return a.is_close(b, rtol=rtol, atol=atol)
        if hasattr(b, 'is_close'):
            return b.is_close(a, rtol=rtol, atol=atol)
        return bool(np.isclose(complex(a), complex(b), rtol=rtol, atol=atol))

    def project(self, value):
        if self.projector is None:
            raise DomainError(f"The {self.name} algebra has no Rota-Baxter projector.")
        return self.projector(value)


def scalar_algebra():
    return TargetAlgebra('scalar', one=lambda: 1, zero=lambda: 0)


def laurent_algebra(order=None):
    order = default_order() if order is None else order
    return TargetAlgebra(
        'laurent',
        one=lambda: LaurentSeries.one(order),
        zero=lambda: LaurentSeries.zero(order),
        projector=laurent_pole_project,
    )


def gausspoly_algebra(d_plus_1):
    return TargetAlgebra(
        'gausspoly',
        one=lambda: GaussPolyFn.one(d_plus_1),
        zero=lambda: GaussPolyFn.zero(d_plus_1),
        projector=evaluation_projector((0,) * d_plus_1),
    )


def oscillatory_algebra(frequencies):
    return TargetAlgebra(
        'osc',
        one=lambda: OscillatoryFn.one(frequencies),
        zero=lambda: OscillatoryFn.zero(frequencies),
        projector=osc_project,
    )


def symtensor_algebra(projector=expectation_projector):
    return TargetAlgebra('symtensor', one=SymTensor.one, zero=SymTensor.zero, projector=projector)
