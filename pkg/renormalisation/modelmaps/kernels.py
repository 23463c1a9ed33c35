"""
Kernels, deterministic noises and the canonical characters Pi^(x-bar) built from them.

    (Pi^(xb) X_i)(y)            = y_i - xb_i
    (Pi^(xb) I_(t,p) tau)(y)    = (D^p K_t * Pi^(xb) tau)(y)   for a kernel type t
    (Pi^(xb) I_(l,p) 1)(y)      = D^p xi_l(y)                  for a noise type l

extended multiplicatively over the tree product.
"""
import logging
from dataclasses import dataclass, field

from renormalisation.birkhoff.characters import TREE_PRODUCT, Character
from renormalisation.targets.algebras import gausspoly_algebra
from renormalisation.targets.gausspoly import GaussPolyFn, gp_convolve
from renormalisation.targets.polynomial import Polynomial
from renormalisation.utils.exceptions import DomainError, ScalingError, TreeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelAssignment:
    """
    The kernels K_t of the kernel types and the deterministic noises xi_l of the noise types.

    Kernels must be integrable; noises are smooth Gaussian-polynomial functions.
    """

    d_plus_1: int
    kernels: dict = field(default_factory=dict)
    noises: dict = field(default_factory=dict)

    def __post_init__(self):
        for name, kernel in self.kernels.items():
            if kernel.d_plus_1 != self.d_plus_1:
                raise ScalingError(f"Kernel {name!r} lives in dimension {kernel.d_plus_1}.")
            if not kernel.is_integrable:
                raise DomainError(f"Kernel {name!r} must have positive widths only.")
        for name, noise in self.noises.items():
            if noise.d_plus_1 != self.d_plus_1:
                raise ScalingError(f"Noise {name!r} lives in dimension {noise.d_plus_1}.")

    @classmethod
    def default(cls, scaling):
        """Every kernel and every noise is exp(-|x|^2)."""
        gaussian = GaussPolyFn.gaussian(scaling.d_plus_1)
        return cls(
            d_plus_1=scaling.d_plus_1,
            kernels={name: gaussian for name in scaling.kernel_types},
            noises={name: gaussian for name in scaling.noise_types},
        )

    def kernel(self, name):
        try:
            return self.kernels[name]
        except KeyError:
            raise ScalingError(f"No kernel assigned to type {name!r}.") from None

    def noise(self, name):
        try:
            return self.noises[name]
        except KeyError:
            raise ScalingError(f"No noise assigned to type {name!r}.") from None

    def check(self, scaling):
        """Raise `ScalingError` unless every type of `scaling` has a function."""
        for name in scaling.kernel_types:
            self.kernel(name)
        for name in scaling.noise_types:
            self.noise(name)
        return self


def canonical_pi(assignment, xbar, scaling):
    """
    The character Pi^(xb) with values in functions of y.

    Args:
        assignment (KernelAssignment): Kernels and noises.
        xbar (tuple): Recentering point of the polynomials.
        scaling (Scaling): Tells kernel types from noise types.

    Returns:
        Character: Multiplicative over the tree product.

    Raises:
        TreeError: A noise edge that is not terminal.
    """
    xbar = tuple(xbar)
    d_plus_1 = assignment.d_plus_1
    if len(xbar) != d_plus_1:
        raise ScalingError(f"Point {xbar} does not have {d_plus_1} coordinates.")

    def generator(tree):
        if tree.is_monomial:
            (i,) = [j for j, power in enumerate(tree.root) if power]
            return GaussPolyFn.polynomial(Polynomial.variable(d_plus_1, i) - xbar[i])
        (edge, child), = tree.branches
        if scaling.is_noise(edge.type):
            if not child.is_unit:
                raise TreeError(f"Noise edge {edge.type!r} must be terminal.")
            return assignment.noise(edge.type).derivative(edge.derivative)
        return gp_convolve(assignment.kernel(edge.type).derivative(edge.derivative), character(child))

    character = Character(gausspoly_algebra(d_plus_1), generator, product=TREE_PRODUCT,
                          name=f"Pi^({','.join(str(value) for value in xbar)})")
    return character


def canonical_family(assignment, scaling):
    """The family xb -> Pi^(xb)."""
    return lambda xbar: canonical_pi(assignment, xbar, scaling)
