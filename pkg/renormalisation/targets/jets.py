"""
Taylor jets T_{alpha,x,y} f = sum_{|l|_s < alpha} (y - x)^l / l! (D^l f)(x).
"""
from fractions import Fraction

from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.polynomial import Polynomial
from renormalisation.trees.decorations import MultiIndex


def _scaling_vector(f, s):
    if s is None:
        return (1,) * f.d_plus_1
    return tuple(getattr(s, 's', s))


def jet_indices(d_plus_1, s, alpha):
    """Every l with |l|_s < alpha, none when alpha <= 0."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        return []
    return MultiIndex.up_to(d_plus_1, s, alpha, strict=True)


def taylor_jet(f, alpha, x, s=None):
    """
    Return the Taylor jet of `f` at `x` of order `alpha` as a polynomial function of y.

    Args:
        f (GaussPolyFn): The function.
        alpha (Fraction): The order; the jet is 0 when alpha <= 0.
        x (tuple): The base point.
        s (tuple | Scaling): The scaling used for |l|_s (default the Euclidean one).

    Returns:
        GaussPolyFn: A width 0 function.
    """
    s = _scaling_vector(f, s)
    result = Polynomial.zero(f.d_plus_1)
    for ell in jet_indices(f.d_plus_1, s, alpha):
        value = f.derivative(ell).evaluate(x)
        if value:
            result = result + Polynomial.shifted_power(ell, x) * _scaled(value, ell.factorial())
    return GaussPolyFn.polynomial(result)


def taylor_jet_value(f, alpha, x, y, s=None):
    """Return T_{alpha,x,y} f as a number."""
    return taylor_jet(f, alpha, x, s).evaluate(y)


def reexpand(f, alpha, x, xbar, s=None):
    """
    Return y -> sum_{|l|_s < alpha} (y - xbar)^l / l! T_{alpha - |l|_s, x, xbar}[D^l f].

    This equals `taylor_jet(f, alpha, x, s)`.
    """
    s = _scaling_vector(f, s)
    alpha = Fraction(alpha)
    result = Polynomial.zero(f.d_plus_1)
    for ell in jet_indices(f.d_plus_1, s, alpha):
        value = taylor_jet_value(f.derivative(ell), alpha - ell.norm(s), x, xbar, s)
        if value:
            result = result + Polynomial.shifted_power(ell, xbar) * _scaled(value, ell.factorial())
    return GaussPolyFn.polynomial(result)


def _scaled(value, factorial):
    if isinstance(value, (int, Fraction)):
        return Fraction(value, factorial)
    return value / factorial


class TaylorJetFamily:
    """
    The Rota-Baxter family alpha -> T_{alpha,x,.} at a fixed base point.
    """

    def __init__(self, x, s=None):
        self.x = tuple(x)
        self.s = s

    def __call__(self, alpha, f):
        return taylor_jet(f, alpha, self.x, self.s)
