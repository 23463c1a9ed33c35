"""
Rota-Baxter maps of weight -1 and the checks used by the test and verification suites.
"""
from renormalisation.targets.gausspoly import GaussPolyFn


def complement(projector):
    """Return id - Q."""
    def _complement(value):
        return value - projector(value)
    return _complement


def rota_baxter_sides(projector, f, g):
    """
    Return both sides of Q(f)Q(g) = Q(Q(f)g + fQ(g) - fg).
    """
    qf, qg = projector(f), projector(g)
    return qf * qg, projector(qf * g + f * qg - f * g)


def family_sides(family, alpha, beta, f, g):
    """
    Return both sides of T_a f . T_b g = T_{a+b}[T_a f . g + f . T_b g - f g] for a family of maps.
    """
    tf, tg = family(alpha, f), family(beta, g)
    return tf * tg, family(alpha + beta, tf * g + f * tg - f * g)


def evaluation_projector(x):
    """The map f -> f(x) 1 onto the constants of the Gaussian-polynomial class."""
    def _evaluate(f):
        return GaussPolyFn.constant(f.d_plus_1, f.evaluate(x))
    return _evaluate
