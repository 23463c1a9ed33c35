"""
Numerical checks of a model: the algebraic identities, independence of the recentering point of
the polynomials, and agreement of the recursive formulations with the coaction route.
"""
import logging
import math

from renormalisation.birkhoff.bogoliubov import BogoliubovRecursion
from renormalisation.modelmaps.kernels import canonical_family, canonical_pi
from renormalisation.modelmaps.model import build_model
from renormalisation.modelmaps.recursive import RecursiveModel
from renormalisation.trees.grammar import format_tree
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import degree, is_positive
from renormalisation.utils.conf import get_setting
from renormalisation.verification.reports import CheckReport

logger = logging.getLogger(__name__)

DISTANCES = (1.0, 0.5, 0.25, 0.125)
XBARS = (0.0, 0.5, -1.0)


def _tolerance(tolerance):
    return float(get_setting('MODEL_TOLERANCE')) if tolerance is None else tolerance


def _triples(pairs):
    """Chain consecutive pairs (x, y), (y', z) into triples (x, y, y')."""
    pairs = list(pairs)
    for (x, y), (z, _) in zip(pairs, pairs[1:] + pairs[:1]):
        yield x, y, z


def verify_model(model, pairs, trees, tolerance=None):
    """
    Check Gamma_xx = id, Gamma_xy Gamma_yz = Gamma_xz and Pi_y = Pi_x Gamma_xy.

    Args:
        model (Model): The model under test.
        pairs (list): Sample point pairs (x, y).
        trees (list): Trees to check.
        tolerance (float): Largest accepted gap (default `MODEL_TOLERANCE`).

    Returns:
        list[CheckReport]: One report per check and tree, over every point.
    """
    tolerance = _tolerance(tolerance)
    pairs = list(pairs)
    triples = list(_triples(pairs))
    reports = []
    for tree in trees:
        element = TreeSum.of(tree)
        points = sorted({x for x, _ in pairs})
        gap = max(model.Gamma(x, x)(element).max_gap(element) for x in points)
        reports.append(CheckReport.compare('gamma_identity', tree, gap, tolerance, points=points))

        gap = max(
            model.Gamma(x, y)(model.Gamma(y, z)(element)).max_gap(model.Gamma(x, z)(element))
            for x, y, z in triples
        )
        reports.append(CheckReport.compare('gamma_composition', tree, gap, tolerance, points=triples))

        gap = max(model.Pi(y)(tree).max_gap(model.Pi(x)(model.Gamma(x, y)(element))) for x, y in pairs)
        reports.append(CheckReport.compare('recentering', tree, gap, tolerance, points=pairs))
    logger.debug("Checked the model identities on %d trees at %d pairs", len(trees), len(pairs))
    return reports


def bound_table(model, tree, x, distances=DISTANCES):
    """
    The ratios |(Pi_x tree)(y)| / |x - y|_s^|tree|_s as y approaches x along the first axis.

    The analytic bound is asymptotic, so the table is a diagnostic and never fails.
    """
    scaling = model.scaling
    alpha = float(degree(tree, scaling))
    rows = []
    for distance in distances:
        y = (x[0] + distance ** float(scaling.s[0]),) + tuple(x[1:])
        value = abs(model.evaluate(x, tree, y))
        rows.append({'distance': distance, 'value': value, 'ratio': value / distance ** alpha})
    report = CheckReport(check='bound', tree=format_tree(tree), points=[list(x)], max_gap=None, asserted=False,
                         details={'rows': rows})
    if any(not math.isfinite(row['ratio']) for row in rows):
        logger.warning("Bound diagnostic of %s is not finite", report.tree)
    return report


def invariance_checks(assignment, scaling, trees, x, xbars=None, tolerance=None):
    """
    Compare the maps built from Pi^(xb) for several x-bar.

    Checked: Pi_x on every tree; the preparation map on planted trees, which also equals
    D^k K_t * Pi_x tau; the counterterm on positive planted trees.
    """
    if xbars is None:
        xbars = [(value,) * scaling.d_plus_1 for value in XBARS]
    tolerance = _tolerance(tolerance)
    family = canonical_family(assignment, scaling)
    models = [build_model(canonical_pi(assignment, xbar, scaling), scaling) for xbar in xbars]
    recursions = [BogoliubovRecursion(family, x, xbar, scaling) for xbar in xbars]
    recursive = RecursiveModel(assignment, scaling)
    points = [x, *xbars]
    reports = []
    for tree in trees:
        values = [model.Pi(x)(tree) for model in models]
        gap = max(value.max_gap(values[0]) for value in values)
        reports.append(CheckReport.compare('invariance_pi', tree, gap, tolerance, points=points))
        if not tree.is_planted:
            continue

        (edge, child), = tree.branches
        values = [recursion.preparation(tree) for recursion in recursions]
        gap = max(value.max_gap(values[0]) for value in values)
        if not scaling.is_noise(edge.type):
            gap = max(gap, values[0].max_gap(recursive.convolved(edge, child, x)))
        reports.append(CheckReport.compare('invariance_preparation', tree, gap, tolerance, points=points))

        if is_positive(tree, scaling):
            values = [recursion.counterterm(tree) for recursion in recursions]
            gap = max(value.max_gap(values[0]) for value in values)
            reports.append(CheckReport.compare('invariance_counterterm', tree, gap, tolerance, points=points))
    return reports


def recursive_checks(assignment, scaling, trees, pairs, xbar, tolerance=None):
    """
    Compare the recursive formulations with the coaction route of `build_model`, and the model
    with the Bogoliubov recursion (Pi_x = phi^+ and f_x = phi^- at x-bar).
    """
    tolerance = _tolerance(tolerance)
    pairs = list(pairs)
    model = build_model(canonical_pi(assignment, xbar, scaling), scaling)
    recursive = RecursiveModel(assignment, scaling)
    family = canonical_family(assignment, scaling)
    bases = sorted({x for x, _ in pairs})
    recursions = {x: BogoliubovRecursion(family, x, xbar, scaling) for x in bases}
    reports = []
    for tree in trees:
        gap = max(recursive.pi_x(tree, x).max_gap(model.Pi(x)(tree)) for x in bases)
        reports.append(CheckReport.compare('recursive_pi', tree, gap, tolerance, points=bases))

        element = TreeSum.of(tree)
        gap = max(recursive.gamma(tree, x, y).max_gap(model.Gamma(x, y)(element)) for x, y in pairs)
        reports.append(CheckReport.compare('recursive_gamma', tree, gap, tolerance, points=pairs))

        gap = max(recursions[x].renormalised(tree).max_gap(model.Pi(x)(tree)) for x in bases)
        reports.append(CheckReport.compare('bogoliubov_pi', tree, gap, tolerance, points=bases))

        if not is_positive(tree, scaling):
            continue
        gap = max(abs(recursions[x].counterterm_value(tree) - model.f(x)(tree)) for x in bases)
        reports.append(CheckReport.compare('bogoliubov_f', tree, gap, tolerance, points=bases))
        if tree.is_planted and not scaling.is_noise(tree.branches[0][0].type):
            gap = max(abs(recursive.f_x(tree, x, xbar) - model.f(x)(tree)) for x in bases)
            reports.append(CheckReport.compare('recursive_f', tree, gap, tolerance, points=bases))
    return reports


SUITES = ('algebraic', 'invariance', 'recursive')


def model_suite(suite, assignment, scaling, trees, pairs, xbar=None, tolerance=None, bounds=True):
    """
    Run one of the model suites.

    Args:
        suite (str): `algebraic`, `invariance` or `recursive`.
        assignment (KernelAssignment): Kernels and noises.
        scaling (Scaling): The degree table.
        trees (list): Trees to check.
        pairs (list): Sample point pairs (x, y).
        xbar (tuple): Recentering point of the polynomials (default the origin).
        bounds (bool): Append the bound diagnostics to the algebraic suite.

    Returns:
        list[CheckReport]
    """
    xbar = tuple(xbar) if xbar is not None else (0.0,) * scaling.d_plus_1
    pairs = list(pairs)
    logger.info("Running the %s model suite on %d trees", suite, len(trees))
    if suite == 'algebraic':
        model = build_model(canonical_pi(assignment, xbar, scaling), scaling)
        reports = verify_model(model, pairs, trees, tolerance=tolerance)
        if bounds:
            reports += [bound_table(model, tree, pairs[0][0]) for tree in trees if not tree.is_unit]
        return reports
    if suite == 'invariance':
        return invariance_checks(assignment, scaling, trees, pairs[0][0], tolerance=tolerance)
    return recursive_checks(assignment, scaling, trees, pairs, xbar, tolerance=tolerance)
