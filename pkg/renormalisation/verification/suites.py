"""
The acceptance suites run by `verify` and by `run_suite_task`.

Every suite takes a `SuiteContext` and returns a list of `CheckReport`. Random draws come from a
generator seeded with the context seed, fresh for each suite, so a suite's report does not depend
on which other suites ran before it.
"""
import json
import logging
from dataclasses import dataclass

from renormalisation.birkhoff.bogoliubov import BogoliubovRecursion
from renormalisation.birkhoff.classical import classical_birkhoff, factorisation_sides, laurent_character
from renormalisation.birkhoff.structures import ck_structure
from renormalisation.hopf.antipodes import antipode_plus
from renormalisation.hopf.axioms import (antipode_identity, ck_antipode_identity, ck_coassociativity,
                                         ck_counit_check, coassociativity, comodule, counit_bar, counit_hat,
                                         stabilisation)
from renormalisation.hopf.ck import CK_SCALING, as_forest, ck_antipode
from renormalisation.hopf.modes import AntipodeVariant
from renormalisation.modelmaps.checks import model_suite
from renormalisation.modelmaps.kernels import KernelAssignment, canonical_family, canonical_pi
from renormalisation.modelmaps.model import build_model
from renormalisation.modelmaps.recursive import RecursiveModel
from renormalisation.negative.antipode import NegativeAntipode
from renormalisation.negative.checks import negative_suite
from renormalisation.negative.coaction import default_coaction
from renormalisation.targets.algebras import laurent_algebra
from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.jets import TaylorJetFamily, reexpand, taylor_jet
from renormalisation.targets.laurent import LaurentSeries, laurent_pole_project, laurent_regular_project
from renormalisation.targets.oscillatory import osc_project
from renormalisation.targets.polynomial import Polynomial
from renormalisation.targets.rota_baxter import complement, evaluation_projector, family_sides, rota_baxter_sides
from renormalisation.targets.sampling import draw_alpha, draw_gausspoly, draw_laurent, draw_oscillatory
from renormalisation.targets.symtensor import SymTensor, expectation_projector, symmetrised_osc_projector
from renormalisation.trees.decorations import Scaling
from renormalisation.trees.enumeration import enumerate_trees, positive_part, sample
from renormalisation.trees.tree import mark_root, monomial
from renormalisation.utils.conf import get_setting
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.points import generate_point_pairs, make_rng
from renormalisation.utils.recursion import RECURSIVE, WORKLIST
from renormalisation.verification.reports import CheckReport

logger = logging.getLogger(__name__)

MONOMIAL_DEGREE = 4
MODEL_PAIRS = 25
TWISTED_POINTS = 4
PRODUCT_PAIRS = 200
STABILISATION_CUTOFFS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class SuiteContext:
    """
    Inputs shared by every suite.

    Attributes:
        scaling (Scaling): The degree table of the decorated trees.
        seed (int): Seed of the random draws and of the sample point pairs.
        max_edges (int): Enumeration depth of the combinatorial suites.
        tolerance (float): Largest accepted gap of the model level checks.
        samples (int): Number of random pairs of every Rota-Baxter check.
        model_max_edges (int): Depth bound of the suites that evaluate Gaussian convolutions.
    """

    scaling: Scaling
    seed: int
    max_edges: int
    tolerance: float
    samples: int = 1000
    model_max_edges: int = 5

    @classmethod
    def build(cls, scaling=None, seed=None, max_edges=None, tolerance=None, samples=1000, model_max_edges=None):
        """Fill the missing values from the `RENORMALISATION` settings."""
        return cls(
            scaling=Scaling.default() if scaling is None else scaling,
            seed=int(get_setting('DEFAULT_SEED')) if seed is None else int(seed),
            max_edges=int(get_setting('MAX_EDGES')) if max_edges is None else int(max_edges),
            tolerance=float(get_setting('MODEL_TOLERANCE')) if tolerance is None else float(tolerance),
            samples=samples,
            model_max_edges=(int(get_setting('MODEL_MAX_EDGES')) if model_max_edges is None
                             else int(model_max_edges)),
        )

    @property
    def model_edges(self):
        """Depth of the suites that evaluate Gaussian convolutions."""
        return max(1, min(self.max_edges, self.model_max_edges))

    @property
    def rtol(self):
        return float(get_setting('RTOL'))

    def rng(self):
        return make_rng(self.seed)

    def pairs(self, count):
        return list(generate_point_pairs(self.scaling.d_plus_1, count, seed=self.seed))

    def assignment(self):
        return KernelAssignment.default(self.scaling)

    def positive_trees(self, max_edges=None):
        trees = enumerate_trees(self.scaling, self.model_edges if max_edges is None else max_edges,
                                node_norm=1, root_norm=1)
        return [tree for tree in positive_part(trees, self.scaling) if not tree.is_unit]

    def model_trees(self):
        return [tree for tree in enumerate_trees(self.scaling, self.model_edges, node_norm=1) if not tree.is_unit]

    def ck_trees(self):
        return list(enumerate_trees(CK_SCALING, self.max_edges + 1))


def _exact(check, tree, comparison, **details):
    holds = comparison.holds
    return CheckReport.exact(check, tree, holds, gap=None if holds else comparison.gap, **details)


def _relative_gap(value, expected):
    return abs(value - expected) / max(1.0, abs(expected))


def _sampled(check, label, sides, close=None, **details):
    """One report for a batch of (lhs, rhs) pairs: exact equality unless `close` is given."""
    sides = list(sides)
    if close is None:
        holds = all(lhs == rhs for lhs, rhs in sides)
        return CheckReport.exact(check, label, holds, samples=len(sides), **details)
    holds = all(close(lhs, rhs) for lhs, rhs in sides)
    gaps = [lhs.max_gap(rhs) for lhs, rhs in sides if hasattr(lhs, 'max_gap')]
    return CheckReport.exact(check, label, holds, gap=max(gaps, default=None), samples=len(sides), **details)


def hopf_suite(context):
    """Counits, coassociativity, the comodule axiom and the antipode axiom, on the decorated and plain trees."""
    scaling = context.scaling
    trees = enumerate_trees(scaling, context.max_edges, node_norm=1)
    reports = []
    for tree in trees:
        reports.append(_exact('counit_hat', tree, counit_hat(tree, scaling)))
        reports.append(_exact('comodule', tree, comodule(tree, scaling)))
    for tree in positive_part(trees, scaling):
        reports.append(_exact('counit_bar', tree, counit_bar(tree, scaling)))
        reports.append(_exact('coassociativity', tree, coassociativity(tree, scaling)))
        if not tree.is_unit:
            for side in (0, 1):
                reports.append(_exact('antipode_bar', tree, antipode_identity(tree, scaling, side=side), side=side))
    for tree in context.ck_trees():
        forest = as_forest(tree)
        reports.append(_exact('ck_counit', tree, ck_counit_check(forest)))
        reports.append(_exact('ck_coassociativity', tree, ck_coassociativity(forest)))
        reports.append(_exact('ck_antipode', tree, ck_antipode_identity(forest)))
    return reports


def rota_baxter_suite(context):
    """The Rota-Baxter identity of every projector and the family and re-expansion identities of the jets."""
    rng = context.rng()
    rtol = context.rtol
    count = context.samples
    d_plus_1 = context.scaling.d_plus_1
    reports = []

    for name, projector in (('laurent_pole', laurent_pole_project), ('laurent_regular', laurent_regular_project),
                            ('laurent_pole_complement', complement(laurent_pole_project))):
        sides = [rota_baxter_sides(projector, draw_laurent(rng), draw_laurent(rng)) for _ in range(count)]
        reports.append(_sampled('rota_baxter', name, sides))

    for name, projector in (('osc', osc_project), ('osc_complement', complement(osc_project))):
        sides = [rota_baxter_sides(projector, draw_oscillatory(rng), draw_oscillatory(rng)) for _ in range(count)]
        reports.append(_sampled('rota_baxter', name, sides))

    sides = []
    for _ in range(count):
        a = SymTensor.sym(draw_oscillatory(rng, low=-2), draw_oscillatory(rng, low=-2))
        b = SymTensor.sym(draw_oscillatory(rng, low=-2)) + 2
        sides.append(rota_baxter_sides(symmetrised_osc_projector, a, b))
    reports.append(_sampled('rota_baxter', 'osc_symmetrised', sides))

    sides = []
    for _ in range(count):
        a = SymTensor.sym(draw_gausspoly(rng, d_plus_1), draw_gausspoly(rng, d_plus_1))
        b = SymTensor.sym(draw_gausspoly(rng, d_plus_1)) + 1
        sides.append(rota_baxter_sides(expectation_projector, a, b))
    reports.append(_sampled('rota_baxter', 'expectation', sides, close=lambda lhs, rhs: lhs.is_close(rhs)))

    projector = evaluation_projector((0.5,) * d_plus_1)
    sides = [rota_baxter_sides(projector, draw_gausspoly(rng, d_plus_1), draw_gausspoly(rng, d_plus_1))
             for _ in range(count)]
    reports.append(_sampled('rota_baxter', 'evaluation', sides, close=lambda lhs, rhs: lhs.is_close(rhs)))

    def close(lhs, rhs):
        return lhs.is_close(rhs, rtol=rtol, atol=rtol)

    family_pairs, reexpansions = [], []
    for _ in range(context.samples):
        x = tuple(float(value) for value in rng.uniform(-1, 1, size=d_plus_1))
        family = TaylorJetFamily(x, s=context.scaling.s)
        f, g = draw_gausspoly(rng, d_plus_1), draw_gausspoly(rng, d_plus_1)
        family_pairs.append(family_sides(family, draw_alpha(rng), draw_alpha(rng), f, g))
        xbar = tuple(float(value) for value in rng.uniform(-1, 1, size=d_plus_1))
        alpha = draw_alpha(rng)
        reexpansions.append((reexpand(f, alpha, x, xbar, s=context.scaling.s),
                             taylor_jet(f, alpha, x, s=context.scaling.s)))
    reports.append(_sampled('rota_baxter_family', 'taylor_jet', family_pairs, close=close))
    reports.append(_sampled('reexpansion', 'taylor_jet', reexpansions, close=close))
    return reports


def _agree_up_to(a, b, bound):
    exponents = {n for n, _ in a.items()} | {n for n, _ in b.items()}
    return all(a.coefficient(n) == b.coefficient(n) for n in exponents if n <= bound)


def classical_suite(context):
    """Classical Birkhoff factorisation of the toy Laurent characters on plain rooted trees."""
    order = int(get_setting('LAURENT_ORDER'))
    algebra = laurent_algebra(order)
    structure = ck_structure()
    max_grade = context.max_edges + 2
    trees = context.ck_trees()
    reports = []
    for name in ('pole', 'factorial', 'exponential'):
        phi = laurent_character(name, algebra, order)
        result = classical_birkhoff(phi, structure, laurent_pole_project, max_grade)
        for tree in trees:
            sides = factorisation_sides(result, structure, ck_antipode, tree)
            if name == 'exponential':
                holds = _agree_up_to(sides, phi(tree), order - 2 * tree.node_count)
            else:
                holds = sides == phi(tree)
            reports.append(CheckReport.exact('factorisation', tree, holds, character=name))
            holds = result.counterterm(tree).is_pole and result.renormalised(tree).is_regular
            reports.append(CheckReport.exact('factorisation_images', tree, holds, character=name))

    phi = laurent_character('pole', algebra, order)
    result = classical_birkhoff(phi, structure, lambda value: value, max_grade)
    for tree in trees:
        holds = (result.counterterm(tree) == phi(ck_antipode(tree))
                 and result.renormalised(tree) == LaurentSeries.zero(order))
        reports.append(CheckReport.exact('identity_projector', tree, holds))
    return reports


def multiplicativity_suite(context):
    """phi^- and phi^+ are characters: checked on random products of positive trees."""
    rng = context.rng()
    (x, xbar), = context.pairs(1)
    family = canonical_family(context.assignment(), context.scaling)
    recursion = BogoliubovRecursion(family, x, xbar, context.scaling)
    trees = context.positive_trees(max_edges=2)
    rtol = context.rtol
    reports = []
    for first, second in zip(sample(trees, rng, PRODUCT_PAIRS), sample(trees, rng, PRODUCT_PAIRS)):
        product = first * second
        expected = recursion.counterterm_value(first) * recursion.counterterm_value(second)
        gap = _relative_gap(recursion.counterterm_value(product), expected)
        reports.append(CheckReport.compare('multiplicative_counterterm', product, gap, rtol, points=[x, xbar]))

        expected = recursion.renormalised(first) * recursion.renormalised(second)
        value = recursion.renormalised(product)
        holds = value.is_close(expected, rtol=rtol, atol=rtol)
        reports.append(CheckReport.exact('multiplicative_renormalised', product, holds, points=[x, xbar],
                                         gap=value.max_gap(expected)))
    return reports


def twisted_antipode_suite(context):
    """phi^- at x-bar equals the character at x-bar composed with the twisted antipode."""
    scaling = context.scaling
    family = canonical_family(context.assignment(), scaling)
    points = context.pairs(TWISTED_POINTS)
    recursions = [(BogoliubovRecursion(family, x, xbar, scaling), family(xbar), x) for x, xbar in points]
    reports = []
    for tree in context.positive_trees():
        twisted = antipode_plus(mark_root(tree), AntipodeVariant.TWISTED, scaling)
        gap = max(
            _relative_gap(recursion.counterterm_value(tree), character(twisted).evaluate(x))
            for recursion, character, x in recursions
        )
        reports.append(CheckReport.compare('twisted_antipode', tree, gap, context.rtol, points=points))
    return reports


def renormalised_suite(context):
    """The explicit and planted routes to phi^+ and the preparation map, and phi^+(tree)(x) = 0."""
    (x, xbar), = context.pairs(1)
    family = canonical_family(context.assignment(), context.scaling)
    recursion = BogoliubovRecursion(family, x, xbar, context.scaling)
    rtol = context.rtol
    reports = []
    for tree in context.positive_trees():
        renormalised = recursion.renormalised(tree)
        explicit = recursion.explicit_renormalised(tree)
        reports.append(CheckReport.exact('explicit_renormalised', tree,
                                         explicit.is_close(renormalised, rtol=rtol, atol=rtol),
                                         points=[x, xbar], gap=explicit.max_gap(renormalised)))
        reports.append(CheckReport.compare('renormalised_vanishes', tree, abs(renormalised.evaluate(x)), rtol,
                                           points=[x]))
        if tree.is_planted:
            planted, preparation = recursion.planted_preparation(tree), recursion.preparation(tree)
            reports.append(CheckReport.exact('planted_preparation', tree,
                                             planted.is_close(preparation, rtol=rtol, atol=rtol),
                                             points=[x, xbar], gap=planted.max_gap(preparation)))
    return reports


def closed_forms_suite(context):
    """Closed forms of the recursion on the monomials X^k and the single-term f_x at x-bar = x."""
    scaling = context.scaling
    assignment = context.assignment()
    family = canonical_family(assignment, scaling)
    rtol = context.rtol
    reports = []
    for x, xbar in context.pairs(TWISTED_POINTS):
        recursion = BogoliubovRecursion(family, x, xbar, scaling)
        shift = tuple(b - a for a, b in zip(x, xbar))
        for k in scaling.multi_indices(MONOMIAL_DEGREE):
            if not any(k):
                continue
            tree = monomial(k)
            for check, value, expected in (
                ('closed_form_preparation', recursion.preparation(tree),
                 GaussPolyFn.polynomial(Polynomial.shifted_power(k, xbar))),
                ('closed_form_renormalised', recursion.renormalised(tree),
                 GaussPolyFn.polynomial(Polynomial.shifted_power(k, x))),
            ):
                reports.append(CheckReport.exact(check, tree, value.is_close(expected, rtol=rtol, atol=rtol),
                                                 points=[x, xbar], gap=value.max_gap(expected)))
            gap = _relative_gap(recursion.counterterm_value(tree), k.power(shift))
            reports.append(CheckReport.compare('closed_form_counterterm', tree, gap, rtol, points=[x, xbar]))

    recursive = RecursiveModel(assignment, scaling)
    bases = sorted({x for x, _ in context.pairs(TWISTED_POINTS)})
    models = {x: build_model(canonical_pi(assignment, x, scaling), scaling) for x in bases}
    for tree in context.positive_trees():
        if not tree.is_planted or scaling.is_noise(tree.branches[0][0].type):
            continue
        (edge, child), = tree.branches
        gap = max(
            _relative_gap(models[x].f(x)(tree), -recursive.convolved(edge, child, x).evaluate(x))
            for x in bases
        )
        reports.append(CheckReport.compare('single_term_f', tree, gap, rtol, points=bases))
    return reports


def invariance_suite(context):
    pairs = context.pairs(MODEL_PAIRS)
    return model_suite('invariance', context.assignment(), context.scaling, context.model_trees(), pairs,
                       tolerance=context.tolerance)


def model_suite_checks(context):
    """The algebraic model identities with the bound diagnostics, and the recursive formulations."""
    pairs = context.pairs(MODEL_PAIRS)
    assignment, trees = context.assignment(), context.model_trees()
    reports = model_suite('algebraic', assignment, context.scaling, trees, pairs, tolerance=context.tolerance)
    reports += model_suite('recursive', assignment, context.scaling, trees, pairs, tolerance=context.tolerance)
    return reports


def negative_suite_checks(context):
    trees = [tree for tree in enumerate_trees(context.scaling, context.model_edges, node_norm=1) if not tree.is_unit]
    points = sorted({x for x, _ in context.pairs(2)})
    return negative_suite(context.assignment(), context.scaling, trees, points, tolerance=context.tolerance,
                          forest_edges=context.model_edges)


def determinism_suite(context):
    """The recursive and worklist evaluations agree, and the truncated coproduct stabilises in the cutoff."""
    scaling = context.scaling
    reports = []
    trees = context.positive_trees(max_edges=context.max_edges)
    for variant in (AntipodeVariant.BAR, AntipodeVariant.TWISTED):
        for tree in trees:
            recursive = antipode_plus(tree, variant, scaling, strategy=RECURSIVE)
            worklist = antipode_plus(tree, variant, scaling, strategy=WORKLIST)
            holds = recursive.sorted_items() == worklist.sorted_items()
            reports.append(CheckReport.exact('strategies_antipode', tree, holds, variant=variant.value))

    coaction = default_coaction(scaling)
    recursive, worklist = NegativeAntipode(coaction), NegativeAntipode(coaction, strategy=WORKLIST)
    for tree in enumerate_trees(scaling, context.max_edges):
        if not tree.is_unit and coaction.space.is_negative(tree):
            holds = recursive(tree).sorted_items() == worklist(tree).sorted_items()
            reports.append(CheckReport.exact('strategies_negative_antipode', tree, holds))

    order = int(get_setting('LAURENT_ORDER'))
    phi = laurent_character('pole', laurent_algebra(order), order)
    results = [classical_birkhoff(phi, ck_structure(), laurent_pole_project, context.max_edges + 2, strategy=strategy)
               for strategy in (RECURSIVE, WORKLIST)]
    for tree in context.ck_trees():
        holds = results[0].counterterm(tree) == results[1].counterterm(tree)
        reports.append(CheckReport.exact('strategies_classical', tree, holds))

    (x, xbar), = context.pairs(1)
    family = canonical_family(context.assignment(), scaling)
    recursions = [BogoliubovRecursion(family, x, xbar, scaling, strategy=strategy) for strategy in (RECURSIVE, WORKLIST)]
    for tree in context.positive_trees():
        value, other = (recursion.preparation(tree) for recursion in recursions)
        reports.append(CheckReport.compare('strategies_bogoliubov', tree, value.max_gap(other), context.rtol,
                                           points=[x, xbar]))

    for tree in enumerate_trees(scaling, 2, node_norm=1):
        comparisons = stabilisation(tree, scaling, 2, STABILISATION_CUTOFFS)
        holds = all(comparison.holds for comparison in comparisons)
        reports.append(CheckReport.exact('stabilisation', tree, holds, cutoffs=list(STABILISATION_CUTOFFS)))
    return reports


SUITES = {
    'hopf': hopf_suite,
    'rota_baxter': rota_baxter_suite,
    'classical': classical_suite,
    'multiplicativity': multiplicativity_suite,
    'twisted_antipode': twisted_antipode_suite,
    'renormalised': renormalised_suite,
    'closed_forms': closed_forms_suite,
    'invariance': invariance_suite,
    'model': model_suite_checks,
    'negative': negative_suite_checks,
    'determinism': determinism_suite,
}


def canonical_order(reports):
    """Sort reports by check, tree and details; ties keep their order."""
    return sorted(reports, key=lambda report: (
        report.check, report.tree, json.dumps(report.details, sort_keys=True, default=str),
    ))


def run_suite(name, context):
    """
    Run one suite and return its reports in canonical order.

    Raises:
        DomainError: Unknown suite name.
    """
    if name not in SUITES:
        raise DomainError(f"Unknown suite {name!r}; expected one of {', '.join(SUITES)}.")
    logger.info("Running the %s suite (seed %d, max edges %d)", name, context.seed, context.max_edges)
    reports = canonical_order(SUITES[name](context))
    failures = sum(1 for report in reports if report.failed)
    logger.info("Finished the %s suite: %d reports, %d failures", name, len(reports), failures)
    return reports
