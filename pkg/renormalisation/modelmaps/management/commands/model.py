from django.core.management.base import CommandError

from renormalisation.modelmaps.checks import SUITES, model_suite
from renormalisation.modelmaps.kernels import canonical_pi
from renormalisation.modelmaps.model import build_model
from renormalisation.modelmaps.serializers import load_assignment
from renormalisation.targets.serializers import GaussPolyFnSerializer
from renormalisation.trees.enumeration import enumerate_trees
from renormalisation.trees.grammar import format_sum, format_tree, parse_tree, sum_to_json
from renormalisation.trees.linear import TreeSum
from renormalisation.trees.tree import is_positive
from renormalisation.utils.commands import EXIT_USAGE, RenormalisationCommand
from renormalisation.utils.conf import get_setting
from renormalisation.utils.points import generate_point_pairs, parse_point
from renormalisation.verification.reports import summarise

ACTIONS = ('build', 'verify')


class Command(RenormalisationCommand):
    """
    Django command evaluating the model maps of the canonical character, or checking them.
    """

    help = """Evaluate Pi_x, f_x and Gamma_xy on a tree ("build") or run a model suite ("verify")."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            'action',
            type=str,
            choices=ACTIONS,
            help='What to do.'
        )
        parser.add_argument(
            '--assignment',
            type=str,
            default=None,
            help='JSON kernels and noises {d_plus_1, kernels, noises}; "@path" reads a file. Default exp(-|x|^2).'
        )
        parser.add_argument(
            '--tree',
            type=str,
            default=None,
            help='Tree expression; "verify" enumerates trees when omitted.'
        )
        for name, description in (('x', 'Base point'),
                                  ('xbar', 'Recentering point of the polynomials'),
                                  ('y', 'Second point')):
            parser.add_argument(
                f'--{name}',
                type=str,
                default='0',
                help=f'{description}, e.g. "0.5" or "1,0".'
            )
        parser.add_argument(
            '--suite',
            type=str,
            choices=SUITES,
            default=SUITES[0],
            help='Model suite run by "verify".'
        )
        parser.add_argument(
            '--max-edges',
            type=int,
            default=None,
            help='Enumeration depth of "verify" (default from settings).'
        )
        parser.add_argument(
            '--pairs',
            type=int,
            default=25,
            help='Number of random point pairs of "verify".'
        )

    def run(self, *args, **options):
        scaling = self.load_scaling(options)
        assignment = load_assignment(self.load_json_option(options, 'assignment'), scaling)
        if options['action'] == 'build':
            self.build(options, scaling, assignment)
        else:
            self.verify(options, scaling, assignment)

    def build(self, options, scaling, assignment):
        if not options.get('tree'):
            raise CommandError("--tree is required for build.", returncode=EXIT_USAGE)
        tree = parse_tree(options['tree'], scaling)
        x, xbar, y = (parse_point(options[name], scaling.d_plus_1) for name in ('x', 'xbar', 'y'))
        model = build_model(canonical_pi(assignment, xbar, scaling), scaling)
        pi_x = model.Pi(x)(tree)
        gamma = model.Gamma(x, y)(TreeSum.of(tree))
        f_x = model.f(x)(tree) if is_positive(tree, scaling) else None
        if options.get('format') == 'json':
            self.write_json({
                'tree': format_tree(tree),
                'pi_x': GaussPolyFnSerializer(pi_x).data,
                'pi_x_at_y': float(pi_x.evaluate(y)),
                'f_x': f_x,
                'gamma_xy': sum_to_json(gamma),
            })
            return
        self.stdout.write(f"Pi_x = {pi_x}")
        self.stdout.write(f"Pi_x(y) = {float(pi_x.evaluate(y))!r}")
        if f_x is not None:
            self.stdout.write(f"f_x = {f_x!r}")
        self.stdout.write(f"Gamma_xy = {format_sum(gamma)}")

    def verify(self, options, scaling, assignment):
        if options.get('tree'):
            trees = [parse_tree(options['tree'], scaling)]
        else:
            max_edges = options['max_edges'] or int(get_setting('MAX_EDGES'))
            trees = [tree for tree in enumerate_trees(scaling, max_edges, node_norm=1) if not tree.is_unit]
        pairs = list(generate_point_pairs(scaling.d_plus_1, options['pairs'], seed=self.get_seed(options)))
        xbar = parse_point(options['xbar'], scaling.d_plus_1)
        reports = model_suite(options['suite'], assignment, scaling, trees, pairs, xbar=xbar, bounds=False)
        passed, count, failures = summarise(reports)
        if options.get('format') == 'json':
            self.write_json({
                'suite': options['suite'],
                'passed': passed,
                'n_checks': count,
                'checks': [report.as_dict() for report in reports],
            })
        else:
            for report in reports:
                self.stdout.write(f"{'PASS' if report.passed else 'FAIL'} {report.check} {report.tree} {report.max_gap!r}")
            self.stdout.write(f"{options['suite']}: {count - len(failures)}/{count} checks passed")
        if not passed:
            self.fail_checks(f"{len(failures)} model checks failed.")
