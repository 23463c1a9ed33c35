from django.core.management.base import CommandError

from renormalisation.modelmaps.kernels import canonical_pi
from renormalisation.modelmaps.serializers import load_assignment
from renormalisation.negative.antipode import negative_antipode, negative_twisted_antipode
from renormalisation.negative.bogoliubov import lifted_character, negative_bogoliubov
from renormalisation.negative.checks import cointeraction_checks
from renormalisation.negative.coaction import default_coaction
from renormalisation.negative.forests import as_forest
from renormalisation.negative.renormalise import RenormalisedModel, renormalisation_map
from renormalisation.trees.enumeration import enumerate_trees
from renormalisation.trees.grammar import format_forest, format_sum, format_tree, parse_forest, parse_tree, sum_to_json
from renormalisation.utils.commands import EXIT_USAGE, RenormalisationCommand
from renormalisation.utils.conf import get_setting
from renormalisation.utils.points import parse_point
from renormalisation.verification.reports import summarise

ACTIONS = ('coaction', 'antipode', 'bogoliubov', 'cointeraction', 'renormalise')


class Command(RenormalisationCommand):
    """
    Django command for the negative renormalisation layer.
    """

    help = """Extraction-contraction coaction, negative twisted antipode, negative Bogoliubov recursion,
    cointeraction check and renormalised model, e.g. negative coaction --tree "I[t,0](I[l,0](1))"."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            'action',
            type=str,
            choices=ACTIONS,
            help='What to do.'
        )
        parser.add_argument(
            '--tree',
            type=str,
            default=None,
            help='Tree expression, or a forest "t1 . t2" for antipode and bogoliubov.'
        )
        parser.add_argument(
            '--quotient',
            action='store_true',
            help='Antipode of the quotient instead of the twisted antipode.'
        )
        parser.add_argument(
            '--assignment',
            type=str,
            default=None,
            help='JSON kernels and noises {d_plus_1, kernels, noises}; "@path" reads a file. Default exp(-|x|^2).'
        )
        for name, description in (('x', 'Base point'), ('y', 'Evaluation point')):
            parser.add_argument(
                f'--{name}',
                type=str,
                default='0',
                help=f'{description} of "renormalise", e.g. "0.5".'
            )
        parser.add_argument(
            '--max-edges',
            type=int,
            default=None,
            help='Enumeration depth of "cointeraction" without --tree (default from settings).'
        )

    def run(self, *args, **options):
        scaling = self.load_scaling(options)
        coaction = default_coaction(scaling)
        action = options['action']
        if action == 'cointeraction':
            self.cointeraction(options, scaling, coaction)
            return
        if not options.get('tree'):
            raise CommandError(f"--tree is required for {action}.", returncode=EXIT_USAGE)
        if action == 'coaction':
            self.write_sum(coaction(parse_tree(options['tree'], scaling)), options)
        elif action == 'antipode':
            forest = as_forest(parse_forest(options['tree'], scaling))
            antipode = negative_antipode if options['quotient'] else negative_twisted_antipode
            self.write_sum(antipode(forest, coaction), options)
        else:
            assignment = load_assignment(self.load_json_option(options, 'assignment'), scaling)
            pi = canonical_pi(assignment, (0.0,) * scaling.d_plus_1, scaling)
            if action == 'bogoliubov':
                self.bogoliubov(options, scaling, coaction, pi)
            else:
                self.renormalise(options, scaling, coaction, pi)

    def bogoliubov(self, options, scaling, coaction, pi):
        forest = as_forest(parse_forest(options['tree'], scaling))
        result = negative_bogoliubov(lifted_character(pi), coaction)
        counterterm = result.counterterm(forest).constant_term
        renormalised = result.renormalised(forest)
        preparation = result.preparation(forest)
        if options.get('format') == 'json':
            self.write_json({
                'forest': format_forest(forest),
                'counterterm': float(counterterm),
                'renormalised': str(renormalised),
                'preparation': str(preparation),
            })
            return
        self.stdout.write(f"psi_- = {float(counterterm)!r}")
        self.stdout.write(f"psi_+ = {renormalised}")
        self.stdout.write(f"psi_bar = {preparation}")

    def renormalise(self, options, scaling, coaction, pi):
        tree = parse_tree(options['tree'], scaling)
        x, y = (parse_point(options[name], scaling.d_plus_1) for name in ('x', 'y'))
        counterterm = negative_bogoliubov(lifted_character(pi), coaction).counterterm
        renormalisation = renormalisation_map(lambda forest: counterterm(forest).constant_term, coaction)
        model = RenormalisedModel(pi, renormalisation, scaling)
        tolerance = float(get_setting('MODEL_TOLERANCE'))
        image = renormalisation(tree)
        hat_pi = float(model.hat_pi(x)(tree).evaluate(y))
        pi_m = float(model.pi_m(x, tree).evaluate(y))
        verified = model.is_verified(tree, x, tolerance)
        if options.get('format') == 'json':
            self.write_json({
                'tree': format_tree(tree),
                'renormalisation': sum_to_json(image),
                'hat_pi_x_at_y': hat_pi,
                'pi_x_m_at_y': pi_m,
                'cointeraction': verified,
            })
            return
        self.stdout.write(f"M = {format_sum(image)}")
        self.stdout.write(f"hat Pi_x(y) = {hat_pi!r}")
        self.stdout.write(f"Pi_x M(y) = {pi_m!r}")
        self.stdout.write(f"cointeraction: {'verified' if verified else 'not verified'}")

    def cointeraction(self, options, scaling, coaction):
        if options.get('tree'):
            trees = [parse_tree(options['tree'], scaling)]
        else:
            max_edges = options['max_edges'] or int(get_setting('MAX_EDGES'))
            trees = enumerate_trees(scaling, max_edges)
        reports = cointeraction_checks(self.progress(trees, options, desc='cointeraction'), coaction)
        passed, count, failures = summarise(reports)
        if options.get('format') == 'json':
            self.write_json({
                'passed': passed,
                'n_checks': count,
                'checks': [report.as_dict() for report in reports],
            })
        else:
            for report in reports:
                status = 'PASS' if report.passed else 'FAIL'
                suffix = '' if report.asserted else ' (reported)'
                self.stdout.write(f"{status} {report.check} {report.tree}{suffix}")
            self.stdout.write(f"cointeraction: {count - len(failures)}/{count} checks passed")
        if not passed:
            self.fail_checks(f"{len(failures)} cointeraction checks failed.")
