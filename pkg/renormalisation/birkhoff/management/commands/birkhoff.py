from renormalisation.birkhoff.bogoliubov import rs_bogoliubov, rs_bogoliubov_simplified
from renormalisation.birkhoff.classical import (LAURENT_CHARACTERS, classical_birkhoff, laurent_character,
                                                 oscillatory_character)
from renormalisation.birkhoff.comodule import comodule_birkhoff
from renormalisation.birkhoff.structures import ck_comodule, ck_structure, simplified_comodule, simplified_structure
from renormalisation.hopf.ck import parse_ck_forest
from renormalisation.modelmaps.kernels import KernelAssignment, canonical_family, canonical_pi
from renormalisation.targets.algebras import laurent_algebra, oscillatory_algebra
from renormalisation.targets.jets import TaylorJetFamily
from renormalisation.targets.laurent import default_order, laurent_pole_project
from renormalisation.targets.oscillatory import osc_project
from renormalisation.targets.rota_baxter import evaluation_projector
from renormalisation.targets.serializers import LaurentSeriesSerializer, OscillatoryFnSerializer
from renormalisation.trees.grammar import format_tree, parse_tree
from renormalisation.trees.tree import degree
from renormalisation.utils.commands import RenormalisationCommand
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.points import parse_point
from renormalisation.utils.recursion import STRATEGIES

RECURSIONS = ('classical', 'comodule', 'rs', 'rs-simplified')
TARGETS = ('laurent', 'gausspoly', 'osc')


class Command(RenormalisationCommand):
    """
    Django command running one of the Bogoliubov-type recursions on a single tree.
    """

    help = """Print phi_bar, phi^- and phi^+ of a tree, e.g. --recursion rs --tree "X^[2]" --x 0 --xbar 1 --y 0.5."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--recursion',
            type=str,
            choices=RECURSIONS,
            default='rs',
            help='Which recursion to run.'
        )
        parser.add_argument(
            '--target',
            type=str,
            choices=TARGETS,
            default='gausspoly',
            help='Target algebra. Laurent and oscillatory targets use plain Connes-Kreimer trees.'
        )
        parser.add_argument(
            '--tree',
            type=str,
            required=True,
            help='Tree expression; a plain forest such as "1 . I[e,0](1)" for the laurent and osc targets.'
        )
        parser.add_argument(
            '--character',
            type=str,
            choices=sorted(LAURENT_CHARACTERS),
            default='pole',
            help='Toy character of the laurent target.'
        )
        parser.add_argument(
            '--order',
            type=int,
            default=None,
            help='Truncation order of the Laurent series (default from settings).'
        )
        parser.add_argument(
            '--max-grade',
            type=int,
            default=6,
            help='Largest grade accepted by the classical recursion.'
        )
        for name, description in (('x', 'Base point of the Taylor jets'),
                                  ('xbar', 'Recentering point of the polynomials'),
                                  ('y', 'Evaluation point')):
            parser.add_argument(
                f'--{name}',
                type=str,
                default='0',
                help=f'{description}, e.g. "0.5" or "1,0".'
            )
        parser.add_argument(
            '--strategy',
            type=str,
            choices=STRATEGIES,
            default=STRATEGIES[0],
            help='Evaluation strategy of the recursion.'
        )

    def run(self, *args, **options):
        recursion = options['recursion']
        target = options['target']
        if recursion in ('rs', 'rs-simplified') and target != 'gausspoly':
            raise DomainError(f"The {recursion} recursion takes values in Gaussian-polynomial functions.")
        if target == 'gausspoly':
            self.run_gausspoly(options)
        else:
            self.run_ck(options)

    def run_ck(self, options):
        forest = parse_ck_forest(options['tree'])
        if options['target'] == 'laurent':
            order = options['order'] or default_order()
            algebra = laurent_algebra(order)
            phi = laurent_character(options['character'], algebra, order)
            projector = laurent_pole_project
        else:
            algebra = oscillatory_algebra(1)
            phi = oscillatory_character(algebra)
            projector = osc_project
        if options['recursion'] == 'classical':
            result = classical_birkhoff(phi, ck_structure(), projector, options['max_grade'],
                                        strategy=options['strategy'])
            values = {
                'preparation': result.preparation(forest.trees[0]) if len(forest) == 1 else None,
                'counterterm': result.counterterm(forest),
                'renormalised': result.renormalised(forest),
            }
        else:
            result = comodule_birkhoff(phi, ck_comodule(), projector=projector, strategy=options['strategy'])
            values = {
                'preparation': result.preparation(forest),
                'counterterm': result.counterterm(forest),
                'renormalised': result.renormalised(forest),
            }
        serializer_class = LaurentSeriesSerializer if options['target'] == 'laurent' else OscillatoryFnSerializer
        self.write_values(options, ' . '.join(format_tree(tree) for tree in forest), values, serializer_class)

    def run_gausspoly(self, options):
        scaling = self.load_scaling(options)
        d_plus_1 = scaling.d_plus_1
        tree = parse_tree(options['tree'], scaling)
        x = parse_point(options['x'], d_plus_1)
        xbar = parse_point(options['xbar'], d_plus_1)
        y = parse_point(options['y'], d_plus_1)
        assignment = KernelAssignment.default(scaling)
        recursion = options['recursion']
        strategy = options['strategy']
        if recursion == 'rs':
            result = rs_bogoliubov(canonical_family(assignment, scaling), x, xbar, scaling, strategy=strategy)
            at = xbar
        elif recursion == 'rs-simplified':
            result = rs_bogoliubov_simplified(canonical_pi(assignment, (0,) * d_plus_1, scaling), scaling,
                                              strategy=strategy)
            at = (0.0,) * d_plus_1
        elif recursion == 'classical':
            phi = canonical_pi(assignment, xbar, scaling)
            result = classical_birkhoff(phi, simplified_structure(scaling), evaluation_projector(x),
                                        options['max_grade'], strategy=strategy)
            at = xbar
        else:
            phi = canonical_pi(assignment, xbar, scaling)
            result = comodule_birkhoff(phi, simplified_comodule(scaling), family=TaylorJetFamily(x, scaling.s),
                                       degree=lambda element: degree(element, scaling), strategy=strategy)
            at = xbar
        if recursion == 'classical' and not tree.is_planted:
            preparation = None
        else:
            preparation = float(result.preparation(tree).evaluate(y))
        values = {
            'preparation': preparation,
            'counterterm': float(result.counterterm(tree).evaluate(at)),
            'renormalised': float(result.renormalised(tree).evaluate(y)),
        }
        self.write_values(options, format_tree(tree), values)

    def write_values(self, options, tree, values, serializer_class=None):
        if options.get('format') == 'json':
            data = {'recursion': options['recursion'], 'target': options['target'], 'tree': tree}
            for name, value in values.items():
                if value is None or serializer_class is None:
                    data[name] = value
                else:
                    data[name] = serializer_class(value).data
            self.write_json(data)
            return
        labels = {'preparation': 'phi_bar', 'counterterm': 'phi^-', 'renormalised': 'phi^+'}
        for name, value in values.items():
            if value is not None:
                self.stdout.write(f"{labels[name]} = {value}")
