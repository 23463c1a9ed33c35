from renormalisation.hopf.antipodes import antipode_plus
from renormalisation.hopf.ck import ck_antipode, parse_ck_forest
from renormalisation.hopf.modes import AntipodeVariant
from renormalisation.trees.grammar import parse_tree
from renormalisation.utils.commands import RenormalisationCommand
from renormalisation.utils.recursion import STRATEGIES


class Command(RenormalisationCommand):
    """
    Django command printing an antipode of a decorated tree.
    """

    help = """Apply an antipode variant to a tree, e.g. --variant twisted --tree "J[t,0](1)"."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--tree',
            type=str,
            required=True,
            help='Tree expression. Variants other than "full" need a tree of the positive part.'
        )
        parser.add_argument(
            '--variant',
            type=str,
            choices=[variant.value for variant in AntipodeVariant] + ['ck'],
            default=AntipodeVariant.BAR.value,
            help='Antipode variant; "ck" is the Connes-Kreimer antipode of a plain forest.'
        )
        parser.add_argument(
            '--strategy',
            type=str,
            choices=STRATEGIES,
            default=STRATEGIES[0],
            help='Evaluation strategy of the recursion.'
        )

    def run(self, *args, **options):
        if options['variant'] == 'ck':
            result = ck_antipode(parse_ck_forest(options['tree']), strategy=options['strategy'])
        else:
            scaling = self.load_scaling(options)
            result = antipode_plus(
                parse_tree(options['tree'], scaling),
                AntipodeVariant(options['variant']),
                scaling,
                cutoff=self.get_cutoff(options),
                strategy=options['strategy'],
            )
        self.write_sum(result, options)
