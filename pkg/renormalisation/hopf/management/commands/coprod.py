from renormalisation.hopf.ck import ck_coproduct, parse_ck_tree
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import CoproductMode, ModeKind
from renormalisation.trees.grammar import parse_tree
from renormalisation.utils.commands import RenormalisationCommand


class Command(RenormalisationCommand):
    """
    Django command printing the coproduct of a decorated tree.
    """

    help = """Compute a coproduct or coaction of a tree, e.g. --mode hat --tree "I[t,0](1)"."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--tree',
            type=str,
            required=True,
            help='Tree expression, e.g. "X*I[t,0](I[l,0](1))".'
        )
        parser.add_argument(
            '--mode',
            type=str,
            choices=[kind.value for kind in ModeKind] + ['ck'],
            default=ModeKind.HAT.value,
            help='Coproduct to compute; "ck" is the Connes-Kreimer coproduct of a plain tree.'
        )

    def run(self, *args, **options):
        if options['mode'] == 'ck':
            result = ck_coproduct(parse_ck_tree(options['tree']))
        else:
            scaling = self.load_scaling(options)
            tree = parse_tree(options['tree'], scaling)
            mode = CoproductMode.parse(options['mode'], cutoff=self.get_cutoff(options))
            result = delta_plus(tree, mode, scaling)
        self.write_sum(result, options)
