"""
Shared base class of the management commands.
"""
import json
import logging
from fractions import Fraction

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError
from tqdm import tqdm

from renormalisation.trees.decorations import Scaling
from renormalisation.trees.grammar import format_sum, latex_sum, sum_to_json
from renormalisation.trees.serializers import ScalingSerializer
from renormalisation.utils.conf import get_setting
from renormalisation.utils.exceptions import InvariantViolation, RenormalisationError

logger = logging.getLogger(__name__)

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3

FORMATS = ('text', 'json', 'latex')


class RenormalisationCommand(BaseCommand):
    """
    Base command with the global `--config`, `--format`, `--seed` and `--cutoff` flags.

    Subclasses implement `add_command_arguments` and `run`. Errors of the algebra layer become
    exit codes: 2 for invalid input, 3 for internal consistency failures.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            '--config',
            type=str,
            default=None,
            help='Path to a JSON scaling config {d_plus_1, s, types}.'
        )
        parser.add_argument(
            '--format',
            type=str,
            choices=FORMATS,
            default='text',
            help='Output format.'
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help='Seed of the random generator (default from settings).'
        )
        parser.add_argument(
            '--cutoff',
            type=str,
            default=None,
            help='Bound on |l|_s for the truncated coproduct and antipode (e.g. "4" or "7/2").'
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except (ValidationError, RenormalisationError) as e:
            if isinstance(e, InvariantViolation):
                raise CommandError(f"Invariant violation: {e}", returncode=EXIT_INVARIANT)
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of RenormalisationCommand must provide a run() method')

    def load_scaling(self, options):
        path = options.get('config')
        if not path:
            return Scaling.default()
        try:
            with open(path) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise CommandError(f"Cannot read config {path}: {e}", returncode=EXIT_USAGE)
        serializer = ScalingSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def load_json_option(self, options, name):
        """Parse a JSON option; a value "@path" reads the file. None when the option is missing."""
        text = options.get(name)
        if not text:
            return None
        try:
            if text.startswith('@'):
                with open(text[1:]) as f:
                    return json.load(f)
            return json.loads(text)
        except (OSError, json.JSONDecodeError) as e:
            raise CommandError(f"Cannot read --{name.replace('_', '-')}: {e}", returncode=EXIT_USAGE)

    def get_cutoff(self, options):
        value = options.get('cutoff') or get_setting('DEFAULT_CUTOFF')
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise CommandError(f"Invalid cutoff {value!r}.", returncode=EXIT_USAGE)

    def get_seed(self, options):
        seed = options.get('seed')
        return get_setting('DEFAULT_SEED') if seed is None else seed

    def progress(self, iterable, options, **kwargs):
        if options.get('verbosity', 1) >= 2:
            return tqdm(iterable, **kwargs)
        return iterable

    def write_sum(self, combination, options):
        fmt = options.get('format', 'text')
        if fmt == 'json':
            self.write_json(sum_to_json(combination))
        elif fmt == 'latex':
            self.stdout.write(latex_sum(combination))
        else:
            self.stdout.write(format_sum(combination))

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2, sort_keys=True))

    def fail_checks(self, message):
        raise CommandError(message, returncode=EXIT_CHECK_FAILED)
