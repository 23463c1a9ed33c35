import json
from fractions import Fraction

from django.core.management.base import CommandError

from renormalisation.targets.jets import taylor_jet
from renormalisation.targets.laurent import laurent_pole_project
from renormalisation.targets.oscillatory import osc_project
from renormalisation.targets.serializers import (GaussPolyFnSerializer, LaurentSeriesSerializer,
                                                 OscillatoryFnSerializer)
from renormalisation.utils.commands import EXIT_USAGE, RenormalisationCommand
from renormalisation.utils.exceptions import DomainError
from renormalisation.utils.points import parse_point

OPERATIONS = ('eval', 'convolve', 'jet', 'pole', 'osc')


class Command(RenormalisationCommand):
    help = 'Evaluate, convolve and Taylor-expand target algebra values, and apply their projectors.'

    def add_command_arguments(self, parser):
        parser.add_argument(
            'operation',
            type=str,
            choices=OPERATIONS,
            help='The operation to run.'
        )
        parser.add_argument(
            '--function',
            type=str,
            default=None,
            help='JSON encoding of the input (Gaussian-polynomial, or oscillatory for "osc"); "@path" reads a file.'
        )
        parser.add_argument(
            '--other',
            type=str,
            default=None,
            help='JSON encoding of the second convolution factor.'
        )
        parser.add_argument(
            '--series',
            type=str,
            default=None,
            help='JSON encoding of a Laurent series for "pole".'
        )
        parser.add_argument(
            '--point',
            type=str,
            default=None,
            help='Evaluation point, e.g. "0.5" or "1,0".'
        )
        parser.add_argument(
            '--alpha',
            type=str,
            default=None,
            help='Order of the Taylor jet.'
        )
        parser.add_argument(
            '--at',
            type=str,
            default=None,
            help='Base point of the Taylor jet.'
        )

    def run(self, *args, **options):
        operation = options['operation']
        if operation == 'pole':
            series = self.load(options, 'series', LaurentSeriesSerializer)
            self.write_value(laurent_pole_project(series), LaurentSeriesSerializer, options)
        elif operation == 'osc':
            function = self.load(options, 'function', OscillatoryFnSerializer)
            self.write_value(osc_project(function), OscillatoryFnSerializer, options)
        elif operation == 'eval':
            function = self.load(options, 'function', GaussPolyFnSerializer)
            point = parse_point(self.require(options, 'point'), function.d_plus_1)
            self.write_number(function.evaluate(point), options)
        elif operation == 'convolve':
            function = self.load(options, 'function', GaussPolyFnSerializer)
            other = self.load(options, 'other', GaussPolyFnSerializer)
            self.write_value(function.convolve(other), GaussPolyFnSerializer, options)
        else:
            self.jet(options)

    def jet(self, options):
        function = self.load(options, 'function', GaussPolyFnSerializer)
        scaling = self.load_scaling(options)
        if scaling.d_plus_1 != function.d_plus_1:
            raise DomainError(f"The scaling has dimension {scaling.d_plus_1}, the function {function.d_plus_1}.")
        try:
            alpha = Fraction(self.require(options, 'alpha'))
        except (ValueError, ZeroDivisionError):
            raise CommandError(f"Invalid order {options['alpha']!r}.", returncode=EXIT_USAGE)
        at = parse_point(self.require(options, 'at'), function.d_plus_1)
        result = taylor_jet(function, alpha, at, scaling.s)
        if options.get('point'):
            self.write_number(result.evaluate(parse_point(options['point'], function.d_plus_1)), options)
        else:
            self.write_value(result, GaussPolyFnSerializer, options)

    def require(self, options, name):
        if options.get(name) is None:
            raise CommandError(f"--{name} is required for {options['operation']}.", returncode=EXIT_USAGE)
        return options[name]

    def load(self, options, name, serializer_class):
        text = self.require(options, name)
        try:
            if text.startswith('@'):
                with open(text[1:]) as f:
                    data = json.load(f)
            else:
                data = json.loads(text)
        except (OSError, json.JSONDecodeError) as e:
            raise CommandError(f"Cannot read --{name}: {e}", returncode=EXIT_USAGE)
        serializer = serializer_class(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def write_value(self, value, serializer_class, options):
        if options.get('format') == 'json':
            self.write_json(serializer_class(value).data)
        else:
            self.stdout.write(str(value))

    def write_number(self, value, options):
        if options.get('format') == 'json':
            self.write_json({'value': float(value)})
        else:
            self.stdout.write(repr(float(value)))
