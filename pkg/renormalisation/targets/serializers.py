from fractions import Fraction

from rest_framework import serializers
from rest_framework.exceptions import ValidationError
from rest_framework.serializers import Serializer

from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.laurent import LaurentSeries
from renormalisation.targets.oscillatory import OscillatoryFn
from renormalisation.targets.polynomial import Polynomial
from renormalisation.trees.linear import format_coefficient, parse_coefficient
from renormalisation.utils.conf import get_setting
from renormalisation.utils.exceptions import RenormalisationError


def _coefficient(value):
    try:
        return parse_coefficient(value)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"Invalid coefficient {value!r}.")


def _format(value):
    if isinstance(value, int):
        value = Fraction(value)
    return format_coefficient(value)


def polynomial_records(polynomial):
    return [
        {'exponent': list(exponent), 'coeff': _format(coeff)}
        for exponent, coeff in sorted(polynomial.items())
    ]


def build_polynomial(nvars, records):
    try:
        return Polynomial(nvars, [(record['exponent'], record['coeff']) for record in records])
    except RenormalisationError as e:
        raise ValidationError(str(e))


class MonomialSerializer(Serializer):
    """
    Serializer for one coefficient of a polynomial.
    """
    exponent = serializers.ListField(child=serializers.IntegerField(min_value=0))
    coeff = serializers.CharField(help_text='Rational "num/den" or float coefficient.')

    def validate_coeff(self, value):
        return _coefficient(value)


class GaussTermSerializer(Serializer):
    """
    Serializer for one term p(x) exp(-a|x|^2).
    """
    width = serializers.CharField(help_text='Rational width a >= 0.')
    polynomial = MonomialSerializer(many=True)

    def validate_width(self, value):
        try:
            width = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"Invalid width {value!r}.")
        if width < 0:
            raise ValidationError("Widths must be non-negative.")
        return width


class GaussPolyFnSerializer(Serializer):
    """
    Serializer for the JSON encoding of a Gaussian-polynomial function.
    """
    d_plus_1 = serializers.IntegerField(min_value=1)
    terms = GaussTermSerializer(many=True)

    def validate(self, attrs):
        n = attrs['d_plus_1']
        try:
            attrs['function'] = GaussPolyFn(n, [
                (term['width'], build_polynomial(n, term['polynomial'])) for term in attrs['terms']
            ])
        except RenormalisationError as e:
            raise ValidationError(str(e))
        return attrs

    def create(self, validated_data):
        return validated_data['function']

    def to_representation(self, instance):
        return {
            'd_plus_1': instance.d_plus_1,
            'terms': [
                {'width': str(width), 'polynomial': polynomial_records(polynomial)}
                for width, polynomial in sorted(instance.items(), key=lambda item: item[0])
            ],
        }


class LaurentSeriesSerializer(Serializer):
    """
    Serializer for a truncated Laurent series, with coefficients keyed by exponent.
    """
    order = serializers.IntegerField(required=False)
    coefficients = serializers.DictField(child=serializers.CharField())

    def validate_coefficients(self, value):
        try:
            return {int(exponent): _coefficient(coeff) for exponent, coeff in value.items()}
        except ValueError:
            raise ValidationError("Exponents must be integers.")

    def validate(self, attrs):
        attrs.setdefault('order', int(get_setting('LAURENT_ORDER')))
        attrs['series'] = LaurentSeries(attrs['coefficients'], order=attrs['order'])
        return attrs

    def create(self, validated_data):
        return validated_data['series']

    def to_representation(self, instance):
        return {
            'order': instance.order,
            'coefficients': {str(n): _format(c) for n, c in instance.items()},
        }


class OscillatoryTermSerializer(Serializer):
    """
    Serializer for one term Q(z) exp(i z P(k)).
    """
    phase = MonomialSerializer(many=True)
    amplitude = MonomialSerializer(many=True)


class OscillatoryFnSerializer(Serializer):
    """
    Serializer for the JSON encoding of an oscillatory function.
    """
    frequencies = serializers.IntegerField(min_value=1)
    terms = OscillatoryTermSerializer(many=True)

    def validate(self, attrs):
        n = attrs['frequencies']
        try:
            attrs['function'] = OscillatoryFn(n, [
                (build_polynomial(n, term['phase']), build_polynomial(1, term['amplitude']))
                for term in attrs['terms']
            ])
        except RenormalisationError as e:
            raise ValidationError(str(e))
        return attrs

    def create(self, validated_data):
        return validated_data['function']

    def to_representation(self, instance):
        return {
            'frequencies': instance.frequencies,
            'terms': [
                {'phase': polynomial_records(phase), 'amplitude': polynomial_records(amplitude)}
                for phase, amplitude in sorted(instance.items(), key=lambda item: item[0].key)
            ],
        }
