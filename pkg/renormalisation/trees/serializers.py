from fractions import Fraction

from rest_framework import serializers
from rest_framework.exceptions import ValidationError
from rest_framework.serializers import Serializer

from renormalisation.trees.decorations import Scaling
from renormalisation.utils.exceptions import RenormalisationError


class EdgeTypeSerializer(Serializer):
    """
    Serializer for a type label of the degree table.
    """
    name = serializers.RegexField(r'^[A-Za-z][A-Za-z0-9_]*$')
    degree = serializers.CharField()
    kind = serializers.ChoiceField(choices=['kernel', 'noise'])

    def validate_degree(self, value):
        try:
            return str(Fraction(value))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"Invalid rational degree {value!r}.")


class ScalingSerializer(Serializer):
    """
    Serializer for the `{d_plus_1, s, types}` scaling configuration.
    """
    d_plus_1 = serializers.IntegerField(min_value=1)
    s = serializers.ListField(child=serializers.IntegerField(min_value=1))
    types = EdgeTypeSerializer(many=True)
    terminal_noise = serializers.BooleanField(default=True)

    def validate(self, attrs):
        if len(attrs['s']) != attrs['d_plus_1']:
            raise ValidationError({'s': f"Expected {attrs['d_plus_1']} entries."})
        try:
            attrs['scaling'] = Scaling.from_config(attrs)
        except RenormalisationError as e:
            raise ValidationError(str(e))
        return attrs

    def create(self, validated_data):
        return validated_data['scaling']


class TreeSumRecordSerializer(Serializer):
    """
    Serializer documenting one term of a TreeSum.
    """
    coeff = serializers.CharField(help_text='Rational coefficient as "num/den", or a float.')
    tree = serializers.CharField()


class TensorSumRecordSerializer(Serializer):
    """
    Serializer documenting one term of a TensorSum.
    """
    coeff = serializers.CharField(help_text='Rational coefficient as "num/den", or a float.')
    left = serializers.CharField()
    right = serializers.CharField()
