from fractions import Fraction

from rest_framework import serializers
from rest_framework.exceptions import ValidationError
from rest_framework.serializers import Serializer

from renormalisation.hopf.modes import AntipodeVariant, ModeKind
from renormalisation.trees.decorations import Scaling
from renormalisation.trees.grammar import parse_tree
from renormalisation.trees.serializers import (ScalingSerializer, TensorSumRecordSerializer,
                                               TreeSumRecordSerializer)
from renormalisation.utils.conf import get_setting
from renormalisation.utils.exceptions import RenormalisationError
from renormalisation.utils.recursion import STRATEGIES


class TreeRequestSerializer(Serializer):
    """
    Base serializer for requests about one tree, with an optional scaling.
    """
    scaling = ScalingSerializer(required=False)
    tree = serializers.CharField(help_text='Tree expression, e.g. "X*I[t,0](I[l,0](1))".')
    cutoff = serializers.CharField(required=False, help_text='Bound on |l|_s for the full variants.')

    def validate_cutoff(self, value):
        try:
            cutoff = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"Invalid cutoff {value!r}.")
        if cutoff < 0:
            raise ValidationError("Cutoff must be non-negative.")
        return cutoff

    def validate(self, attrs):
        scaling = attrs['scaling']['scaling'] if 'scaling' in attrs else Scaling.default()
        try:
            attrs['tree'] = parse_tree(attrs['tree'], scaling)
        except RenormalisationError as e:
            raise ValidationError({'tree': str(e)})
        attrs['scaling'] = scaling
        attrs.setdefault('cutoff', Fraction(get_setting('DEFAULT_CUTOFF')))
        return attrs


class CoproductRequestSerializer(TreeRequestSerializer):
    mode = serializers.ChoiceField(choices=[kind.value for kind in ModeKind], default=ModeKind.HAT.value)


class AntipodeRequestSerializer(TreeRequestSerializer):
    variant = serializers.ChoiceField(
        choices=[variant.value for variant in AntipodeVariant],
        default=AntipodeVariant.BAR.value,
    )
    strategy = serializers.ChoiceField(choices=STRATEGIES, default=STRATEGIES[0])


class CoproductResponseSerializer(Serializer):
    """
    Serializer documenting a computed coproduct.
    """
    tree = serializers.CharField()
    mode = serializers.CharField()
    terms = TensorSumRecordSerializer(many=True)
    text = serializers.CharField()
    latex = serializers.CharField()


class AntipodeResponseSerializer(Serializer):
    """
    Serializer documenting a computed antipode.
    """
    tree = serializers.CharField()
    variant = serializers.CharField()
    terms = TreeSumRecordSerializer(many=True)
    text = serializers.CharField()
    latex = serializers.CharField()
