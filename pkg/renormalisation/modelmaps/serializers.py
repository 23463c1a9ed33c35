from rest_framework import serializers
from rest_framework.exceptions import ValidationError
from rest_framework.serializers import Serializer

from renormalisation.modelmaps.kernels import KernelAssignment
from renormalisation.targets.serializers import GaussPolyFnSerializer
from renormalisation.utils.exceptions import RenormalisationError


class KernelAssignmentSerializer(Serializer):
    """
    Serializer for the kernels and noises of a model, keyed by edge type name.
    """
    d_plus_1 = serializers.IntegerField(min_value=1)
    kernels = serializers.DictField(child=GaussPolyFnSerializer(), required=False, default=dict)
    noises = serializers.DictField(child=GaussPolyFnSerializer(), required=False, default=dict)

    def validate(self, attrs):
        try:
            attrs['assignment'] = KernelAssignment(
                d_plus_1=attrs['d_plus_1'],
                kernels={name: data['function'] for name, data in attrs['kernels'].items()},
                noises={name: data['function'] for name, data in attrs['noises'].items()},
            )
        except RenormalisationError as e:
            raise ValidationError(str(e))
        return attrs

    def create(self, validated_data):
        return validated_data['assignment']

    def to_representation(self, instance):
        return {
            'd_plus_1': instance.d_plus_1,
            'kernels': {name: GaussPolyFnSerializer(f).data for name, f in sorted(instance.kernels.items())},
            'noises': {name: GaussPolyFnSerializer(f).data for name, f in sorted(instance.noises.items())},
        }


def load_assignment(data, scaling):
    """Validate JSON kernels and noises against `scaling`; None gives the default assignment."""
    if data is None:
        return KernelAssignment.default(scaling)
    serializer = KernelAssignmentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save().check(scaling)
