from fractions import Fraction

from renormalisation.trees.decorations import Scaling
from renormalisation.trees.serializers import ScalingSerializer


class TestScalingSerializer:
    """
    Test validation of the scaling configuration.
    """

    def test_valid(self):
        """Test that a valid payload gives the scaling."""
        serializer = ScalingSerializer(data={
            'd_plus_1': 2,
            's': [2, 1],
            'types': [
                {'name': 't', 'degree': '2', 'kind': 'kernel'},
                {'name': 'l', 'degree': '-301/100', 'kind': 'noise'},
            ],
        })
        assert serializer.is_valid(), serializer.errors
        scaling = serializer.save()
        assert isinstance(scaling, Scaling)
        assert scaling.type_degree('l') == Fraction(-301, 100)

    def test_wrong_length(self):
        """Test that the scaling must match the dimension."""
        serializer = ScalingSerializer(data={
            'd_plus_1': 2,
            's': [1],
            'types': [{'name': 't', 'degree': '2', 'kind': 'kernel'}],
        })
        assert not serializer.is_valid()
        assert 's' in serializer.errors

    def test_wrong_sign(self):
        """Test that a noise of positive degree is invalid."""
        serializer = ScalingSerializer(data={
            'd_plus_1': 1,
            's': [1],
            'types': [{'name': 'l', 'degree': '3/2', 'kind': 'noise'}],
        })
        assert not serializer.is_valid()

    def test_round_trip_with_config(self, scaling):
        """Test that a configuration file is a valid payload."""
        serializer = ScalingSerializer(data=scaling.to_config())
        assert serializer.is_valid(), serializer.errors
        assert serializer.save() == scaling
