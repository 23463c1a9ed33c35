from rest_framework import serializers
from rest_framework.serializers import ModelSerializer, Serializer

from renormalisation.verification.models import SuiteRun
from renormalisation.verification.suites import SUITES


class CheckReportSerializer(Serializer):
    """
    Serializer for one check report, as emitted by `verify` and `model verify`.

    This is the published JSON report schema.
    """
    check = serializers.CharField()
    tree = serializers.CharField()
    points = serializers.ListField(child=serializers.JSONField())
    max_gap = serializers.FloatField(allow_null=True)
    passed = serializers.BooleanField()
    asserted = serializers.BooleanField(required=False, default=True)
    details = serializers.DictField(required=False)

    def get_fields(self):
        fields = super().get_fields()
        fields['pass'] = fields.pop('passed')
        return fields


class SuiteRunSerializer(ModelSerializer):
    """
    Serializer for the suite runs.
    """

    class Meta:
        model = SuiteRun
        fields = ['id', 'suite', 'seed', 'max_edges', 'passed', 'n_checks', 'n_failures', 'created_at']
        read_only_fields = fields


class SuiteRunDetailSerializer(SuiteRunSerializer):
    """
    Serializer for a suite run with its reports.
    """
    report = CheckReportSerializer(many=True, read_only=True)

    class Meta(SuiteRunSerializer.Meta):
        fields = SuiteRunSerializer.Meta.fields + ['report']
        read_only_fields = fields


class SuiteRunRequestSerializer(Serializer):
    """
    Serializer for the request scheduling a suite run.
    """
    suite = serializers.ChoiceField(choices=list(SUITES))
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)
    max_edges = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1, max_value=6)


class ScheduledRunSerializer(Serializer):
    task_id = serializers.CharField()
    suite = serializers.CharField()
