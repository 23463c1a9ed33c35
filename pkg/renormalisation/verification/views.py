from django_filters.rest_framework import DjangoFilterBackend
from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import OpenApiParameter, extend_schema, extend_schema_view
from rest_framework import filters, status
from rest_framework.mixins import ListModelMixin, RetrieveModelMixin
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.viewsets import GenericViewSet

from renormalisation.utils.pagination import StandardPagination
from renormalisation.verification.models import SuiteRun
from renormalisation.verification.serializers import (ScheduledRunSerializer, SuiteRunDetailSerializer,
                                                      SuiteRunRequestSerializer, SuiteRunSerializer)
from renormalisation.verification.tasks import run_suite_task


@extend_schema_view(
    list=extend_schema(
        parameters=[
            OpenApiParameter(
                name='date_from',
                type=OpenApiTypes.DATE,
                description='Starting date from which the runs will return.',
                required=False,
            ),
            OpenApiParameter(
                name='ordering',
                type=OpenApiTypes.STR,
                location=OpenApiParameter.QUERY,
                enum=['created_at', '-created_at', 'id', '-id'],
                description='Order by `created_at` or `id`, ascending or descending (`-`).',
            ),
        ]
    ),
    create=extend_schema(request=SuiteRunRequestSerializer, responses={202: ScheduledRunSerializer}),
)
class SuiteRunViewSet(GenericViewSet, ListModelMixin, RetrieveModelMixin):
    """
    ViewSet for the persisted suite runs.
    """
    queryset = SuiteRun.objects
    serializer_class = SuiteRunSerializer
    authentication_classes = []  # No authentication required by default
    permission_classes = [AllowAny]  # Allow any user by default
    pagination_class = StandardPagination
    filter_backends = [
        DjangoFilterBackend,
        filters.OrderingFilter
    ]
    filterset_fields = ['suite', 'passed', 'seed']
    ordering_fields = ['created_at', 'id']
    ordering = ['-created_at', '-id']

    def get_queryset(self):
        queryset = super().get_queryset()
        if self.action == 'list':
            date_from = self.request.query_params.get('date_from')
            if date_from:
                queryset = queryset.filter(created_at__date__gte=date_from)
        return queryset.all()

    def get_serializer_class(self):
        if self.action == 'retrieve':
            return SuiteRunDetailSerializer
        if self.action == 'create':
            return SuiteRunRequestSerializer
        return super().get_serializer_class()

    def create(self, request, *args, **kwargs):
        """
        Schedule a run of an acceptance suite. The run is stored when the task finishes.
        """
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        result = run_suite_task.delay(data['suite'], seed=data['seed'], max_edges=data['max_edges'])
        return Response({'task_id': result.id, 'suite': data['suite']}, status=status.HTTP_202_ACCEPTED)
