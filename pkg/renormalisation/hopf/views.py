from drf_spectacular.utils import extend_schema, extend_schema_view
from rest_framework import status
from rest_framework.decorators import action
from rest_framework.exceptions import ValidationError
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.viewsets import GenericViewSet

from renormalisation.hopf.antipodes import antipode_plus
from renormalisation.hopf.coproducts import delta_plus
from renormalisation.hopf.modes import AntipodeVariant, CoproductMode
from renormalisation.hopf.serializers import (AntipodeRequestSerializer, AntipodeResponseSerializer,
                                              CoproductRequestSerializer, CoproductResponseSerializer)
from renormalisation.trees.grammar import format_sum, format_tree, latex_sum, sum_to_json
from renormalisation.utils.exceptions import RenormalisationError


def _payload(tree, result):
    return {
        'tree': format_tree(tree),
        'terms': sum_to_json(result),
        'text': format_sum(result),
        'latex': latex_sum(result),
    }


@extend_schema_view(
    coproduct=extend_schema(request=CoproductRequestSerializer, responses={200: CoproductResponseSerializer}),
    antipode=extend_schema(request=AntipodeRequestSerializer, responses={200: AntipodeResponseSerializer}),
)
class TreeAlgebraViewSet(GenericViewSet):
    """
    ViewSet computing coproducts and antipodes of decorated trees.
    """
    authentication_classes = []  # No authentication required by default
    permission_classes = [AllowAny]  # Allow any user by default
    pagination_class = None

    @action(
        methods=['POST'],
        detail=False,
        url_path='coproduct',
        url_name='coproduct',
        serializer_class=CoproductRequestSerializer,
    )
    def coproduct(self, request, *args, **kwargs):
        """
        Action that returns the coproduct of a tree in the requested mode.
        """
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            mode = CoproductMode.parse(data['mode'], cutoff=data['cutoff'])
            result = delta_plus(data['tree'], mode, data['scaling'])
        except RenormalisationError as e:
            raise ValidationError({'detail': str(e)})
        return Response({'mode': str(mode), **_payload(data['tree'], result)}, status=status.HTTP_200_OK)

    @action(
        methods=['POST'],
        detail=False,
        url_path='antipode',
        url_name='antipode',
        serializer_class=AntipodeRequestSerializer,
    )
    def antipode(self, request, *args, **kwargs):
        """
        Action that returns an antipode variant applied to a tree.
        """
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            result = antipode_plus(
                data['tree'],
                AntipodeVariant(data['variant']),
                data['scaling'],
                cutoff=data['cutoff'],
                strategy=data['strategy'],
            )
        except RenormalisationError as e:
            raise ValidationError({'detail': str(e)})
        return Response({'variant': data['variant'], **_payload(data['tree'], result)}, status=status.HTTP_200_OK)
