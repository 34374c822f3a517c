from rest_framework import serializers
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.core.views import RigidityErrorMixin

from .services import order_request


class OrderQuerySerializer(serializers.Serializer):
    check = serializers.BooleanField(default=False)
    cap = serializers.IntegerField(min_value=1, required=False)


class OrderView(RigidityErrorMixin, APIView):
    """
    Order of a single posted matrix.
    """

    permission_classes = [AllowAny]

    def post(self, request):
        query = OrderQuerySerializer(data=request.query_params.dict())
        query.is_valid(raise_exception=True)
        _, payload, _ = order_request(
            request.data, check=query.validated_data["check"], cap=query.validated_data.get("cap")
        )
        return Response(payload)
