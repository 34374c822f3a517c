from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.core.views import RigidityErrorMixin

from .serializers import KroneckerQuerySerializer
from .services import kronecker_request


class KroneckerView(RigidityErrorMixin, APIView):
    """
    Monic integer polynomials of the given degree with all roots on the unit
    circle.
    """

    permission_classes = [AllowAny]

    def get(self, request, degree):
        query = KroneckerQuerySerializer(data=request.query_params.dict())
        query.is_valid(raise_exception=True)
        payload, _ = kronecker_request(degree, query.validated_data["method"])
        return Response(payload)
