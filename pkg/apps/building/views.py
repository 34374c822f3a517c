from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.core.conf import rigidity_setting
from apps.core.views import RigidityErrorMixin

from .ball import projected_ball_size
from .serializers import BallQuerySerializer, FixedPointQuerySerializer
from .services import ball_request, fixed_point_request


def _too_large(p, d, r):
    projected = projected_ball_size(p, d, r)
    if projected > rigidity_setting("BALL_VERTEX_WARNING"):
        return Response(
            {"detail": f"ball p={p}, d={d}, r={r} may hold up to {projected} vertices"},
            status=status.HTTP_400_BAD_REQUEST,
        )
    return None


class BallView(RigidityErrorMixin, APIView):
    """
    Ball around the standard lattice class.
    """

    permission_classes = [AllowAny]

    def get(self, request):
        query = BallQuerySerializer(data=request.query_params.dict())
        query.is_valid(raise_exception=True)
        p, d, r = (query.validated_data[key] for key in ("p", "d", "r"))
        refusal = _too_large(p, d, r)
        if refusal is not None:
            return refusal
        _, payload = ball_request(p, d, r, full=query.validated_data["full"])
        return Response(payload)


class FixedPointView(RigidityErrorMixin, APIView):
    """
    Vertices fixed by the posted rational generators.
    """

    permission_classes = [AllowAny]

    def post(self, request):
        query = FixedPointQuerySerializer(data=request.query_params.dict())
        query.is_valid(raise_exception=True)
        _, payload = fixed_point_request(
            request.data, query.validated_data["p"], query.validated_data["r"]
        )
        return Response(payload)
