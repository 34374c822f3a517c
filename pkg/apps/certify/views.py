from django_filters.rest_framework import DjangoFilterBackend
from rest_framework import filters, generics, status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.core.views import RigidityErrorMixin

from .filters import CertificationRunFilter
from .models import CertificationRun
from .serializers import (
    CertificationRunListSerializer,
    CertificationRunSerializer,
    CertifyQuerySerializer,
)
from .services import certify_request


class CertifyView(RigidityErrorMixin, APIView):
    """
    Certify finiteness of the group generated by the posted matrices.
    """

    permission_classes = [AllowAny]

    def post(self, request):
        query = CertifyQuerySerializer(data=request.query_params.dict())
        query.is_valid(raise_exception=True)
        options = query.validated_data
        certificate, payload, run = certify_request(
            request.data,
            cap=options.get("cap"),
            with_cayley=options["cayley"],
            persist=options["persist"],
        )
        data = dict(payload)
        if run is not None:
            data["run"] = run.pk
        return Response(data, status=status.HTTP_200_OK)


class CertificationRunListView(generics.ListAPIView):
    """
    List stored certification runs with filtering.
    """

    queryset = CertificationRun.objects.all()
    serializer_class = CertificationRunListSerializer
    permission_classes = [AllowAny]
    filter_backends = [DjangoFilterBackend, filters.OrderingFilter]
    filterset_class = CertificationRunFilter
    ordering_fields = ["created_at", "dimension", "group_order"]
    ordering = ["-created_at"]


class CertificationRunDetailView(generics.RetrieveAPIView):
    queryset = CertificationRun.objects.all()
    serializer_class = CertificationRunSerializer
    permission_classes = [AllowAny]
