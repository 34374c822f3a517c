from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from apps.core.conf import DEFAULTS, rigidity_setting
from apps.core.exceptions import RigidityError


def error_response(exc):
    """
    400 response for a domain error, keeping its exit status for CLI parity.
    """
    return Response(
        {"detail": str(exc), "error": type(exc).__name__, "exit_code": exc.exit_code},
        status=status.HTTP_400_BAD_REQUEST,
    )


class RigidityErrorMixin:
    """
    Turns RigidityError raised inside a view into a 400 response.
    """

    def handle_exception(self, exc):
        if isinstance(exc, RigidityError):
            return error_response(exc)
        return super().handle_exception(exc)


@api_view(["GET"])
@permission_classes([AllowAny])
def health_check(request):
    """
    Health check endpoint for load balancers and monitoring.
    """
    return Response({"status": "healthy", "message": "API is running successfully"})


@api_view(["GET"])
@permission_classes([AllowAny])
def api_info(request):
    """
    API information endpoint.
    """
    return Response(
        {
            "name": "rigidity",
            "schema": rigidity_setting("SCHEMA_VERSION"),
            "description": "Exact finiteness certificates for matrix groups",
            "settings": {name: rigidity_setting(name) for name in DEFAULTS},
            "endpoints": {
                "certify": "/api/v1/certify/",
                "runs": "/api/v1/certify/runs/",
                "order": "/api/v1/order/",
                "kronecker": "/api/v1/kronecker/<degree>/",
                "building": "/api/v1/building/ball/",
                "documentation": "/api/docs/",
                "health": "/api/v1/core/health/",
            },
        }
    )
