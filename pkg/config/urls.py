"""
URL configuration for the rigidity project.
"""
from drf_spectacular.views import SpectacularAPIView, SpectacularRedocView, SpectacularSwaggerView

from django.contrib import admin
from django.urls import include, path

urlpatterns = [
    # Admin
    path("admin/", admin.site.urls),
    # API Documentation
    path("api/schema/", SpectacularAPIView.as_view(), name="schema"),
    path("api/docs/", SpectacularSwaggerView.as_view(url_name="schema"), name="swagger-ui"),
    path("api/redoc/", SpectacularRedocView.as_view(url_name="schema"), name="redoc"),
    # API endpoints
    path("api/v1/core/", include("apps.core.urls")),
    path("api/v1/certify/", include("apps.certify.urls")),
    path("api/v1/order/", include("apps.grouporder.urls")),
    path("api/v1/kronecker/", include("apps.kronecker.urls")),
    path("api/v1/building/", include("apps.building.urls")),
]
