from django.urls import path

from . import views

app_name = "certify"

urlpatterns = [
    path("", views.CertifyView.as_view(), name="certify"),
    path("runs/", views.CertificationRunListView.as_view(), name="run-list"),
    path("runs/<int:pk>/", views.CertificationRunDetailView.as_view(), name="run-detail"),
]
