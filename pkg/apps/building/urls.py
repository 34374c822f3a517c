from django.urls import path

from . import views

app_name = "building"

urlpatterns = [
    path("ball/", views.BallView.as_view(), name="ball"),
    path("fix/", views.FixedPointView.as_view(), name="fix"),
]
