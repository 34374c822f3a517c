from django.urls import path

from . import views

app_name = "kronecker"

urlpatterns = [
    path("<int:degree>/", views.KroneckerView.as_view(), name="kronecker"),
]
