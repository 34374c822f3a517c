from django.apps import AppConfig


class KroneckerConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.kronecker"
    verbose_name = "Unit-circle integer polynomials"
