from django.apps import AppConfig


class ExactnumConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.exactnum"
    verbose_name = "Exact scalars and valuations"
