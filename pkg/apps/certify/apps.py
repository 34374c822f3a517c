from django.apps import AppConfig


class CertifyConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.certify"
    verbose_name = "Finiteness certification"
