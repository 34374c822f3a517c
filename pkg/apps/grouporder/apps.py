from django.apps import AppConfig


class GrouporderConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.grouporder"
    verbose_name = "Matrix orders and group closure"
