from django.contrib import admin

from apps.core.admin import TimeStampedModelAdmin

from .models import CertificationRun


@admin.register(CertificationRun)
class CertificationRunAdmin(TimeStampedModelAdmin):
    """
    Certification run admin.
    """

    list_display = (
        "id",
        "verdict",
        "group_order",
        "field_tag",
        "characteristic",
        "dimension",
        "generator_count",
        "witness_kind",
        "created_at",
    )
    list_filter = ("verdict", "field_tag", "dimension", "created_at")
    search_fields = ("input_digest", "witness_kind")
    readonly_fields = (
        "input_digest",
        "request",
        "certificate",
        "created_at",
        "updated_at",
    )

    fieldsets = (
        (
            "Input",
            {"fields": ("field_tag", "characteristic", "dimension", "generator_count", "cap")},
        ),
        ("Verdict", {"fields": ("verdict", "group_order", "witness_kind")}),
        ("Documents", {"fields": ("input_digest", "request", "certificate")}),
        ("Timestamps", {"fields": ("created_at", "updated_at"), "classes": ("collapse",)}),
    )
