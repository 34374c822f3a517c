from django.contrib import admin


class TimeStampedModelAdmin(admin.ModelAdmin):
    """
    Base admin class for models that inherit from TimeStampedModel.
    """

    list_filter = ("created_at",)
    readonly_fields = ("created_at", "updated_at")
    date_hierarchy = "created_at"
