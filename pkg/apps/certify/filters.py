import django_filters

from .models import CertificationRun


class CertificationRunFilter(django_filters.FilterSet):
    """
    Filters for stored certification runs.
    """

    min_dimension = django_filters.NumberFilter(field_name="dimension", lookup_expr="gte")
    max_dimension = django_filters.NumberFilter(field_name="dimension", lookup_expr="lte")
    digest = django_filters.CharFilter(field_name="input_digest")

    class Meta:
        model = CertificationRun
        fields = ["verdict", "field_tag", "characteristic", "dimension", "witness_kind"]
