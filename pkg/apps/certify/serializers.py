from rest_framework import serializers

from apps.core.serializers import TimeStampedSerializer
from apps.grouporder.serializers import ClosureResultSerializer, OrderResultSerializer

from .models import CertificationRun


class WitnessSerializer(serializers.Serializer):
    kind = serializers.CharField(source="kind.value")
    word = serializers.ListField(source="word_labels", child=serializers.CharField())
    statement = serializers.CharField()
    valuation = serializers.CharField(allow_null=True)
    coefficient_index = serializers.IntegerField(allow_null=True)
    coefficient = serializers.CharField(allow_null=True)
    polynomial = serializers.CharField(allow_null=True)
    nu_det = serializers.ListField(child=serializers.IntegerField(), allow_null=True)


class ValuationCheckSerializer(serializers.Serializer):
    valuation = serializers.CharField()
    passed = serializers.BooleanField()
    coefficient_index = serializers.IntegerField(allow_null=True)
    coefficient = serializers.CharField(source="coefficient_text", allow_null=True)
    valuation_value = serializers.IntegerField(allow_null=True)


class IntegralityEntrySerializer(serializers.Serializer):
    generator = serializers.IntegerField(allow_null=True)
    char_poly = serializers.ListField(child=serializers.CharField())
    valuations = serializers.ListField(child=serializers.CharField())
    checks = ValuationCheckSerializer(many=True)
    passed = serializers.BooleanField()
    valuation = serializers.CharField(allow_null=True)
    coefficient_index = serializers.IntegerField(allow_null=True)
    coefficient = serializers.CharField(source="coefficient_text", allow_null=True)
    valuation_value = serializers.IntegerField(allow_null=True)


class IntegralityReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    entries = IntegralityEntrySerializer(many=True)


class NuDetReportSerializer(serializers.Serializer):
    values = serializers.DictField(child=serializers.ListField(child=serializers.IntegerField()))
    surjecting_valuation = serializers.CharField(allow_null=True)


class FormReportSerializer(serializers.Serializer):
    symmetric = serializers.BooleanField()
    positive_definite = serializers.BooleanField()
    invariant = serializers.ListField(child=serializers.BooleanField())
    holds = serializers.BooleanField()


class CertificateSerializer(serializers.Serializer):
    """
    Certificate serializer.
    """

    schema = serializers.IntegerField()
    field = serializers.SerializerMethodField()
    dim = serializers.IntegerField()
    generator_count = serializers.IntegerField()
    verdict = serializers.CharField(source="verdict.value")
    order = serializers.IntegerField(allow_null=True)
    reason = serializers.CharField()
    subject = serializers.SerializerMethodField()
    witness = WitnessSerializer(allow_null=True)
    integrality = IntegralityReportSerializer(allow_null=True)
    nu_det = NuDetReportSerializer(allow_null=True)
    orders = OrderResultSerializer(many=True)
    closure = ClosureResultSerializer(allow_null=True)
    form = FormReportSerializer(allow_null=True)
    carrier_bound = serializers.IntegerField(allow_null=True)

    def get_field(self, obj):
        return obj.field.descriptor()

    def get_subject(self, obj):
        return "the generated matrix group"


class CertificationRunSerializer(TimeStampedSerializer):
    """
    Certification run serializer.
    """

    class Meta:
        model = CertificationRun
        fields = (
            "id",
            "field_tag",
            "characteristic",
            "dimension",
            "generator_count",
            "cap",
            "verdict",
            "group_order",
            "witness_kind",
            "input_digest",
            "request",
            "certificate",
            "created_at",
            "updated_at",
        )
        read_only_fields = fields


class CertificationRunListSerializer(TimeStampedSerializer):
    class Meta:
        model = CertificationRun
        fields = (
            "id",
            "field_tag",
            "dimension",
            "generator_count",
            "verdict",
            "group_order",
            "input_digest",
            "created_at",
        )


class CertifyQuerySerializer(serializers.Serializer):
    cap = serializers.IntegerField(min_value=1, required=False)
    cayley = serializers.BooleanField(default=False)
    persist = serializers.BooleanField(default=True)
