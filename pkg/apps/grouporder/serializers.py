from rest_framework import serializers

INFINITE = "infinite"
CAP_EXCEEDED = "cap_exceeded"


class OrderResultSerializer(serializers.Serializer):
    """
    Order result serializer; an infinite order is written "infinite".
    """

    order = serializers.SerializerMethodField()
    method = serializers.CharField(source="method.value")
    eigenvalue_orders = serializers.ListField(child=serializers.IntegerField())
    eigenvalues = serializers.SerializerMethodField()
    unipotent_exponent = serializers.IntegerField(allow_null=True)
    extension_degree = serializers.IntegerField(allow_null=True)
    cyclotomic_indices = serializers.SerializerMethodField()
    obstruction = serializers.CharField(allow_null=True)

    def get_order(self, obj):
        return obj.order if obj.is_finite else INFINITE

    def get_eigenvalues(self, obj):
        return [{"value": value, "multiplicity": mult} for value, mult in obj.eigenvalues]

    def get_cyclotomic_indices(self, obj):
        return [[m, k] for m, k in obj.cyclotomic_indices]


class ClosureResultSerializer(serializers.Serializer):
    """
    Closure report; the Cayley edge list is included only when the
    serializer context asks for it with ``cayley=True``.
    """

    status = serializers.CharField(source="status.value")
    order = serializers.IntegerField(allow_null=True)
    cap = serializers.IntegerField()
    generator_orders = serializers.SerializerMethodField()
    cayley = serializers.SerializerMethodField()

    def get_generator_orders(self, obj):
        return [CAP_EXCEEDED if order is None else order for order in obj.generator_orders]

    def get_cayley(self, obj):
        return [list(edge) for edge in obj.cayley_edges]

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if not self.context.get("cayley"):
            data.pop("cayley")
        return data
