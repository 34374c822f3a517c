from rest_framework import serializers


class KroneckerSetSerializer(serializers.Serializer):
    """
    {"degree", "count", "polys": [{"coeffs", "text", "cyclotomic_indices"}]}.

    ``coeffs`` are a_0, ..., a_{d-1} followed by the leading 1.
    """

    degree = serializers.IntegerField()
    count = serializers.IntegerField()
    polys = serializers.SerializerMethodField()

    def get_polys(self, obj):
        return [
            {
                "coeffs": poly.dense(),
                "text": str(poly),
                "cyclotomic_indices": [[m, k] for m, k in factorization],
            }
            for poly, factorization in obj.items()
        ]


class KroneckerQuerySerializer(serializers.Serializer):
    method = serializers.ChoiceField(choices=["products", "bounds", "both"], default="products")
