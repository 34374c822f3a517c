from rest_framework import serializers


class LatticeVertexSerializer(serializers.Serializer):
    diag = serializers.ListField(child=serializers.IntegerField())
    type = serializers.IntegerField()
    basis = serializers.SerializerMethodField()

    def get_basis(self, obj):
        return obj.format_basis()


class BuildingBallSerializer(serializers.Serializer):
    """
    {"p", "d", "radius", "vertices": [{"id", "diag", "type", "basis"}], "edges"}.
    """

    p = serializers.IntegerField()
    d = serializers.IntegerField()
    radius = serializers.IntegerField()
    vertices = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()

    def get_vertices(self, obj):
        return [
            {"id": i, "distance": r, **LatticeVertexSerializer(v).data}
            for i, (v, r) in enumerate(zip(obj.vertices, obj.distances))
        ]

    def get_edges(self, obj):
        return [[i, j] for i, j in obj.edges]


class FixedPointReportSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    d = serializers.IntegerField()
    radius = serializers.IntegerField()
    nu_det = serializers.ListField(child=serializers.IntegerField())
    fixed = LatticeVertexSerializer(many=True)
    boundary_escape = serializers.BooleanField()
    type_rotation = serializers.BooleanField()
    statement = serializers.CharField()


class BallQuerySerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=2)
    d = serializers.IntegerField(min_value=1)
    r = serializers.IntegerField(min_value=0)
    full = serializers.BooleanField(default=True)


class FixedPointQuerySerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=2)
    r = serializers.IntegerField(min_value=0)
