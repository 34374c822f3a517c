import json

from rest_framework import serializers

from apps.core.exceptions import MalformedInput, ScalarParseError
from apps.exactnum.fields import QQ, field_from_descriptor
from apps.linalg.matrices import SquareMatrix


class TimeStampedSerializer(serializers.ModelSerializer):
    """
    Serializer mixin that includes created_at and updated_at fields.
    """

    created_at = serializers.DateTimeField(read_only=True)
    updated_at = serializers.DateTimeField(read_only=True)

    class Meta:
        fields = ["created_at", "updated_at"]


class FieldDescriptorField(serializers.Field):
    """
    "Q", ["Fp", p], ["Fp(t)", p] or {"name": ..., "p": ...}.

    A descriptor with a non-prime p passes through as NotPrime.
    """

    default_error_messages = {"invalid": "{message}"}

    def to_internal_value(self, data):
        try:
            return field_from_descriptor(data)
        except MalformedInput as exc:
            self.fail("invalid", message=str(exc))

    def to_representation(self, value):
        return value.descriptor()


class ScalarTextField(serializers.CharField):
    """
    Scalar text; integers are accepted, floats are not.
    """

    default_error_messages = {"float": "floating point values are not exact; use a string"}

    def to_internal_value(self, data):
        if isinstance(data, float):
            self.fail("float")
        return super().to_internal_value(data)


def _rows_field(**kwargs):
    return serializers.ListField(
        child=serializers.ListField(child=ScalarTextField(), allow_empty=False),
        allow_empty=False,
        **kwargs,
    )


def parse_matrix(field, dim, rows, label):
    """
    SquareMatrix from rows of scalar text, with errors naming ``label``.
    """
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise serializers.ValidationError(
            {label: f"expected {dim} rows of {dim} entries, got {[len(row) for row in rows]}"}
        )
    parsed = []
    for i, row in enumerate(rows):
        values = []
        for j, text in enumerate(row):
            try:
                values.append(field.parse(text))
            except ScalarParseError as exc:
                raise serializers.ValidationError({f"{label}[{i}][{j}]": str(exc)}) from exc
        parsed.append(values)
    return SquareMatrix.from_rows(field, parsed)


class MatrixInputSerializer(serializers.Serializer):
    """
    {"field": descriptor, "dim": d, "rows": [[scalar, ...], ...]}.
    """

    field = FieldDescriptorField()
    dim = serializers.IntegerField(min_value=1)
    rows = _rows_field()

    def validate(self, attrs):
        attrs["matrix"] = parse_matrix(attrs["field"], attrs["dim"], attrs["rows"], "rows")
        return attrs


class GeneratorSetSerializer(serializers.Serializer):
    """
    {"field": descriptor, "dim": d, "generators": [rows, ...]} with an
    optional rational "form" given as rows.
    """

    field = FieldDescriptorField()
    dim = serializers.IntegerField(min_value=1)
    generators = serializers.ListField(child=_rows_field(), allow_empty=False)
    form = _rows_field(required=False)

    def validate(self, attrs):
        field, dim = attrs["field"], attrs["dim"]
        attrs["matrices"] = [
            parse_matrix(field, dim, rows, f"generators[{i}]")
            for i, rows in enumerate(attrs["generators"])
        ]
        if "form" in attrs:
            attrs["form_matrix"] = parse_matrix(QQ, dim, attrs["form"], "form")
        return attrs


def first_error(errors, prefix=""):
    """
    One-line "<field>: <message>" for the first entry of DRF errors.
    """
    if isinstance(errors, dict):
        key, value = next(iter(errors.items()))
        if key == "non_field_errors":
            key = ""
        path = f"{prefix}.{key}" if prefix and key else (prefix or key)
        return first_error(value, path)
    if isinstance(errors, list):
        for index, value in enumerate(errors):
            if value:
                if isinstance(value, (dict, list)):
                    return first_error(value, f"{prefix}[{index}]")
                return f"{prefix}: {value}" if prefix else str(value)
    return f"{prefix}: {errors}" if prefix else str(errors)


def validate_input(serializer_class, data):
    """
    validated_data, or MalformedInput carrying a one-line diagnostic.
    """
    if not isinstance(data, dict):
        raise MalformedInput("input: expected a JSON object")
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        raise MalformedInput(first_error(serializer.errors))
    return serializer.validated_data


def render_json(data):
    """
    Stable JSON text: sorted keys, two-space indent.
    """
    return json.dumps(data, sort_keys=True, indent=2)
