import logging

from apps.core.conf import rigidity_setting
from apps.core.exceptions import FieldMismatch, MalformedInput
from apps.core.serializers import GeneratorSetSerializer, validate_input
from apps.exactnum.fields import QQ
from apps.exactnum.valuations import Valuation

from .actions import fixed_point_report
from .ball import ball, projected_ball_size
from .lattices import standard_vertex
from .serializers import BuildingBallSerializer, FixedPointReportSerializer

logger = logging.getLogger(__name__)


def ball_summary(b):
    types = {}
    for t in b.types:
        types[t] = types.get(t, 0) + 1
    return {
        "p": b.p,
        "d": b.d,
        "radius": b.radius,
        "vertex_count": len(b.vertices),
        "edge_count": len(b.edges),
        "boundary_count": len(b.boundary()),
        "types": {str(t): n for t, n in sorted(types.items())},
    }


def standard_ball(p, d, r):
    """
    Ball of radius r around the standard lattice class; warns when the
    projected vertex count is above BALL_VERTEX_WARNING.
    """
    Valuation.p_adic(p)
    if d < 1:
        raise MalformedInput(f"d: lattice rank must be at least 1, got {d}")
    if r < 0:
        raise MalformedInput(f"r: radius must be non-negative, got {r}")
    projected = projected_ball_size(p, d, r)
    if projected > rigidity_setting("BALL_VERTEX_WARNING"):
        logger.warning(
            "ball p=%d, d=%d, r=%d may hold up to %d vertices", p, d, r, projected
        )
    return ball(standard_vertex(p, d), r)


def ball_request(p, d, r, full=True):
    """
    Returns (ball, payload); the payload is the full vertex and edge listing
    when ``full``, a summary otherwise.
    """
    b = standard_ball(p, d, r)
    payload = BuildingBallSerializer(b).data if full else ball_summary(b)
    return b, payload


def fixed_point_request(data, p, r):
    """
    Fixed-vertex report for a rational generator-set document.
    """
    validated = validate_input(GeneratorSetSerializer, data)
    if validated["field"] != QQ:
        raise FieldMismatch(f"field: lattice actions need generators over Q, got {validated['field']}")
    b = standard_ball(p, validated["dim"], r)
    report = fixed_point_report(validated["matrices"], b)
    return report, FixedPointReportSerializer(report).data
