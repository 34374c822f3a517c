import logging

from apps.core.conf import resolve_cap, warn_dimension
from apps.core.serializers import MatrixInputSerializer, validate_input

from .orders import brute_force_order, compute_order
from .serializers import CAP_EXCEEDED, OrderResultSerializer

logger = logging.getLogger(__name__)


def order_request(data, check=False, cap=None):
    """
    Order of the matrix in a single-matrix document.

    With ``check`` the brute-force power search runs as well and the payload
    carries a "check" entry; returns (result, payload, agrees) where agrees
    is None without ``check``.
    """
    matrix = validate_input(MatrixInputSerializer, data)["matrix"]
    warn_dimension(matrix.dim, logger)
    result = compute_order(matrix)
    payload = dict(OrderResultSerializer(result).data)
    agrees = None
    if check:
        cap = resolve_cap(cap, "BRUTE_FORCE_CAP")
        found = brute_force_order(matrix, cap)
        if found is None:
            # cap exceeded: agreement means the fast path also saw an order above cap
            agrees = not result.is_finite or result.order > cap
        else:
            agrees = result.is_finite and result.order == found
        payload["check"] = {
            "cap": cap,
            "brute_force_order": CAP_EXCEEDED if found is None else found,
            "agrees": agrees,
        }
    return result, payload, agrees
