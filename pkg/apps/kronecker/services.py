from apps.core.exceptions import NotUnitCircle
from apps.linalg.polynomials import MonicIntPoly

from .cyclotomic import cyclotomic_factorization
from .enumeration import compare_methods, enumerate_kronecker
from .serializers import KroneckerSetSerializer


def kronecker_request(degree, method="products"):
    """
    Serialized Kronecker set; for "both" the payload also reports whether
    the two enumerations agree. Returns (payload, agree).
    """
    if method != "both":
        result = enumerate_kronecker(degree, method)
        return {**KroneckerSetSerializer(result).data, "method": method}, True
    by_products, by_bounds, agree = compare_methods(degree)
    payload = {
        **KroneckerSetSerializer(by_products).data,
        "method": method,
        "agree": agree,
        "bounds_count": by_bounds.count,
    }
    return payload, agree


def membership_request(text):
    """
    Whether the polynomial given as text has every root on the unit circle,
    with its cyclotomic factorization when it does.
    """
    poly = MonicIntPoly.parse(text)
    try:
        factorization = cyclotomic_factorization(poly)
    except NotUnitCircle as exc:
        return {
            "poly": str(poly),
            "degree": poly.degree,
            "coeffs": poly.dense(),
            "kronecker": False,
            "residual": str(exc.residual),
            "cyclotomic_indices": [[m, k] for m, k in exc.factorization],
        }
    return {
        "poly": str(poly),
        "degree": poly.degree,
        "coeffs": poly.dense(),
        "kronecker": True,
        "residual": None,
        "cyclotomic_indices": [[m, k] for m, k in factorization],
    }
