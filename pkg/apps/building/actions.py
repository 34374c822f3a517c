"""
Matrix actions on lattice vertices and fixed-vertex search.
"""

import logging
from dataclasses import dataclass, field

from apps.core.exceptions import DimensionMismatch, SingularMatrix, TypeRotation
from apps.exactnum.valuations import Valuation, valuate
from apps.linalg.matrices import determinant

from .lattices import canonicalize

logger = logging.getLogger(__name__)


def nu_det(g, v):
    """
    nu(det g) for a valuation v, or for the p-adic valuation when v is a
    prime.
    """
    if isinstance(v, int):
        v = Valuation.p_adic(v)
    det = determinant(g)
    if not det:
        raise SingularMatrix("nu_det of a singular matrix is undefined")
    return valuate(v, det)


def act(g, vertex):
    """
    The vertex [g L] for L = vertex.
    """
    if g.dim != vertex.d:
        raise DimensionMismatch(f"a {g.dim}x{g.dim} matrix cannot act on rank {vertex.d} lattices")
    return canonicalize(g @ vertex.matrix(), vertex.p)


def _check_type_preserving(gens, p, d):
    values = [nu_det(g, p) for g in gens]
    if any(value % d for value in values):
        raise TypeRotation(values, d)
    return values


def fixed_vertices(gens, ball):
    """
    Vertices of ``ball`` fixed by every generator.

    Raises TypeRotation when some generator shifts vertex types.
    """
    _check_type_preserving(gens, ball.p, ball.d)
    return [v for v in ball.vertices if all(act(g, v) == v for g in gens)]


@dataclass
class FixedPointReport:
    p: int
    d: int
    radius: int
    nu_det: list
    fixed: list = field(default_factory=list)
    boundary_escape: bool = False
    type_rotation: bool = False
    statement: str = ""

    @property
    def found(self):
        return bool(self.fixed)


def fixed_point_report(gens, ball):
    """
    Fixed vertices in the ball, with per-generator nu_det values and a flag
    for generators that move some ball vertex outside the ball.
    """
    p, d, r = ball.p, ball.d, ball.radius
    values = [nu_det(g, p) for g in gens]
    report = FixedPointReport(p=p, d=d, radius=r, nu_det=values)
    try:
        report.fixed = fixed_vertices(gens, ball)
    except TypeRotation as exc:
        report.type_rotation = True
        report.statement = (
            f"{exc}; the generated matrix group maps onto a nontrivial subgroup of Z "
            f"and fixes no vertex"
        )
        return report
    index = ball.index()
    report.boundary_escape = any(act(g, v) not in index for g in gens for v in ball.vertices)
    if report.fixed:
        report.statement = (
            f"the generated matrix group fixes {len(report.fixed)} vertices within radius {r}"
        )
    else:
        report.statement = f"no fixed vertex within radius {r}: inconclusive at radius {r}"
    logger.info("fixed-point search at p=%d, d=%d, r=%d: %s", p, d, r, report.statement)
    return report
