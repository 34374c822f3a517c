"""
Breadth-first closure of a finitely generated matrix group.
"""

import enum
import logging
from collections import deque
from dataclasses import dataclass, field

from apps.core.exceptions import MalformedInput
from apps.linalg.matrices import SquareMatrix, mat_inverse

from .orders import brute_force_order

logger = logging.getLogger(__name__)


class ClosureStatus(str, enum.Enum):
    FINITE = "finite"
    CAP_EXCEEDED = "cap_exceeded"


@dataclass
class ClosureResult:
    """
    Outcome of a closure run.

    Letters are numbered g0, g0^-1, g1, g1^-1, ...; an edge (i, l, j) means
    elements[i] @ letter[l] == elements[j]. Element 0 is the identity.
    """

    status: ClosureStatus
    cap: int
    elements: list = field(default_factory=list)
    generator_orders: list = field(default_factory=list)
    cayley_edges: list = field(default_factory=list)

    @property
    def is_finite(self):
        return self.status is ClosureStatus.FINITE

    @property
    def order(self):
        return len(self.elements) if self.is_finite else None

    @property
    def letters(self):
        names = []
        for i in range(len(self.generator_orders)):
            names.extend([f"g{i}", f"g{i}^-1"])
        return names


def _letters(gens):
    letters = []
    for g in gens:
        letters.extend([g, mat_inverse(g)])
    return letters


def group_closure(gens, cap, with_edges=True):
    """
    Enumerate the group generated by ``gens`` until it closes or more than
    ``cap`` distinct elements have been found.
    """
    if not gens:
        raise MalformedInput("generators: at least one generator is required")
    first = gens[0]
    for g in gens[1:]:
        first._check(g)
    letters = _letters(gens)
    identity = SquareMatrix.identity(first.field, first.dim)
    elements = [identity]
    index = {identity.key(): 0}
    edges = []
    queue = deque([0])
    exceeded = False
    while queue and not exceeded:
        i = queue.popleft()
        current = elements[i]
        for l, letter in enumerate(letters):
            image = current @ letter
            key = image.key()
            j = index.get(key)
            if j is None:
                if len(elements) >= cap:
                    exceeded = True
                    break
                j = len(elements)
                index[key] = j
                elements.append(image)
                queue.append(j)
            if with_edges:
                edges.append((i, l, j))
        if i and i % 1000 == 0:
            logger.debug("closure: %d elements, frontier %d", len(elements), len(queue))
    if exceeded:
        logger.warning(
            "closure exceeded the cap of %d elements; inconclusive by closure, "
            "see integrality certificate", cap,
        )
        orders = [brute_force_order(g, cap) for g in gens]
        return ClosureResult(ClosureStatus.CAP_EXCEEDED, cap, elements, orders, edges)
    orders = [brute_force_order(g, len(elements)) for g in gens]
    logger.debug("closure finished with %d elements", len(elements))
    return ClosureResult(ClosureStatus.FINITE, cap, elements, orders, edges)
