"""
Finite balls in the 1-skeleton of the building.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

from apps.core.exceptions import MalformedInput

from .lattices import neighbor_count, neighbors, vertex_type

logger = logging.getLogger(__name__)


@dataclass
class BuildingBall:
    """
    Vertices within graph distance ``radius`` of ``center``, in BFS order
    (vertex 0 is the center), with every edge among them as (i, j), i < j.
    """

    center: object
    radius: int
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    distances: list = field(default_factory=list)

    @property
    def p(self):
        return self.center.p

    @property
    def d(self):
        return self.center.d

    @property
    def types(self):
        return [vertex_type(v) for v in self.vertices]

    def index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    def __contains__(self, v):
        return v in self.index()

    def boundary(self):
        return [v for v, r in zip(self.vertices, self.distances) if r == self.radius]


def projected_ball_size(p, d, r):
    """
    Exact vertex count for trees (d = 2), the geometric bound otherwise.
    """
    n = neighbor_count(p, d)
    if d == 1 or r == 0:
        return 1
    if d == 2:
        return 1 + (p + 1) * (p**r - 1) // (p - 1)
    return sum(n**k for k in range(r + 1))


def ball(center, r):
    if r < 0:
        raise MalformedInput(f"r: radius must be non-negative, got {r}")
    vertices = [center]
    distances = [0]
    index = {center: 0}
    adjacency = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        adjacency[i] = []
        for w in neighbors(vertices[i]):
            j = index.get(w)
            if j is None:
                if distances[i] == r:
                    continue
                j = len(vertices)
                index[w] = j
                vertices.append(w)
                distances.append(distances[i] + 1)
                queue.append(j)
            adjacency[i].append(j)
    edges = sorted({(min(i, j), max(i, j)) for i, nbrs in adjacency.items() for j in nbrs})
    logger.debug(
        "ball of radius %d around %s: %d vertices, %d edges", r, center, len(vertices), len(edges)
    )
    return BuildingBall(center, r, vertices, edges, distances)
