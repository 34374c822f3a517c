"""
Ball export: graphviz dot and plain JSON data.
"""

from .serializers import BuildingBallSerializer

_TYPE_COLOURS = ["lightblue", "salmon", "palegreen", "gold", "plum", "lightgray", "orange", "cyan"]


def ball_to_dot(ball, name="building"):
    """
    Undirected graph; each vertex is labelled and filled by its type.
    """
    lines = [f"graph {name} {{", "\tnode [style=filled, shape=circle];"]
    write_line = lines.append
    for i, t in enumerate(ball.types):
        colour = _TYPE_COLOURS[t % len(_TYPE_COLOURS)]
        shape = ", shape=doublecircle" if i == 0 else ""
        write_line(f'\t"{i}" [label="{t}", fillcolor={colour}{shape}];')
    for i, j in ball.edges:
        write_line(f'\t"{i}" -- "{j}";')
    write_line("}")
    return "\n".join(lines) + "\n"


def ball_to_json(ball):
    return BuildingBallSerializer(ball).data
