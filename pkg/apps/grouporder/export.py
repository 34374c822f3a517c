"""
Cayley graph export in graphviz dot format.

    dot -Tpng -O cayley.gv
"""

_PALETTE = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "gray"]


def cayley_to_dot(closure, name="cayley"):
    """
    One node per element (node 0 is the identity) and one edge per
    generator letter; inverse letters are drawn dashed in the colour of
    their generator.
    """
    lines = [f"digraph {name} {{", "\tnode [shape=circle];"]
    write_line = lines.append
    for i in range(len(closure.elements)):
        label = "e" if i == 0 else str(i)
        write_line(f'\t"{i}" [label="{label}"];')
    letters = closure.letters
    for src, letter, dst in closure.cayley_edges:
        colour = _PALETTE[(letter // 2) % len(_PALETTE)]
        style = "dashed" if letter % 2 else "solid"
        write_line(
            f'\t"{src}" -> "{dst}" [label="{letters[letter]}", color={colour}, style={style}];'
        )
    write_line("}")
    return "\n".join(lines) + "\n"
