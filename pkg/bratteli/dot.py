import graphviz

from bratteli.diagram import OrderedBratteliDiagram


def _node_id(level: int, name: str) -> str:
    return f"L{level}_{name}"


def to_digraph(d: OrderedBratteliDiagram) -> graphviz.Digraph:
    """One subgraph per level with rank=same; edge labels are the order indices."""
    g = graphviz.Digraph(d.name or "bratteli", node_attr={"shape": "circle"})
    g.graph_attr["rankdir"] = "TB"
    for k, level in enumerate(d.levels):
        with g.subgraph(name=f"level_{k}") as s:
            s.attr(rank="same")
            for v in level:
                s.node(_node_id(k, v), v)
    for e in d.edges:
        g.edge(_node_id(e.level - 1, e.target), _node_id(e.level, e.source), label=str(e.order), dir="back")
    return g


def emit_dot(d: OrderedBratteliDiagram) -> str:
    return to_digraph(d).source
