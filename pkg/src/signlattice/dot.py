"""Graphviz output for Hasse diagrams of S(n, r)."""

from __future__ import annotations

from .boolmaps import BooleanMap
from .lattice import Shape, lattice
from .regions import Region, region_mask

REGION_COLORS = {
    Region.S1_PLUS: "black",
    Region.S1_PM: "violet",
    Region.S1_MINUS: "red",
    Region.S2_PLUS: "blue",
    Region.S2_PM: "brown",
    Region.S2_MINUS: "green",
}
MAP_COLORS = {True: "green", False: "red"}


def node_id(w) -> str:
    return f"{w.pos}:{w.neg}"


def region_colors(shape: Shape) -> list[str]:
    out = [""] * shape.size
    for reg, color in REGION_COLORS.items():
        for i in region_mask(shape, reg).nonzero()[0]:
            out[i] = color
    return out


def map_colors(A: BooleanMap) -> list[str]:
    return [MAP_COLORS[bool(v)] for v in A.mask]


def to_dot(shape: Shape, colors: list[str] | None = None, name: str = "S") -> str:
    """Hasse diagram as a Graphviz digraph, bottom element drawn lowest.

    ``colors`` is indexed by canonical position; nodes are grouped by rank.
    """
    lat = lattice(shape)
    lines = [f'digraph "{name}({shape.n},{shape.r})" {{', "  rankdir=BT;",
             '  node [shape=circle, style=filled, fontsize=10];']
    ranks = lat.rank
    for rk in range(int(ranks.max()) + 1):
        members = (ranks == rk).nonzero()[0]
        lines.append(f"  {{ rank=same; // rank {rk}")
        for i in members:
            w = lat.element(i)
            attrs = [f'label="{w}"']
            if colors is not None:
                attrs.append(f'fillcolor="{colors[i]}"')
            lines.append(f'    "{node_id(w)}" [{", ".join(attrs)}];')
        lines.append("  }")
    lo, hi = lat.edges
    for a, b in zip(lo, hi):
        lines.append(f'  "{node_id(lat.element(a))}" -> "{node_id(lat.element(b))}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
