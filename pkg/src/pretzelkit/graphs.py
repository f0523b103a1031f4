"""Black and white checkerboard graphs of the standard pretzel projection.

Black regions are the bigons inside each twist region plus the regions above
and below the row of tangles, so tangle ``i`` contributes a path ``T(n_i)`` of
``|n_i|`` black edges from the top vertex down to the root (the region at the
decorated bottom arc).  White regions are the ``r`` gaps between consecutive
tangles; white vertex 0 is the outer region, which is the white root.  Tangle
``i`` contributes ``|n_i|`` parallel white edges between white vertices ``i``
and ``i+1 (mod r)``.

Edges are keyed by their crossing ``(i, k)``: tangle ``i``, crossing ``k``
counted from the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .core import DOWN, OrientedDiagram, as_code, orient

Crossing = Tuple[int, int]
TOP = "top"
ROOT = "root"


@dataclass(frozen=True)
class CheckerboardGraphs:
    diagram: OrientedDiagram
    eta_black: Tuple[int, ...]
    eta_white: Tuple[int, ...]

    @property
    def code(self):
        return self.diagram.code

    @property
    def r(self) -> int:
        return self.diagram.code.r

    def length(self, i: int) -> int:
        return abs(self.diagram.code[i])

    # vertices ---------------------------------------------------------------
    def black_vertex(self, i: int, k: int):
        """Vertex of ``T(n_i)`` sitting above crossing ``k`` (``k = |n_i|`` is the root)."""
        if k == 0:
            return TOP
        if k == self.length(i):
            return ROOT
        return (i, k)

    def black_vertices(self) -> List:
        vs: List = [ROOT, TOP]
        for i in range(self.r):
            vs.extend((i, k) for k in range(1, self.length(i)))
        return vs

    def white_vertices(self) -> List[int]:
        return list(range(self.r))

    black_root = ROOT
    white_root = 0
    top_vertex = TOP

    # edges ------------------------------------------------------------------
    def crossings(self) -> List[Crossing]:
        return [(i, k) for i in range(self.r) for k in range(self.length(i))]

    def black_edge(self, c: Crossing):
        """``(upper, lower)`` endpoints of the black edge at crossing ``c``."""
        i, k = c
        return self.black_vertex(i, k), self.black_vertex(i, k + 1)

    def white_edge(self, c: Crossing):
        """``(left, right)`` endpoints of the white edge at crossing ``c``."""
        i, _ = c
        return i, (i + 1) % self.r

    def black_edges(self) -> List[Tuple[Crossing, object, object]]:
        return [(c, *self.black_edge(c)) for c in self.crossings()]

    def white_edges(self) -> List[Tuple[Crossing, int, int]]:
        return [(c, *self.white_edge(c)) for c in self.crossings()]

    # labels -----------------------------------------------------------------
    def eta(self, c: Crossing, color: str) -> int:
        return self.eta_black[c[0]] if color == "B" else self.eta_white[c[0]]

    def knot_orientation(self, c: Crossing, color: str) -> int:
        """Direction the knot induces on an edge, or 0 if the edge is unoriented.

        Black edges: ``DOWN``/``UP`` (parallel tangles only).  White edges: ``+1``
        for left-to-right, ``-1`` for right-to-left (antiparallel tangles only).
        The edge points from the quadrant between the incoming strands to the
        quadrant between the outgoing ones.
        """
        i, k = c
        role = self.diagram.roles[i]
        if color == "B":
            return self.diagram.strand_dirs[i][0] if role.parallel else 0
        if role.parallel:
            return 0
        return 1 if self.diagram.down_side(i, k) == "L" else -1

    def to_dot(self) -> str:
        lines = ["graph checkerboard {"]
        lines.append("  subgraph black {")
        for c, u, v in self.black_edges():
            lines.append(f'    "B:{u}" -- "B:{v}" [label="{c[0]}.{c[1]} eta={self.eta(c, "B")}"];')
        lines.append("  }")
        lines.append("  subgraph white {")
        for c, u, v in self.white_edges():
            lines.append(f'    "W:{u}" -- "W:{v}" [label="{c[0]}.{c[1]} eta={self.eta(c, "W")}"];')
        lines.append("  }")
        lines.append("}")
        return "\n".join(lines)


def build_graphs(diagram) -> CheckerboardGraphs:
    """Graphs with eta labels.

    Parallel tangle of sign s: black eta = -s, white eta = 0.
    Antiparallel tangle of sign s: black eta = 0, white eta = s.
    """
    if not isinstance(diagram, OrientedDiagram):
        diagram = orient(as_code(diagram))
    eb, ew = [], []
    for role in diagram.roles:
        if role.parallel:
            eb.append(-role.sign)
            ew.append(0)
        else:
            eb.append(0)
            ew.append(role.sign)
    return CheckerboardGraphs(diagram, tuple(eb), tuple(ew))


def spanning_tree_count(graphs_or_code) -> int:
    """Number of black spanning trees: each omits one edge from every path but the trunk."""
    if isinstance(graphs_or_code, CheckerboardGraphs):
        lengths = [graphs_or_code.length(i) for i in range(graphs_or_code.r)]
    else:
        lengths = [abs(n) for n in as_code(graphs_or_code)]
    total = 0
    for i in range(len(lengths)):
        prod = 1
        for j, n in enumerate(lengths):
            if j != i:
                prod *= n
        total += prod
    return total


def black_adjacency(graphs: CheckerboardGraphs) -> Dict:
    adj: Dict = {v: [] for v in graphs.black_vertices()}
    for c, u, v in graphs.black_edges():
        adj[u].append((c, v))
        adj[v].append((c, u))
    return adj
