"""Oriented ladder, circular ladder and Moebius ladder graphs.

Vertices and edges are labelled and ordered canonically so that incidence
matrices, their pseudoinverses and every closed form line up row for row.

Ladder and circular ladder vertices are ``u1+ .. un+, u1- .. un-``. Moebius
ladders use the 2n-cycle ``u1 .. u2n``; ``u_{n+i}`` is exported as ``vi``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .linalg import RationalMatrix

__all__ = [
    "Edge",
    "EdgeId",
    "Family",
    "FamilySpec",
    "OrientedGraph",
    "VertexId",
    "build_graph",
    "contract_edge",
    "incidence_matrix",
    "laplacian_matrix",
    "graph_to_json",
]


class Family(enum.Enum):
    LADDER = "ladder"
    CIRCULAR_LADDER = "cl"
    MOBIUS = "mobius"

    @property
    def min_n(self) -> int:
        return 1 if self is Family.LADDER else 3

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().lower().replace("_", "").replace("-", "")
        aliases = {
            "ladder": cls.LADDER, "l": cls.LADDER,
            "cl": cls.CIRCULAR_LADDER, "circular": cls.CIRCULAR_LADDER,
            "circularladder": cls.CIRCULAR_LADDER, "prism": cls.CIRCULAR_LADDER,
            "mobius": cls.MOBIUS, "m": cls.MOBIUS, "moebius": cls.MOBIUS,
            "mobiusladder": cls.MOBIUS,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown graph family {name!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.parse(self.family))
        if not isinstance(self.n, int) or self.n < self.family.min_n:
            raise ValueError(f"{self.family.value} needs n >= {self.family.min_n}, got n={self.n}")

    def to_dict(self) -> dict:
        return {"family": self.family.value, "n": self.n}


@dataclass(frozen=True, order=True)
class VertexId:
    index: int
    sign: int = 1
    # Moebius vertices are the 2n-cycle u_1..u_2n; n is kept for labelling u_{n+i} as v_i.
    cycle_half: int = field(default=0, compare=False)

    @property
    def label(self) -> str:
        if self.cycle_half:
            if self.index > self.cycle_half:
                return f"v{self.index - self.cycle_half}"
            return f"u{self.index}"
        return f"u{self.index}{'+' if self.sign > 0 else '-'}"

    def __str__(self) -> str:
        return self.label


class EdgeKind(enum.Enum):
    SPOKE = "f"
    RAIL = "e"


@dataclass(frozen=True)
class EdgeId:
    kind: EdgeKind
    index: int
    sign: int = 0  # rail side for ladders; 0 for spokes and Moebius rails

    @property
    def label(self) -> str:
        tail = "" if not self.sign else ("+" if self.sign > 0 else "-")
        return f"{self.kind.value}{self.index}{tail}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    tail: VertexId
    head: VertexId

    def __iter__(self):
        return iter((self.id, self.tail, self.head))


@dataclass(frozen=True)
class OrientedGraph:
    spec: FamilySpec | None
    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]

    @property
    def vertex_labels(self) -> list[str]:
        return [v.label for v in self.vertices]

    @property
    def edge_labels(self) -> list[str]:
        return [e.id.label for e in self.edges]

    def edge(self, edge_id) -> Edge:
        for e in self.edges:
            if e.id == edge_id or e.id.label == edge_id:
                return e
        raise KeyError(edge_id)

    def vertex(self, label: str) -> VertexId:
        for v in self.vertices:
            if v.label == label:
                return v
        raise KeyError(label)

    def adjacency(self) -> dict[str, set[str]]:
        adj = {v.label: set() for v in self.vertices}
        for e in self.edges:
            if e.tail != e.head:
                adj[e.tail.label].add(e.head.label)
                adj[e.head.label].add(e.tail.label)
        return adj


def build_graph(spec: FamilySpec) -> OrientedGraph:
    n = spec.n
    fam = spec.family
    if fam is Family.MOBIUS:
        u = [None] + [VertexId(i, 1, n) for i in range(1, 2 * n + 1)]

        def cyc(i: int) -> VertexId:
            return u[(i - 1) % (2 * n) + 1]

        rails = [Edge(EdgeId(EdgeKind.RAIL, i), cyc(i), cyc(i + 1)) for i in range(1, 2 * n + 1)]
        spokes = [Edge(EdgeId(EdgeKind.SPOKE, i), cyc(i), cyc(i + n)) for i in range(1, n + 1)]
        return OrientedGraph(spec, tuple(u[1:]), tuple(rails + spokes))

    vertices = [VertexId(i, 1) for i in range(1, n + 1)] + [VertexId(i, -1) for i in range(1, n + 1)]
    spokes = [Edge(EdgeId(EdgeKind.SPOKE, i), VertexId(i, 1), VertexId(i, -1)) for i in range(1, n + 1)]
    if fam is Family.LADDER:
        rails = {
            sign: [Edge(EdgeId(EdgeKind.RAIL, i, sign), VertexId(i, sign), VertexId(i + 1, sign))
                   for i in range(1, n)]
            for sign in (1, -1)
        }
        return OrientedGraph(spec, tuple(vertices), tuple(spokes + rails[1] + rails[-1]))
    rails = {
        sign: [Edge(EdgeId(EdgeKind.RAIL, i, sign), VertexId(i, sign), VertexId(i % n + 1, sign))
               for i in range(1, n + 1)]
        for sign in (1, -1)
    }
    return OrientedGraph(spec, tuple(vertices), tuple(rails[1] + rails[-1] + spokes))


def incidence_matrix(g: OrientedGraph) -> RationalMatrix:
    """Vertex-by-edge matrix: +1 where an edge starts, -1 where it ends."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    cols = [[0] * len(g.vertices) for _ in g.edges]
    for j, e in enumerate(g.edges):
        if e.tail == e.head:
            continue
        cols[j][pos[e.tail]] += 1
        cols[j][pos[e.head]] -= 1
    rows = [list(r) for r in zip(*cols)] if cols else [[] for _ in g.vertices]
    return RationalMatrix(rows, g.vertex_labels, g.edge_labels)


def laplacian_matrix(g: OrientedGraph) -> RationalMatrix:
    q = incidence_matrix(g)
    return q @ q.T


def contract_edge(g: OrientedGraph, edge_id) -> OrientedGraph:
    """Identify the endpoints of an edge and delete it.

    The merged vertex keeps the identity (and position) of whichever endpoint
    comes first in vertex order. Loops created by the contraction are dropped;
    parallel edges stay.
    """
    target = g.edge(edge_id)
    order = {v: i for i, v in enumerate(g.vertices)}
    keep, gone = sorted((target.tail, target.head), key=order.__getitem__)

    def rep(v: VertexId) -> VertexId:
        return keep if v == gone else v

    edges = []
    for e in g.edges:
        if e is target:
            continue
        tail, head = rep(e.tail), rep(e.head)
        if tail == head:
            continue
        edges.append(Edge(e.id, tail, head))
    vertices = tuple(v for v in g.vertices if v != gone)
    return OrientedGraph(None, vertices, tuple(edges))


def graph_to_json(g: OrientedGraph) -> dict:
    out = {}
    if g.spec is not None:
        out.update(g.spec.to_dict())
    out["vertices"] = g.vertex_labels
    out["edges"] = [{"id": e.id.label, "tail": e.tail.label, "head": e.head.label} for e in g.edges]
    return out
