"""Half-edge graphs: anchored segments with optional pairwise gluing of free ends.

Each half edge starts (parameter 0) at its anchor vertex.  Its far end
(parameter 1) is either glued to the far end of exactly one other half edge
or left free.  A loop at a vertex is therefore two half edges anchored at
the same vertex and glued to each other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from .cell_complex import CellComplex, Edge, Vertex


class GraphType(enum.Enum):
    Circle = "Circle"
    Interval = "Interval"
    Point = "Point"
    Other = "Other"


@dataclass(frozen=True)
class TopologicalType:
    kind: GraphType
    reason: str = ""

    def __str__(self):
        return self.kind.value if not self.reason else f"{self.kind.value}({self.reason})"


@dataclass(frozen=True)
class HalfEdge:
    id: str
    anchor: str


@dataclass(frozen=True)
class HalfEdgeGraph:
    vertices: tuple[str, ...] = ()
    half_edges: tuple[HalfEdge, ...] = ()
    end_gluing: tuple[tuple[str, str], ...] = ()
    # id -> payload for vertices, half edges, and glued/free ends
    labels: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        ids = {h.id for h in self.half_edges}
        vs = set(self.vertices)
        if len(ids) != len(self.half_edges):
            raise ValueError("duplicate half-edge id")
        for h in self.half_edges:
            if h.anchor not in vs:
                raise ValueError(f"half edge {h.id!r} anchored at unknown vertex {h.anchor!r}")
        used = set()
        for a, b in self.end_gluing:
            if a == b:
                raise ValueError(f"half edge {a!r} glued to itself")
            for h in (a, b):
                if h not in ids:
                    raise ValueError(f"gluing references unknown half edge {h!r}")
                if h in used:
                    raise ValueError(f"half edge {h!r} glued twice")
                used.add(h)

    def anchor(self, half_edge: str) -> str:
        return self._anchors[half_edge]

    @property
    def _anchors(self):
        return {h.id: h.anchor for h in self.half_edges}

    def degree(self, vertex: str) -> int:
        return sum(1 for h in self.half_edges if h.anchor == vertex)

    def glued_to(self) -> dict[str, str]:
        out = {}
        for a, b in self.end_gluing:
            out[a], out[b] = b, a
        return out

    def free_half_edges(self) -> list[str]:
        glued = self.glued_to()
        return [h.id for h in self.half_edges if h.id not in glued]

    def loops(self) -> list[tuple[str, str]]:
        """Glued pairs whose two half edges share an anchor."""
        anchors = self._anchors
        return [(a, b) for a, b in self.end_gluing if anchors[a] == anchors[b]]


def is_connected(g: HalfEdgeGraph) -> bool:
    """The empty graph counts as connected."""
    if not g.vertices:
        return True
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    anchors = g._anchors
    for a, b in g.end_gluing:
        parent[find(anchors[a])] = find(anchors[b])
    return len({find(v) for v in g.vertices}) == 1


def topological_type(g: HalfEdgeGraph) -> TopologicalType:
    if not g.vertices:
        return TopologicalType(GraphType.Other, "empty graph")
    if not g.half_edges:
        if len(g.vertices) == 1:
            return TopologicalType(GraphType.Point)
        return TopologicalType(GraphType.Other, f"{len(g.vertices)} isolated vertices")
    if not is_connected(g):
        return TopologicalType(GraphType.Other, "disconnected")
    degrees = {v: g.degree(v) for v in g.vertices}
    high = sorted(v for v, d in degrees.items() if d > 2)
    if high:
        return TopologicalType(GraphType.Other, f"vertex {high[0]!r} anchors {degrees[high[0]]} half edges")
    free = len(g.free_half_edges())
    deficient = sum(1 for d in degrees.values() if d < 2)
    if free == 0 and deficient == 0:
        return TopologicalType(GraphType.Circle)
    if free + deficient == 2:
        return TopologicalType(GraphType.Interval)
    return TopologicalType(GraphType.Other, f"{free} free ends and {deficient} end vertices")


def end_vertex_id(g: HalfEdgeGraph, half_edge: str, glued_to: dict[str, str] | None = None) -> str:
    """Id of the realized vertex at parameter 1 of ``half_edge``."""
    if glued_to is None:
        glued_to = g.glued_to()
    partner = glued_to.get(half_edge)
    if partner is None:
        return f"end:{half_edge}"
    a, b = sorted((half_edge, partner))
    return f"glue:{a}+{b}"


def realize_as_complex(g: HalfEdgeGraph, end_id: Callable[[str], str] | None = None) -> CellComplex:
    """Subdivide into a 1-dimensional cell complex.

    Vertices: the graph vertices, then one per glued pair, then one per free
    end.  Each half edge becomes an edge oriented anchor -> end.  ``end_id``
    names the far-end vertex of a half edge (it must agree on glued pairs);
    the default is :func:`end_vertex_id`.  Labels are looked up in
    ``g.labels`` by the cell id.
    """
    def lab(key):
        value = g.labels.get(key)
        if value is None:
            return frozenset()
        return frozenset([value]) if isinstance(value, str) else frozenset(value)

    if end_id is None:
        glued_to = g.glued_to()

        def end_id(h):
            return end_vertex_id(g, h, glued_to)

    glued = g.glued_to()
    verts = [Vertex(v, lab(v)) for v in g.vertices]
    for a, b in g.end_gluing:
        vid = end_id(a)
        if end_id(b) != vid:
            raise ValueError(f"glued half edges {a!r}, {b!r} given different end vertices")
        verts.append(Vertex(vid, lab(vid)))
    for h in g.half_edges:
        if h.id not in glued:
            vid = end_id(h.id)
            verts.append(Vertex(vid, lab(vid)))
    edges = [Edge(h.id, (h.anchor, end_id(h.id)), lab(h.id)) for h in g.half_edges]
    return CellComplex(tuple(verts), tuple(edges), ())
