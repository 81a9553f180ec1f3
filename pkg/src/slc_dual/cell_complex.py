"""Two-dimensional cell complexes built from vertices, oriented edges and triangles.

A triangle lists its vertices ``(a, b, c)`` and its edges in the slot order
``(ab, bc, ac)``.  Its boundary is ``ab + bc - ac`` with each slot's sign
corrected for the stored direction of the edge.  Loops and parallel edges
only arise from :func:`quotient`; once an edge is a loop its direction can no
longer be read off its endpoints, so triangles may carry explicit ``signs``.

All cells carry a ``labels`` frozenset of strings.  Quotients merge labels by
union.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import networkx as nx

# vertex positions joined by each triangle edge slot
SLOTS = ((0, 1), (1, 2), (0, 2))
# boundary coefficient of each slot for edges running along the slot direction
SLOT_SIGN = (1, 1, -1)


class DimensionError(ValueError):
    pass


class InconsistentQuotient(ValueError):
    pass


def _labels(value) -> frozenset:
    if value is None:
        return frozenset()
    if isinstance(value, str):
        return frozenset([value])
    return frozenset(value)


@dataclass(frozen=True)
class Vertex:
    id: str
    labels: frozenset = frozenset()


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]
    labels: frozenset = frozenset()

    @property
    def source(self):
        return self.ends[0]

    @property
    def target(self):
        return self.ends[1]

    @property
    def is_loop(self):
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class Triangle:
    id: str
    edges: tuple[str, str, str]
    vertices: tuple[str, str, str]
    labels: frozenset = frozenset()
    # +1 if the edge in a slot runs along the slot direction, -1 if against
    signs: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class CellComplex:
    vertices: tuple[Vertex, ...] = ()
    edges: tuple[Edge, ...] = ()
    triangles: tuple[Triangle, ...] = ()

    def __post_init__(self):
        for kind, cells in (("vertex", self.vertices), ("edge", self.edges), ("triangle", self.triangles)):
            ids = [x.id for x in cells]
            if len(set(ids)) != len(ids):
                raise ValueError(f"duplicate {kind} id")
        vs = self._vertex_index
        for e in self.edges:
            for v in e.ends:
                if v not in vs:
                    raise ValueError(f"edge {e.id!r} references unknown vertex {v!r}")
        es = self._edge_index
        for t in self.triangles:
            for v in t.vertices:
                if v not in vs:
                    raise ValueError(f"triangle {t.id!r} references unknown vertex {v!r}")
            for eid in t.edges:
                if eid not in es:
                    raise ValueError(f"triangle {t.id!r} references unknown edge {eid!r}")
            # raises when an edge does not join its slot's vertices
            self.slot_signs(t)

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _triangle_index(self) -> dict[str, int]:
        return {t.id: i for i, t in enumerate(self.triangles)}

    def vertex(self, vid: str) -> Vertex:
        return self.vertices[self._vertex_index[vid]]

    def edge(self, eid: str) -> Edge:
        return self.edges[self._edge_index[eid]]

    def triangle(self, tid: str) -> Triangle:
        return self.triangles[self._triangle_index[tid]]

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.triangles)

    @property
    def dimension(self) -> int:
        if self.triangles:
            return 2
        if self.edges:
            return 1
        return 0 if self.vertices else -1

    def slot_signs(self, t: Triangle) -> tuple[int, int, int]:
        """Direction of each slot's edge relative to the slot (stored or derived)."""
        out = []
        for j, (pa, pb) in enumerate(SLOTS):
            e = self.edge(t.edges[j])
            a, b = t.vertices[pa], t.vertices[pb]
            along, against = e.ends == (a, b), e.ends == (b, a)
            if t.signs is not None:
                s = t.signs[j]
                if not ((s == 1 and along) or (s == -1 and against)):
                    raise ValueError(f"triangle {t.id!r}: edge {e.id!r} does not run {a}->{b} with sign {s}")
            elif along:
                s = 1
            elif against:
                s = -1
            else:
                raise ValueError(f"triangle {t.id!r}: edge {e.id!r} does not join {a} and {b}")
            out.append(s)
        return tuple(out)

    def edge_end_at(self, t: Triangle, slot: int, position: int) -> int:
        """Which end (0 source, 1 target) of the slot's edge sits at triangle vertex ``position``."""
        pa, pb = SLOTS[slot]
        if position not in (pa, pb):
            raise ValueError(f"vertex position {position} is not on slot {slot}")
        along = self.slot_signs(t)[slot] == 1
        return 0 if (position == pa) == along else 1


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix dimensions do not match entries")

    @classmethod
    def from_lists(cls, rows, cols=None):
        rows = [list(map(int, r)) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols_b = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols_b) for row in self.entries
        )
        return IntegerMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )


def euler_characteristic(c: CellComplex) -> int:
    v, e, t = c.counts()
    return v - e + t


def boundary_matrix(c: CellComplex, k: int) -> IntegerMatrix:
    if k == 1:
        rows = [[0] * len(c.edges) for _ in c.vertices]
        for j, e in enumerate(c.edges):
            if e.is_loop:
                continue
            rows[c._vertex_index[e.source]][j] -= 1
            rows[c._vertex_index[e.target]][j] += 1
        return IntegerMatrix(len(c.vertices), len(c.edges), tuple(map(tuple, rows)))
    if k == 2:
        rows = [[0] * len(c.triangles) for _ in c.edges]
        for j, t in enumerate(c.triangles):
            for slot, s in enumerate(c.slot_signs(t)):
                rows[c._edge_index[t.edges[slot]]][j] += SLOT_SIGN[slot] * s
        return IntegerMatrix(len(c.edges), len(c.triangles), tuple(map(tuple, rows)))
    raise ValueError(f"no boundary map in degree {k}")


def disjoint_union(*complexes: CellComplex, prefixes: Iterable[str] | None = None) -> CellComplex:
    """Union with ids namespaced by ``prefixes`` (default ``"0:"``, ``"1:"``, ...)."""
    prefixes = list(prefixes) if prefixes is not None else [f"{i}:" for i in range(len(complexes))]
    if len(prefixes) != len(complexes) or len(set(prefixes)) != len(prefixes):
        raise ValueError("need one distinct prefix per complex")
    vs, es, ts = [], [], []
    for pre, c in zip(prefixes, complexes):
        vs += [Vertex(pre + v.id, v.labels) for v in c.vertices]
        es += [Edge(pre + e.id, (pre + e.source, pre + e.target), e.labels) for e in c.edges]
        ts += [
            Triangle(pre + t.id, tuple(pre + x for x in t.edges), tuple(pre + x for x in t.vertices),
                     t.labels, t.signs)
            for t in c.triangles
        ]
    return CellComplex(tuple(vs), tuple(es), tuple(ts))


def cone(base: CellComplex, apex_label=None, apex_id: str = "apex") -> CellComplex:
    """Cone over a complex of dimension at most 1.

    Adds the apex, an edge apex -> v for each base vertex and a triangle
    (apex, u, v) over each base edge u -> v.  Base cells keep their ids.
    """
    if base.triangles:
        raise DimensionError("cone is only defined over complexes without 2-cells")
    if apex_id in base._vertex_index:
        raise ValueError(f"apex id {apex_id!r} already used")
    spoke = {v.id: f"{apex_id}~{v.id}" for v in base.vertices}
    vs = base.vertices + (Vertex(apex_id, _labels(apex_label)),)
    es = base.edges + tuple(Edge(spoke[v.id], (apex_id, v.id)) for v in base.vertices)
    ts = tuple(
        Triangle(f"{apex_id}~{e.id}", (spoke[e.source], e.id, spoke[e.target]), (apex_id, e.source, e.target))
        for e in base.edges
    )
    return CellComplex(vs, es, ts)


def barycentric_subdivision(c: CellComplex) -> CellComplex:
    """Flag complex of the face poset, counting faces with multiplicity.

    One vertex per cell; one edge per incidence of a lower cell in a higher
    one (a loop meets its vertex twice); one triangle per flag
    vertex < edge < triangle.  New edges run from the lower to the higher
    cell, and triangles list their vertices (vertex, edge, triangle).
    """
    vs = [Vertex(f"v:{v.id}", v.labels) for v in c.vertices]
    vs += [Vertex(f"e:{e.id}", e.labels) for e in c.edges]
    vs += [Vertex(f"t:{t.id}", t.labels) for t in c.triangles]
    es, ts = [], []
    for e in c.edges:
        for end, v in enumerate(e.ends):
            es.append(Edge(f"ve:{e.id}:{end}", (f"v:{v}", f"e:{e.id}")))
    for t in c.triangles:
        for slot in range(3):
            es.append(Edge(f"et:{t.id}:{slot}", (f"e:{t.edges[slot]}", f"t:{t.id}")))
        for pos in range(3):
            es.append(Edge(f"vt:{t.id}:{pos}", (f"v:{t.vertices[pos]}", f"t:{t.id}")))
        for slot, (pa, pb) in enumerate(SLOTS):
            eid = t.edges[slot]
            for pos in (pa, pb):
                end = c.edge_end_at(t, slot, pos)
                ts.append(Triangle(
                    f"f:{t.id}:{slot}:{pos}",
                    (f"ve:{eid}:{end}", f"et:{t.id}:{slot}", f"vt:{t.id}:{pos}"),
                    (f"v:{t.vertices[pos]}", f"e:{eid}", f"t:{t.id}"),
                ))
    return CellComplex(tuple(vs), tuple(es), tuple(ts))


def _class_map(classes, existing: Iterable[str]) -> dict[str, str]:
    if classes is None:
        return {}
    if isinstance(classes, Mapping):
        named = {k: list(v) for k, v in classes.items()}
    else:
        named = {}
        for members in classes:
            members = sorted(members)
            if members:
                named[members[0]] = members
    out = {}
    for new, members in named.items():
        for m in members:
            if m in out:
                raise InconsistentQuotient(f"cell {m!r} appears in two classes")
            out[m] = new
    unclassed = set(existing) - set(out)
    clash = unclassed & set(named)
    if clash:
        raise InconsistentQuotient(f"class name {sorted(clash)[0]!r} collides with an unclassed cell id")
    return out


def quotient(c: CellComplex, vertex_classes=None, edge_classes=None) -> CellComplex:
    """Identify vertices and edges; triangles are never merged.

    Classes are either a mapping ``new_id -> members`` or an iterable of
    member collections (each class then takes its smallest member id).
    Cells not mentioned stay as singletons with their own id.  Merged edges
    must have endpoint classes that agree, possibly with reversed direction;
    the first member (in complex order) fixes the direction of the class.
    """
    vmap = _class_map(vertex_classes, (v.id for v in c.vertices))
    emap = _class_map(edge_classes, (e.id for e in c.edges))
    for m in list(vmap):
        if m not in c._vertex_index:
            raise InconsistentQuotient(f"unknown vertex {m!r} in vertex classes")
    for m in list(emap):
        if m not in c._edge_index:
            raise InconsistentQuotient(f"unknown edge {m!r} in edge classes")

    def nv(v):
        return vmap.get(v, v)

    def ne(e):
        return emap.get(e, e)

    vlabels, vorder = defaultdict(frozenset), []
    for v in c.vertices:
        key = nv(v.id)
        if key not in vlabels:
            vorder.append(key)
        vlabels[key] = vlabels[key] | v.labels

    reps: dict[str, tuple[str, str]] = {}
    elabels, eorder = defaultdict(frozenset), []
    relative: dict[str, int] = {}
    for e in c.edges:
        key = ne(e.id)
        ends = (nv(e.source), nv(e.target))
        if key not in reps:
            reps[key] = ends
            eorder.append(key)
        rep = reps[key]
        if ends == rep:
            relative[e.id] = 1
        elif ends[::-1] == rep:
            relative[e.id] = -1
        else:
            raise InconsistentQuotient(
                f"edge {e.id!r} with ends {ends} cannot join class {key!r} with ends {rep}")
        elabels[key] = elabels[key] | e.labels

    ts = []
    for t in c.triangles:
        signs = tuple(s * relative[eid] for s, eid in zip(c.slot_signs(t), t.edges))
        ts.append(Triangle(t.id, tuple(ne(x) for x in t.edges), tuple(nv(x) for x in t.vertices),
                           t.labels, signs))
    return CellComplex(
        tuple(Vertex(k, vlabels[k]) for k in vorder),
        tuple(Edge(k, reps[k], elabels[k]) for k in eorder),
        tuple(ts),
    )


def connected_components(c: CellComplex) -> list[CellComplex]:
    """Split along the 1-skeleton; components ordered by their first vertex."""
    parent = {v.id: v.id for v in c.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in c.edges:
        parent[find(e.source)] = find(e.target)
    groups: dict[str, list] = {}
    for v in c.vertices:
        groups.setdefault(find(v.id), []).append(v)
    out = []
    for root, verts in groups.items():
        ids = {v.id for v in verts}
        out.append(CellComplex(
            tuple(verts),
            tuple(e for e in c.edges if e.source in ids),
            tuple(t for t in c.triangles if t.vertices[0] in ids),
        ))
    return out


def incidence_graph(c: CellComplex, labels: bool = True) -> nx.MultiGraph:
    """Face-incidence multigraph: a node per cell, an arc per face slot."""
    g = nx.MultiGraph()
    for v in c.vertices:
        g.add_node(("v", v.id), dim=0, labels=v.labels if labels else None)
    for e in c.edges:
        g.add_node(("e", e.id), dim=1, labels=e.labels if labels else None)
        for v in e.ends:
            g.add_edge(("e", e.id), ("v", v))
    for t in c.triangles:
        g.add_node(("t", t.id), dim=2, labels=t.labels if labels else None)
        for x in t.edges:
            g.add_edge(("t", t.id), ("e", x))
        for x in t.vertices:
            g.add_edge(("t", t.id), ("v", x))
    return g


def isomorphic(a: CellComplex, b: CellComplex, match_labels: str = "all") -> bool:
    """Cellular isomorphism test, optionally preserving labels.

    ``match_labels`` is ``"all"`` (labels of every cell), ``"vertices"``
    (vertex labels only) or ``"none"``.
    """
    if a.counts() != b.counts():
        return False
    if match_labels not in ("all", "vertices", "none"):
        raise ValueError(f"unknown label mode {match_labels!r}")
    ga, gb = incidence_graph(a), incidence_graph(b)

    def node_match(x, y):
        if x["dim"] != y["dim"]:
            return False
        if match_labels == "all" or (match_labels == "vertices" and x["dim"] == 0):
            return x["labels"] == y["labels"]
        return True

    return nx.is_isomorphic(ga, gb, node_match=node_match)
