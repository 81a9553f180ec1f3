"""Dual complex of an slc surface from its normalization gluing data.

Three independent routes produce the same complex:

* :func:`build_dual_complex` starts from the half-edge graph of curves on
  components and glues, for every 0-dimensional center, the cone over its
  link graph along the attaching map;
* :func:`enumerate_cells` writes the cells down in closed form from the
  orbits of the involution;
* :func:`build_by_quotient` cones the subdivided dual graph of every
  component and identifies strata with the same image.

Cell ids are canonical: vertices ``D:<component>``, ``G:<curve center>``,
``Z:<point center>``; edges ``DG:<curve>``, ``ZD:<point>``,
``ZG:<incidence orbit>``; triangles ``T:<point>/<curve>``.  Every cell
carries its id as its single label, so label-preserving isomorphism is a
strong comparison between routes.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .cell_complex import CellComplex, Edge, Triangle, Vertex, cone, quotient
from .halfedge_graph import HalfEdge, HalfEdgeGraph, TopologicalType, realize_as_complex, topological_type
from .slc_data import (
    CurveCase,
    SlcGluingData,
    ZeroCenter,
    curve_orbits,
    incidence_id,
    incidence_orbits,
    point_orbits,
    require_valid,
)


class MissingTarget(KeyError):
    pass


class NotSnc(ValueError):
    pass


def _v(vid):
    return Vertex(vid, frozenset([vid]))


def _e(eid, src, dst):
    return Edge(eid, (src, dst), frozenset([eid]))


def _t(tid, edges, vertices):
    return Triangle(tid, edges, vertices, frozenset([tid]))


class _Lookup:
    """Orbit tables shared by the construction routes."""

    def __init__(self, data: SlcGluingData):
        self.data = data
        self.one_centers = curve_orbits(data)
        self.zero_centers = point_orbits(data)
        self.incidence_orbits = incidence_orbits(data)
        self.oc_of = {c: o.id for o in self.one_centers for c in o.curves}
        self.zc_of = {p: z.id for z in self.zero_centers for p in z.points}
        self.orbit_of = {m: o.id for o in self.incidence_orbits for m in o.members}


@dataclass(frozen=True)
class AttachmentMap:
    # link half edge (incidence id) -> curve half edge of the curve graph
    half_edges: Mapping[str, str]
    # link vertex (point id) -> component vertex
    vertices: Mapping[str, str]

    def __getitem__(self, half_edge):
        return self.half_edges[half_edge]


@dataclass(frozen=True)
class Provenance:
    kind: str  # "Component" | "OneCenter" | "ZeroCenter"
    ref: str


@dataclass(frozen=True)
class DualComplexResult:
    complex: CellComplex
    provenance: Mapping[str, Provenance]
    link_types: Mapping[str, TopologicalType]
    cases: Mapping[str, CurveCase]
    c1_graph: HalfEdgeGraph
    c1_complex: CellComplex
    link_graphs: Mapping[str, HalfEdgeGraph] = field(default_factory=dict)


def build_c1(data: SlcGluingData) -> tuple[HalfEdgeGraph, CellComplex]:
    """Half-edge graph of the 1-dimensional strata and its realization.

    One vertex per component and one half edge per curve anchored at its
    owner.  Curves matched to a different curve are glued at their far ends;
    self-matched curves stay free.  The far-end vertex of every curve is
    named after its curve center.
    """
    lk = _Lookup(data)
    glued = tuple(
        (f"DG:{o.curves[0]}", f"DG:{o.curves[1]}")
        for o in lk.one_centers if o.case is not CurveCase.FoldedDoubleCover
    )
    labels = {f"D:{d}": f"D:{d}" for d in data.components}
    labels.update({f"DG:{c.id}": f"DG:{c.id}" for c in data.curves})
    labels.update({f"G:{o.id}": f"G:{o.id}" for o in lk.one_centers})
    g = HalfEdgeGraph(
        vertices=tuple(f"D:{d}" for d in data.components),
        half_edges=tuple(HalfEdge(f"DG:{c.id}", f"D:{c.component}") for c in data.curves),
        end_gluing=glued,
        labels=labels,
    )
    realized = realize_as_complex(g, end_id=lambda h: f"G:{lk.oc_of[h[3:]]}")
    # components first, then curve centers in canonical order
    order = {f"D:{d}": i for i, d in enumerate(data.components)}
    order.update({f"G:{o.id}": len(order) + i for i, o in enumerate(lk.one_centers)})
    verts = tuple(sorted(realized.vertices, key=lambda v: order[v.id]))
    return g, CellComplex(verts, realized.edges, ())


def build_gz(data: SlcGluingData, z: ZeroCenter) -> tuple[HalfEdgeGraph, AttachmentMap]:
    """Link graph of a point center together with its attaching map.

    One vertex per member point and one half edge per incidence of a member
    point; two half edges are glued when the involution swaps them.  A fixed
    incidence is left free.
    """
    iota = data.iota()
    members = set(z.points)
    half_edges, glued, sigma = [], [], {}
    for p in z.points:
        for c in data.point(p).curves:
            h = incidence_id((p, c))
            half_edges.append(HalfEdge(h, p))
            sigma[h] = f"DG:{c}"
            q = iota[(p, c)]
            if q != (p, c) and q[0] in members and (p, c) < q:
                glued.append((h, incidence_id(q)))
    g = HalfEdgeGraph(tuple(z.points), tuple(half_edges), tuple(glued))
    vertices = {p: f"D:{data.point(p).component}" for p in z.points}
    return g, AttachmentMap(sigma, vertices)


def attach_zero_center(
    current: CellComplex, gz: HalfEdgeGraph, sigma: AttachmentMap, z: ZeroCenter
) -> CellComplex:
    """Glue the cone over a link graph into ``current`` along ``sigma``.

    The cone apex becomes the vertex of ``z``.  Link vertices land on
    component vertices, each link half edge lands on the curve half edge it
    maps to, and its far end lands on the curve center at the end of that
    half edge.  New cells: the apex, one apex -> component edge per member
    point, one apex -> curve-center edge per glued pair or free end of the
    link, and one triangle (apex, component, curve center) per half edge.
    """
    zid = f"Z:{z.id}"
    glued_to = gz.glued_to()

    def end_name(h):
        return f"end:{min(h, glued_to.get(h, h))}"

    disk = cone(realize_as_complex(gz, end_id=end_name), apex_id=zid)

    vmap = {zid: zid}
    emap = {}
    for h in gz.half_edges:
        target = sigma.half_edges.get(h.id)
        if target is None or target not in current._edge_index:
            raise MissingTarget(f"attaching map sends {h.id!r} to missing half edge {target!r}")
        edge = current.edge(target)
        emap[h.id] = target
        for src, dst in ((gz.anchor(h.id), edge.source), (end_name(h.id), edge.target)):
            if vmap.setdefault(src, dst) != dst:
                raise ValueError(f"attaching map is inconsistent at {src!r}")
    for p in gz.vertices:
        if vmap.get(p, sigma.vertices[p]) != sigma.vertices[p]:
            raise ValueError(f"link vertex {p!r} does not land on its component")
        vmap[p] = sigma.vertices[p]
    for v in gz.vertices:
        emap[f"{zid}~{v}"] = f"ZD:{v}"
    for v in disk.vertices:
        if v.id.startswith("end:"):
            emap[f"{zid}~{v.id}"] = f"ZG:{v.id[4:]}"

    vs = list(current.vertices) + [_v(zid)]
    es = list(current.edges)
    for e in disk.edges:
        if e.id.startswith(f"{zid}~"):
            es.append(_e(emap[e.id], vmap[e.source], vmap[e.target]))
    ts = list(current.triangles)
    for t in disk.triangles:
        half_edge = t.edges[1]
        ts.append(_t(f"T:{half_edge}", tuple(emap[x] for x in t.edges), tuple(vmap[x] for x in t.vertices)))
    return CellComplex(tuple(vs), tuple(es), tuple(ts))


def build_dual_complex(data: SlcGluingData) -> DualComplexResult:
    require_valid(data)
    lk = _Lookup(data)
    c1_graph, c1 = build_c1(data)
    current = c1
    link_types, link_graphs = {}, {}
    for z in lk.zero_centers:
        gz, sigma = build_gz(data, z)
        link_graphs[z.id] = gz
        link_types[z.id] = topological_type(gz)
        current = attach_zero_center(current, gz, sigma, z)
    provenance = {f"D:{d}": Provenance("Component", d) for d in data.components}
    provenance.update({f"G:{o.id}": Provenance("OneCenter", o.id) for o in lk.one_centers})
    provenance.update({f"Z:{z.id}": Provenance("ZeroCenter", z.id) for z in lk.zero_centers})
    return DualComplexResult(
        complex=current,
        provenance=provenance,
        link_types=link_types,
        cases={o.id: o.case for o in lk.one_centers},
        c1_graph=c1_graph,
        c1_complex=c1,
        link_graphs=link_graphs,
    )


def enumerate_cells(data: SlcGluingData) -> CellComplex:
    """All cells in closed form, straight from the orbit tables."""
    require_valid(data)
    lk = _Lookup(data)
    vs = [_v(f"D:{d}") for d in data.components]
    vs += [_v(f"G:{o.id}") for o in lk.one_centers]
    vs += [_v(f"Z:{z.id}") for z in lk.zero_centers]
    es = [_e(f"DG:{c.id}", f"D:{c.component}", f"G:{lk.oc_of[c.id]}") for c in data.curves]
    for z in lk.zero_centers:
        es += [_e(f"ZD:{p}", f"Z:{z.id}", f"D:{data.point(p).component}") for p in z.points]
        es += [
            _e(f"ZG:{o.id}", f"Z:{z.id}", f"G:{lk.oc_of[o.members[0][1]]}")
            for o in lk.incidence_orbits if lk.zc_of[o.members[0][0]] == z.id
        ]
    ts = []
    for z in lk.zero_centers:
        for p in z.points:
            for c in data.point(p).curves:
                ts.append(_t(
                    f"T:{incidence_id((p, c))}",
                    (f"ZD:{p}", f"DG:{c}", f"ZG:{lk.orbit_of[(p, c)]}"),
                    (f"Z:{z.id}", f"D:{data.point(p).component}", f"G:{lk.oc_of[c]}"),
                ))
    return CellComplex(tuple(vs), tuple(es), tuple(ts))


def literal_edge_classes(data: SlcGluingData) -> dict[str, list[str]]:
    """Point-curve edges grouped by their endpoint classes alone."""
    lk = _Lookup(data)
    groups = defaultdict(list)
    for p, c in data.incidences():
        groups[(lk.zc_of[p], lk.oc_of[c])].append(incidence_id((p, c)))
    return {f"ZG:{min(m)}": [f"QC:{x}" for x in m] for m in groups.values()}


def build_by_quotient(data: SlcGluingData, edge_rule: str = "orbits") -> CellComplex:
    """Cone each component over its subdivided dual graph, then identify strata.

    Vertices are identified when their strata have the same image (curve
    matching, point orbits).  Point-curve edges are identified by involution
    orbits of incidences (``edge_rule="orbits"``) or, literally, whenever
    their endpoints are identified (``edge_rule="endpoints"``).
    """
    require_valid(data)
    lk = _Lookup(data)
    vs, es, ts = [], [], []
    for d in data.components:
        base_v = [Vertex(f"C:{c}", frozenset([f"G:{lk.oc_of[c]}"])) for c in data.curves_on(d)]
        pts = sorted(p.id for p in data.points if p.component == d)
        base_v += [Vertex(f"Q:{p}", frozenset([f"Z:{lk.zc_of[p]}"])) for p in pts]
        base_e = [
            Edge(f"QC:{incidence_id((p, c))}", (f"Q:{p}", f"C:{c}"), frozenset([f"ZG:{lk.orbit_of[(p, c)]}"]))
            for p in pts for c in data.point(p).curves
        ]
        part = cone(CellComplex(tuple(base_v), tuple(base_e)), apex_label=f"D:{d}", apex_id=f"D:{d}")
        for v in part.vertices:
            vs.append(v)
        for e in part.edges:
            if e.id.startswith("QC:"):
                es.append(e)
            elif e.target.startswith("C:"):
                es.append(Edge(e.id, e.ends, frozenset([f"DG:{e.target[2:]}"])))
            else:
                es.append(Edge(e.id, e.ends, frozenset([f"ZD:{e.target[2:]}"])))
        for t in part.triangles:
            ts.append(Triangle(t.id, t.edges, t.vertices, frozenset([f"T:{t.edges[1][3:]}"])))
    pieces = CellComplex(tuple(vs), tuple(es), tuple(ts))
    vclasses = {f"G:{o.id}": [f"C:{c}" for c in o.curves] for o in lk.one_centers}
    vclasses.update({f"Z:{z.id}": [f"Q:{p}" for p in z.points] for z in lk.zero_centers})
    if edge_rule == "orbits":
        eclasses = {
            f"ZG:{o.id}": [f"QC:{incidence_id(m)}" for m in o.members] for o in lk.incidence_orbits
        }
    elif edge_rule == "endpoints":
        eclasses = literal_edge_classes(data)
    else:
        raise ValueError(f"unknown edge rule {edge_rule!r}")
    return quotient(pieces, vclasses, eclasses)


def _owner(data, curve):
    return data.curve(curve).component


def snc_dual_complex(data: SlcGluingData) -> CellComplex:
    """Classical dual complex, defined when the gluing has normal crossings.

    Requires every curve center to join two distinct components and every
    point center to consist of three points on three distinct components
    spanning three distinct curve centers.  Components become vertices,
    curve centers edges and point centers triangles, each labelled like the
    corresponding vertex of :func:`build_dual_complex`.
    """
    require_valid(data)
    lk = _Lookup(data)
    for o in lk.one_centers:
        if o.case is not CurveCase.TwoComponents:
            raise NotSnc(f"curve center {o.id!r} is {o.case.value}")
    vs = [Vertex(f"D:{d}", frozenset([f"D:{d}"])) for d in data.components]
    es = []
    for o in lk.one_centers:
        a, b = o.curves
        es.append(Edge(f"G:{o.id}", (f"D:{_owner(data, a)}", f"D:{_owner(data, b)}"), frozenset([f"G:{o.id}"])))
    ts = []
    for z in lk.zero_centers:
        comps = sorted(data.point(p).component for p in z.points)
        if len(comps) != 3 or len(set(comps)) != 3:
            raise NotSnc(f"point center {z.id!r} meets components {comps}")
        side = {}
        for o in lk.incidence_orbits:
            (p, c), *rest = o.members
            if lk.zc_of[p] != z.id:
                continue
            if not rest:
                raise NotSnc(f"incidence orbit {o.id!r} is fixed by the involution")
            (q, _), = rest
            pair = frozenset([data.point(p).component, data.point(q).component])
            if len(pair) != 2 or pair in side:
                raise NotSnc(f"point center {z.id!r} does not span three distinct double curves")
            side[pair] = f"G:{lk.oc_of[c]}"
        a, b, c = comps
        try:
            edges = (side[frozenset([a, b])], side[frozenset([b, c])], side[frozenset([a, c])])
        except KeyError:
            raise NotSnc(f"point center {z.id!r} does not span three distinct double curves") from None
        if len(set(edges)) != 3:
            raise NotSnc(f"point center {z.id!r} does not span three distinct double curves")
        ts.append(Triangle(f"Z:{z.id}", edges, (f"D:{a}", f"D:{b}", f"D:{c}"), frozenset([f"Z:{z.id}"])))
    return CellComplex(tuple(vs), tuple(es), tuple(ts))
