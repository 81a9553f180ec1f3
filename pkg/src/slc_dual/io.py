"""Input documents, reports and complex exports.

Input (UTF-8 JSON)::

    {
      "components": ["D1", ...],
      "curves": [{"id": "c1", "component": "D1"}, ...],
      "points": [{"id": "p", "component": "D1", "curves": ["c1", "c2"]}, ...],
      "involution": {
        "curve_pairs": [["c1", "c2"], ["c3", "c3"], ...],
        "incidence_pairs": [[["p", "c1"], ["q", "c2"]], [["r", "c3"], ["r", "c3"]], ...]
      }
    }

Only ``components`` is required; the other fields default to empty.  All
pairs are unordered and get sorted on load.  A self-pair marks a curve or
an incidence fixed by the involution.
"""
from __future__ import annotations

import json
import math

from .cell_complex import CellComplex, Edge, Triangle, Vertex, connected_components, euler_characteristic
from .construction import DualComplexResult, build_dual_complex
from .slc_data import SlcGluingData, validate
from .topology import homology, surface_type, surface_type_dict

COMPLEX_FORMAT = "slc-dual-complex"


class ParseError(ValueError):
    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def _get(obj, key, path, default=None, required=False):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path)
    if key not in obj:
        if required:
            raise ParseError("missing required field", f"{path}.{key}" if path else key)
        return default
    return obj[key]


def _str(value, path):
    if not isinstance(value, str):
        raise ParseError(f"expected a string id, got {value!r}", path)
    return value


def _list(value, path, length=None):
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", path)
    if length is not None and len(value) != length:
        raise ParseError(f"expected {length} entries, got {len(value)}", path)
    return value


def data_from_document(doc) -> SlcGluingData:
    """Convert a decoded input document, checking shape and references."""
    components = [_str(x, f"components[{i}]") for i, x in enumerate(_list(_get(doc, "components", "", required=True), "components"))]
    comp_set = set(components)

    curves = []
    for i, c in enumerate(_list(_get(doc, "curves", "", []), "curves")):
        path = f"curves[{i}]"
        cid = _str(_get(c, "id", path, required=True), f"{path}.id")
        comp = _str(_get(c, "component", path, required=True), f"{path}.component")
        if comp not in comp_set:
            raise ParseError(f"unknown component {comp!r}", f"{path}.component")
        curves.append((cid, comp))
    curve_set = {c for c, _ in curves}

    points = []
    for i, p in enumerate(_list(_get(doc, "points", "", []), "points")):
        path = f"points[{i}]"
        pid = _str(_get(p, "id", path, required=True), f"{path}.id")
        comp = _str(_get(p, "component", path, required=True), f"{path}.component")
        if comp not in comp_set:
            raise ParseError(f"unknown component {comp!r}", f"{path}.component")
        cs = _list(_get(p, "curves", path, required=True), f"{path}.curves", 2)
        for j, c in enumerate(cs):
            if _str(c, f"{path}.curves[{j}]") not in curve_set:
                raise ParseError(f"unknown curve {c!r}", f"{path}.curves[{j}]")
        points.append((pid, comp, tuple(sorted(cs))))
    point_set = {p for p, _, _ in points}

    inv = _get(doc, "involution", "", {})
    curve_pairs = []
    for i, pair in enumerate(_list(_get(inv, "curve_pairs", "involution", []), "involution.curve_pairs")):
        path = f"involution.curve_pairs[{i}]"
        pair = _list(pair, path, 2)
        for j, c in enumerate(pair):
            if _str(c, f"{path}[{j}]") not in curve_set:
                raise ParseError(f"unknown curve {c!r}", f"{path}[{j}]")
        curve_pairs.append(tuple(sorted(pair)))

    incidence_pairs = []
    for i, pair in enumerate(_list(_get(inv, "incidence_pairs", "involution", []), "involution.incidence_pairs")):
        path = f"involution.incidence_pairs[{i}]"
        pair = _list(pair, path, 2)
        norm = []
        for j, inc in enumerate(pair):
            p, c = _list(inc, f"{path}[{j}]", 2)
            if _str(p, f"{path}[{j}][0]") not in point_set:
                raise ParseError(f"unknown point {p!r}", f"{path}[{j}][0]")
            if _str(c, f"{path}[{j}][1]") not in curve_set:
                raise ParseError(f"unknown curve {c!r}", f"{path}[{j}][1]")
            norm.append((p, c))
        incidence_pairs.append(tuple(sorted(norm)))

    return SlcGluingData.build(
        components, curves, points, sorted(curve_pairs), sorted(incidence_pairs)
    )


def parse_gluing_data(text: str) -> SlcGluingData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    return data_from_document(doc)


def to_document(data: SlcGluingData) -> dict:
    pairs = sorted({tuple(sorted(pair)) for pair in data.incidence_map})
    return {
        "components": list(data.components),
        "curves": [{"id": c.id, "component": c.component} for c in data.curves],
        "points": [{"id": p.id, "component": p.component, "curves": list(p.curves)} for p in data.points],
        "involution": {
            "curve_pairs": [list(pair) for pair in data.curve_matching],
            "incidence_pairs": [[list(a), list(b)] for a, b in pairs],
        },
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _violations(vs):
    return [{"rule": v.rule, "message": v.message, "ids": list(v.ids)} for v in vs]


def _surface_summary(c: CellComplex):
    comps = connected_components(c)
    if not comps:
        return None
    if len(comps) == 1:
        return surface_type_dict(surface_type(comps[0]))
    return {"tag": "Disconnected", "components": [surface_type_dict(surface_type(x)) for x in comps]}


def report_document(data: SlcGluingData, result: DualComplexResult | None = None) -> dict:
    """Everything the ``report`` command prints, as a JSON-ready dict."""
    report = validate(data)
    doc = {"validation": _violations(report.violations), "warnings": _violations(report.warnings)}
    if report.violations:
        return doc
    result = result or build_dual_complex(data)
    c = result.complex
    h = homology(c)
    v, e, t = c.counts()
    doc.update(
        cells={"vertices": v, "edges": e, "triangles": t},
        euler_characteristic=euler_characteristic(c),
        betti=list(h.betti),
        torsion=[list(x) for x in h.torsion],
        homology=h.describe(),
        one_centers=[
            {"id": oid, "case": case.value} for oid, case in result.cases.items()
        ],
        zero_centers=[
            {"id": zid, "link_type": str(kind)} for zid, kind in result.link_types.items()
        ],
        surface_type=_surface_summary(c),
    )
    return doc


def format_report(doc: dict) -> str:
    lines = []
    if doc["validation"]:
        lines.append("INVALID")
        lines += [f"  {v['rule']}: {v['message']}" for v in doc["validation"]]
        return "\n".join(lines) + "\n"
    cells = doc["cells"]
    lines.append(f"cells: V={cells['vertices']} E={cells['edges']} T={cells['triangles']}")
    lines.append(f"euler characteristic: {doc['euler_characteristic']}")
    lines.append(f"homology: {doc['homology']}  betti={tuple(doc['betti'])}")
    surf = doc["surface_type"]
    lines.append(f"surface type: {surf['tag'] if surf else 'empty'}" + (
        f" ({surf['witness']})" if surf and "witness" in surf else ""))
    lines.append("curve centers:")
    lines += [f"  {o['id']}: {o['case']}" for o in doc["one_centers"]]
    lines.append("point centers:")
    lines += [f"  {z['id']}: link {z['link_type']}" for z in doc["zero_centers"]]
    for w in doc["warnings"]:
        lines.append(f"warning {w['rule']}: {w['message']}")
    return "\n".join(lines) + "\n"


def export_complex(result: DualComplexResult | CellComplex) -> dict:
    """Full cell lists with ids, labels, orientations and vertex provenance."""
    if isinstance(result, DualComplexResult):
        c, prov = result.complex, result.provenance
    else:
        c, prov = result, {}
    vertices = []
    for v in c.vertices:
        entry = {"id": v.id, "labels": sorted(v.labels)}
        if v.id in prov:
            entry["provenance"] = {"kind": prov[v.id].kind, "ref": prov[v.id].ref}
        vertices.append(entry)
    return {
        "format": COMPLEX_FORMAT,
        "version": 1,
        "vertices": vertices,
        "edges": [
            {"id": e.id, "source": e.source, "target": e.target, "labels": sorted(e.labels)} for e in c.edges
        ],
        "triangles": [
            {
                "id": t.id,
                "vertices": list(t.vertices),
                "edges": list(t.edges),
                "signs": list(c.slot_signs(t)),
                "labels": sorted(t.labels),
            }
            for t in c.triangles
        ],
    }


def load_complex(doc: dict) -> CellComplex:
    if doc.get("format") != COMPLEX_FORMAT:
        raise ParseError(f"not a {COMPLEX_FORMAT} document", "format")
    try:
        return CellComplex(
            tuple(Vertex(v["id"], frozenset(v["labels"])) for v in doc["vertices"]),
            tuple(Edge(e["id"], (e["source"], e["target"]), frozenset(e["labels"])) for e in doc["edges"]),
            tuple(
                Triangle(t["id"], tuple(t["edges"]), tuple(t["vertices"]), frozenset(t["labels"]),
                         tuple(t["signs"]))
                for t in doc["triangles"]
            ),
        )
    except KeyError as exc:
        raise ParseError("missing required field", str(exc)) from None


def sphere_point(i: int, n: int) -> tuple[float, float, float]:
    # Fibonacci lattice; purely cosmetic placement
    y = 1 - 2 * (i + 0.5) / n
    r = math.sqrt(max(0.0, 1 - y * y))
    theta = i * math.pi * (3 - math.sqrt(5))
    return r * math.cos(theta), y, r * math.sin(theta)


def export_off(result: DualComplexResult | CellComplex) -> str:
    """OFF mesh of the triangles.

    Coordinates are placed on the unit sphere by vertex index and carry no
    geometric meaning.  A triangle with a repeated vertex cannot be written
    as a face and is omitted; the trailing comment records how many were.
    """
    c = result.complex if isinstance(result, DualComplexResult) else result
    index = {v.id: i for i, v in enumerate(c.vertices)}
    faces, omitted = [], 0
    for t in c.triangles:
        if len(set(t.vertices)) < 3:
            omitted += 1
            continue
        faces.append(tuple(index[v] for v in t.vertices))
    lines = ["OFF", f"{len(c.vertices)} {len(faces)} {len(c.edges)}"]
    n = len(c.vertices)
    for i in range(n):
        lines.append("{:.6f} {:.6f} {:.6f}".format(*sphere_point(i, n)))
    lines += [f"3 {a} {b} {d}" for a, b, d in faces]
    lines.append(f"# coordinates are cosmetic; omitted {omitted} face(s) with repeated vertices")
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple[list[tuple[float, float, float]], list[tuple[int, ...]]]:
    """Minimal OFF reader (vertex coordinates and faces), ignoring comments."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0] != ["OFF"]:
        raise ParseError("missing OFF header", line=1)
    nv, nf = int(rows[1][0]), int(rows[1][1])
    verts = [tuple(map(float, r)) for r in rows[2:2 + nv]]
    faces = [tuple(map(int, r[1:1 + int(r[0])])) for r in rows[2 + nv:2 + nv + nf]]
    return verts, faces

