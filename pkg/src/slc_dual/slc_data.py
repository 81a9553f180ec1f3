"""Normalization gluing data of a semi-log-canonical surface.

A non-normal surface is described by its normalization: a set of
components, the conductor curves on them, the points where two conductor
curves meet, and the involution that says which curves (and which points on
them) get glued together.  Everything here is purely combinatorial.

An *incidence* is a pair ``(point, curve)`` with the point lying on the
curve.  The involution acts on incidences; an incidence fixed by it is
written as a self-pair.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

Incidence = tuple[str, str]


class InvalidGluingData(ValueError):
    """Raised when an operation requiring valid data is handed invalid data."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        first = report.violations[0]
        super().__init__(f"{len(report.violations)} violation(s), first: {first.rule}: {first.message}")


class UnknownCenter(KeyError):
    pass


@dataclass(frozen=True)
class Curve:
    id: str
    component: str


@dataclass(frozen=True)
class Point:
    id: str
    component: str
    curves: tuple[str, str]


@dataclass(frozen=True)
class SlcGluingData:
    components: tuple[str, ...] = ()
    curves: tuple[Curve, ...] = ()
    points: tuple[Point, ...] = ()
    # matched pairs (a, b) with a <= b; a self-matched curve is (c, c)
    curve_matching: tuple[tuple[str, str], ...] = ()
    # ordered pairs, both directions present for a genuine involution
    incidence_map: frozenset[tuple[Incidence, Incidence]] = frozenset()

    @classmethod
    def build(
        cls,
        components: Iterable[str],
        curves: Iterable[tuple[str, str]],
        points: Iterable[tuple[str, str, Iterable[str]]],
        curve_pairs: Iterable[Iterable[str]],
        incidence_pairs: Iterable[tuple[Incidence, Incidence]],
    ) -> "SlcGluingData":
        """Assemble data from plain tuples, treating every pair as unordered.

        ``incidence_pairs`` lists each glued pair of incidences once; the
        symmetric closure is added here.
        """
        pairs = set()
        for a, b in incidence_pairs:
            a, b = tuple(a), tuple(b)
            pairs.add((a, b))
            pairs.add((b, a))
        return cls(
            components=tuple(components),
            curves=tuple(Curve(c, d) for c, d in curves),
            points=tuple(Point(p, d, tuple(sorted(cs))) for p, d, cs in points),
            curve_matching=tuple(tuple(sorted(pair)) for pair in curve_pairs),
            incidence_map=frozenset(pairs),
        )

    def curve(self, curve_id: str) -> Curve:
        return self._curves[curve_id]

    def point(self, point_id: str) -> Point:
        return self._points[point_id]

    @cached_property
    def _curves(self) -> dict[str, Curve]:
        return {c.id: c for c in self.curves}

    @cached_property
    def _points(self) -> dict[str, Point]:
        return {p.id: p for p in self.points}

    def incidences(self) -> list[Incidence]:
        """All (point, curve) incidences, sorted."""
        return sorted((p.id, c) for p in self.points for c in p.curves)

    def partner(self) -> dict[str, str]:
        """curve id -> matched curve id (itself when self-matched)."""
        out = {}
        for a, b in self.curve_matching:
            out[a] = b
            out[b] = a
        return out

    def iota(self) -> dict[Incidence, Incidence]:
        """The incidence involution as a dict. Only meaningful on valid data."""
        return {a: b for a, b in self.incidence_map}

    def curves_on(self, component: str) -> list[str]:
        return sorted(c.id for c in self.curves if c.component == component)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    ids: tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    # advisory only; never affects validity
    warnings: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def rules(self) -> list[str]:
        return [v.rule for v in self.violations]


# Rule ids; the report is ordered by these, then by offending ids.
DUPLICATE_ID = "R00-duplicate-id"
UNKNOWN_COMPONENT = "R01-unknown-component"
UNKNOWN_CURVE = "R02-unknown-curve"
DISTINCT_CURVES = "R03-distinct-curves"
CURVE_OWNER = "R04-curve-owner"
MATCHING_COVER = "R05-matching-cover"
UNKNOWN_INCIDENCE = "R06-unknown-incidence"
INVOLUTION = "R07-involution"
MATCHING_RESPECT = "R08-matching-respect"
INCIDENCE_BIJECTION = "R09-incidence-bijection"
PARALLEL_LINK_EDGE = "W01-endpoint-rule"


def _dups(ids: Iterable[str]) -> list[str]:
    seen, dup = set(), set()
    for i in ids:
        (dup if i in seen else seen).add(i)
    return sorted(dup)


def validate(data: SlcGluingData) -> ValidationReport:
    """Check every structural invariant of the gluing data.

    Violations are returned, never raised.  When the data is valid the
    report may still carry warnings about configurations where the literal
    endpoint-based edge identification would differ from involution-orbit
    matching.
    """
    out: list[Violation] = []

    def bad(rule, message, *ids):
        out.append(Violation(rule, message, tuple(str(i) for i in ids)))

    for kind, ids in (
        ("component", data.components),
        ("curve", [c.id for c in data.curves]),
        ("point", [p.id for p in data.points]),
    ):
        for d in _dups(ids):
            bad(DUPLICATE_ID, f"duplicate {kind} id {d!r}", d)

    components = set(data.components)
    curves = data._curves

    for c in data.curves:
        if c.component not in components:
            bad(UNKNOWN_COMPONENT, f"curve {c.id!r} owned by unknown component {c.component!r}",
                c.id, c.component)
    for p in data.points:
        if p.component not in components:
            bad(UNKNOWN_COMPONENT, f"point {p.id!r} owned by unknown component {p.component!r}",
                p.id, p.component)
        if len(p.curves) != 2 or p.curves[0] == p.curves[1]:
            bad(DISTINCT_CURVES, f"point {p.id!r} must lie on two distinct curves, got {list(p.curves)}",
                p.id)
        for c in p.curves:
            if c not in curves:
                bad(UNKNOWN_CURVE, f"point {p.id!r} references unknown curve {c!r}", p.id, c)
            elif curves[c].component != p.component:
                bad(CURVE_OWNER,
                    f"point {p.id!r} on component {p.component!r} lies on curve {c!r} "
                    f"of component {curves[c].component!r}", p.id, c)

    cover = defaultdict(int)
    for a, b in data.curve_matching:
        for c in (a, b):
            if c not in curves:
                bad(UNKNOWN_CURVE, f"curve matching references unknown curve {c!r}", c)
        cover[a] += 1
        if b != a:
            cover[b] += 1
    for c in sorted(curves):
        if cover[c] != 1:
            bad(MATCHING_COVER, f"curve {c!r} appears {cover[c]} times in the curve matching", c)

    incidences = set(data.incidences())
    images = defaultdict(set)
    for a, b in data.incidence_map:
        for inc in (a, b):
            if inc not in incidences:
                bad(UNKNOWN_INCIDENCE, f"incidence {inc} is not a point lying on a curve", *inc)
        images[a].add(b)
    for a in sorted(images):
        if len(images[a]) > 1:
            bad(INVOLUTION, f"incidence {a} has {len(images[a])} images", *a)
            continue
        (b,) = images[a]
        if images.get(b) != {a}:
            bad(INVOLUTION, f"incidence {a} -> {b} does not map back", *a)

    if any(v.rule in (MATCHING_COVER, UNKNOWN_CURVE) for v in out):
        partner = {}
    else:
        partner = data.partner()
    if partner:
        for a, b in sorted(data.incidence_map):
            if a[1] in partner and partner[a[1]] != b[1]:
                bad(MATCHING_RESPECT,
                    f"incidence {a} -> {b} joins curves that are not matched", *a)
        for c in sorted(curves):
            on_c = sorted(i for i in incidences if i[1] == c)
            targets = [next(iter(images[i])) for i in on_c if len(images.get(i, ())) == 1]
            expected = sorted(i for i in incidences if i[1] == partner[c])
            if len(targets) != len(on_c) or sorted(targets) != expected:
                bad(INCIDENCE_BIJECTION,
                    f"incidences on curve {c!r} are not mapped bijectively onto curve {partner[c]!r}", c)

    out.sort(key=lambda v: (v.rule, v.ids))
    warnings: tuple[Violation, ...] = ()
    if not out:
        warnings = tuple(_endpoint_rule_warnings(data))
    return ValidationReport(tuple(out), warnings)


def require_valid(data: SlcGluingData) -> None:
    report = validate(data)
    if report.violations:
        raise InvalidGluingData(report)


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller id as root so classes are canonically named
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self):
        groups = defaultdict(list)
        for x in self.parent:
            groups[self.find(x)].append(x)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class ZeroCenter:
    id: str
    points: tuple[str, ...]


class CurveCase(enum.Enum):
    TwoComponents = "TwoComponents"
    LoopSameComponent = "LoopSameComponent"
    FoldedDoubleCover = "FoldedDoubleCover"


@dataclass(frozen=True)
class OneCenter:
    id: str
    curves: tuple[str, ...]
    case: CurveCase

    def __post_init__(self):
        expected = 1 if self.case is CurveCase.FoldedDoubleCover else 2
        if len(self.curves) != expected:
            raise ValueError(f"{self.case.value} center needs {expected} curve(s), got {self.curves}")


@dataclass(frozen=True)
class IncidenceOrbit:
    id: str
    members: tuple[Incidence, ...] = field(default=())

    @property
    def fixed(self) -> bool:
        return len(self.members) == 1


def point_orbits(data: SlcGluingData) -> list[ZeroCenter]:
    """Partition the points into orbits of the involution (the 0-dimensional centers)."""
    uf = _UnionFind(sorted(p.id for p in data.points))
    for (p, _), (q, _) in data.incidence_map:
        uf.union(p, q)
    return [ZeroCenter(g[0], tuple(g)) for g in uf.classes()]


def curve_orbits(data: SlcGluingData) -> list[OneCenter]:
    """One center per matching class, tagged by how its preimages sit in the components."""
    out = []
    for a, b in sorted(data.curve_matching):
        if a == b:
            case = CurveCase.FoldedDoubleCover
        elif data.curve(a).component == data.curve(b).component:
            case = CurveCase.LoopSameComponent
        else:
            case = CurveCase.TwoComponents
        out.append(OneCenter(a, (a,) if a == b else (a, b), case))
    return out


def incidence_id(inc: Incidence) -> str:
    return f"{inc[0]}/{inc[1]}"


def incidence_orbits(data: SlcGluingData) -> list[IncidenceOrbit]:
    iota = data.iota()
    seen = set()
    out = []
    for inc in data.incidences():
        if inc in seen:
            continue
        members = tuple(sorted({inc, iota[inc]}))
        seen.update(members)
        out.append(IncidenceOrbit(min(incidence_id(m) for m in members), members))
    return out


def classify_one_center(data: SlcGluingData, center: OneCenter) -> CurveCase:
    for known in curve_orbits(data):
        if known.curves == center.curves:
            return known.case
    raise UnknownCenter(center.id)


def _endpoint_rule_warnings(data: SlcGluingData):
    # two distinct incidence orbits over the same (point orbit, curve orbit)
    # give parallel link edges that the endpoint rule would merge
    zc_of = {q: z.id for z in point_orbits(data) for q in z.points}
    oc_of = {c: o.id for o in curve_orbits(data) for c in o.curves}
    seen = defaultdict(list)
    for orb in incidence_orbits(data):
        p, c = orb.members[0]
        seen[(zc_of[p], oc_of[c])].append(orb.id)
    for (z, g), orbs in sorted(seen.items()):
        if len(orbs) > 1:
            yield Violation(
                PARALLEL_LINK_EDGE,
                f"incidence orbits {orbs} all join center {z!r} to curve center {g!r}; "
                "the endpoint rule would identify their edges",
                tuple(orbs),
            )
