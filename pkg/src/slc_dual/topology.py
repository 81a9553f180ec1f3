"""Integer homology, vertex links and surface recognition for 2-complexes."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .cell_complex import (
    SLOT_SIGN,
    SLOTS,
    CellComplex,
    IntegerMatrix,
    boundary_matrix,
    connected_components,
    euler_characteristic,
)


class UnknownVertex(KeyError):
    pass


class NotConnected(ValueError):
    pass


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]
    rank: int
    # left and right unimodular certificates: left @ m @ right == diag
    left: IntegerMatrix
    right: IntegerMatrix

    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Smith normal form by gcd pivoting over exact Python integers.

    Returns the diagonal ``d1 | d2 | ...`` (length ``min(rows, cols)``, all
    non-negative) together with unimodular ``left`` and ``right`` such that
    ``left @ m @ right`` is the diagonal matrix.
    """
    rows, cols = m.rows, m.cols
    a = m.tolist()
    u = IntegerMatrix.identity(rows).tolist()
    v = IntegerMatrix.identity(cols).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        if a[t][t] == 0:
            break
    diag = tuple(a[i][i] for i in range(min(rows, cols)))
    return SmithForm(
        diag,
        sum(1 for d in diag if d),
        IntegerMatrix.from_lists(u, rows),
        IntegerMatrix.from_lists(v, cols),
    )


def diagonal_matrix(shape: tuple[int, int], diagonal) -> IntegerMatrix:
    rows, cols = shape
    return IntegerMatrix.from_lists(
        [[diagonal[i] if i == j else 0 for j in range(cols)] for i in range(rows)], cols
    )


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, int, int]
    torsion: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] = ((), (), ())

    @property
    def euler_characteristic(self) -> int:
        b0, b1, b2 = self.betti
        return b0 - b1 + b2

    def describe(self) -> str:
        """Human-readable, e.g. ``(Z, Z/2, 0)``."""
        parts = []
        for b, tors in zip(self.betti, self.torsion):
            terms = []
            if b:
                terms.append("Z" if b == 1 else f"Z^{b}")
            terms += [f"Z/{d}" for d in tors]
            parts.append(" + ".join(terms) if terms else "0")
        return "(" + ", ".join(parts) + ")"


def homology(c: CellComplex) -> HomologyProfile:
    nv, ne, nt = c.counts()
    snf1 = smith_normal_form(boundary_matrix(c, 1))
    snf2 = smith_normal_form(boundary_matrix(c, 2))
    r1, r2 = snf1.rank, snf2.rank
    return HomologyProfile(
        (nv - r1, ne - r1 - r2, nt - r2),
        (
            tuple(d for d in snf1.invariant_factors() if d > 1),
            tuple(d for d in snf2.invariant_factors() if d > 1),
            (),
        ),
    )


def vertex_link(c: CellComplex, v: str) -> nx.MultiGraph:
    """Link of a vertex as a multigraph.

    Nodes are edge ends ``(edge id, 0 | 1)`` sitting at ``v`` (a loop gives
    two); each corner of a triangle at ``v`` contributes an arc between its
    two edge ends, keyed by ``(triangle id, position)``.
    """
    if v not in c._vertex_index:
        raise UnknownVertex(v)
    g = nx.MultiGraph()
    for e in c.edges:
        for end, w in enumerate(e.ends):
            if w == v:
                g.add_node((e.id, end))
    for t in c.triangles:
        for pos, w in enumerate(t.vertices):
            if w != v:
                continue
            ends = [
                (t.edges[s], c.edge_end_at(t, s, pos)) for s, pair in enumerate(SLOTS) if pos in pair
            ]
            g.add_edge(*ends, key=(t.id, pos))
    return g


def link_shape(g: nx.MultiGraph) -> str:
    """``"path"``, ``"cycle"`` or ``"other"`` for a link graph."""
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        return "other"
    degrees = [d for _, d in g.degree()]
    if max(degrees) > 2:
        return "other"
    if all(d == 2 for d in degrees):
        return "cycle"
    if g.number_of_nodes() >= 2 and sorted(degrees)[:2] == [1, 1] and degrees.count(1) == 2:
        return "path"
    return "other"


@dataclass(frozen=True)
class NotSurface:
    witness: str

    tag = "NotSurface"


@dataclass(frozen=True)
class ClosedSurface:
    orientable: bool
    genus: int

    tag = "ClosedSurface"


@dataclass(frozen=True)
class SurfaceWithBoundary:
    orientable: bool
    genus: int
    boundary_components: int

    tag = "SurfaceWithBoundary"


@dataclass(frozen=True)
class Disk(SurfaceWithBoundary):
    orientable: bool = True
    genus: int = 0
    boundary_components: int = 1

    tag = "Disk"


SurfaceType = NotSurface | ClosedSurface | SurfaceWithBoundary


def surface_type_dict(s) -> dict:
    out = {"tag": s.tag}
    if isinstance(s, NotSurface):
        out["witness"] = s.witness
    elif isinstance(s, ClosedSurface):
        out.update(orientable=s.orientable, genus=s.genus)
    else:
        out.update(orientable=s.orientable, genus=s.genus, boundary_components=s.boundary_components)
    return out


def _edge_slots(c: CellComplex):
    slots = {e.id: [] for e in c.edges}
    for t in c.triangles:
        signs = c.slot_signs(t)
        for j, eid in enumerate(t.edges):
            slots[eid].append((t.id, SLOT_SIGN[j] * signs[j]))
    return slots


def _orientable(c: CellComplex, slots) -> bool:
    # choose eps[t] = +-1 so that every interior edge's boundary coefficient cancels
    adj = {t.id: [] for t in c.triangles}
    for eid, sl in slots.items():
        if len(sl) != 2:
            continue
        (t1, c1), (t2, c2) = sl
        if t1 == t2:
            if c1 + c2 != 0:
                return False
            continue
        adj[t1].append((t2, -c1 * c2))
        adj[t2].append((t1, -c1 * c2))
    eps = {}
    for start in adj:
        if start in eps:
            continue
        eps[start] = 1
        stack = [start]
        while stack:
            t = stack.pop()
            for u, rel in adj[t]:
                want = eps[t] * rel
                if u not in eps:
                    eps[u] = want
                    stack.append(u)
                elif eps[u] != want:
                    return False
    return True


def surface_type(c: CellComplex):
    """Classify a connected complex as a surface, or return a witness that it is not one."""
    if not c.vertices:
        return NotSurface("empty complex")
    if len(connected_components(c)) != 1:
        raise NotConnected("surface_type expects a connected complex")
    if not c.triangles:
        return NotSurface("no 2-cells")
    slots = _edge_slots(c)
    for e in c.edges:
        n = len(slots[e.id])
        if n == 0 or n > 2:
            return NotSurface(f"edge {e.id} lies in {n} triangles")
    for v in c.vertices:
        shape = link_shape(vertex_link(c, v.id))
        if shape == "other":
            return NotSurface(f"link of vertex {v.id} is neither a path nor a cycle")
    orientable = _orientable(c, slots)
    chi = euler_characteristic(c)
    boundary = [e for e in c.edges if len(slots[e.id]) == 1]
    if not boundary:
        genus = (2 - chi) // 2 if orientable else 2 - chi
        return ClosedSurface(orientable, genus)
    bg = nx.MultiGraph()
    for e in boundary:
        bg.add_edge(*e.ends)
    b = nx.number_connected_components(bg)
    genus = (2 - chi - b) // 2 if orientable else 2 - chi - b
    if orientable and chi == 1 and b == 1:
        # a triangulated topological disk is PL-standard in dimension 2
        return Disk()
    return SurfaceWithBoundary(orientable, genus, b)


def is_pl_disk(c: CellComplex) -> bool:
    comps = connected_components(c)
    return len(comps) == 1 and isinstance(surface_type(comps[0]), Disk)
