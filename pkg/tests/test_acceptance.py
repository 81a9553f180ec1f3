"""Acceptance criteria, one test each.

Every test prints a ``PASS``/``FAIL`` line; the lines are also collected
into the pytest terminal summary.  Run directly with
``python3 tests/test_acceptance.py`` for just the eight lines.
"""
import random

from slc_dual.builtins import NAMES, load_builtin
from slc_dual.cell_complex import barycentric_subdivision, boundary_matrix, euler_characteristic, isomorphic
from slc_dual.construction import build_dual_complex, enumerate_cells, snc_dual_complex
from slc_dual.halfedge_graph import GraphType, is_connected
from slc_dual.random_data import random_dataset, random_snc_dataset
from slc_dual.topology import (
    Disk,
    HomologyProfile,
    NotSurface,
    diagonal_matrix,
    homology,
    smith_normal_form,
    surface_type,
)

try:
    from conftest import RP2, TETRAHEDRON, TORUS, simplicial
except ImportError:  # run as a script from the repo root
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent))
    from conftest import RP2, TETRAHEDRON, TORUS, simplicial

N_RANDOM = 200
N_SNC = 100
RESULTS = []


def random_corpus(seed=20260101):
    rng = random.Random(seed)
    return [random_dataset(rng) for _ in range(N_RANDOM)]


def snc_corpus(seed=20260102):
    rng = random.Random(seed)
    return [random_snc_dataset(rng) for _ in range(N_SNC)]


def record(number, title, failures):
    line = f"{'PASS' if not failures else 'FAIL'} criterion {number}: {title}"
    if failures:
        line += " -- " + "; ".join(failures[:5])
    RESULTS.append(line)
    print(line)
    assert not failures, line


def check(failures, ok, message):
    if not ok:
        failures.append(message)


def profile(c):
    h = homology(c)
    return h.betti, h.torsion


def test_criterion_1_pinch_point():
    f = []
    c = build_dual_complex(load_builtin("pinch-point")).complex
    check(f, c.counts() == (4, 5, 2), f"cells {c.counts()}")
    check(f, euler_characteristic(c) == 1, "chi")
    check(f, profile(c) == ((1, 0, 0), ((), (), ())), f"homology {profile(c)}")
    check(f, surface_type(c) == Disk(), f"surface {surface_type(c)}")
    record(1, "pinch point gives a closed disk (V=4 E=5 T=2, chi=1, H=(Z,0,0))", f)


def test_criterion_2_x31_figure():
    f = []
    r = build_dual_complex(load_builtin("x31-figure"))
    c = r.complex
    check(f, euler_characteristic(c) == 3, f"chi {euler_characteristic(c)}")
    check(f, profile(c) == ((1, 0, 2), ((), (), ())), f"homology {profile(c)}")
    check(f, isinstance(surface_type(c), NotSurface), "surface type")
    check(f, len(r.link_types) == 4, f"{len(r.link_types)} point centers")
    check(f, all(t.kind is GraphType.Circle for t in r.link_types.values()), "link types")
    g = r.c1_graph
    check(f, len(g.vertices) == 1 and len(g.half_edges) == 4 and len(g.loops()) == 2, "C1 shape")
    record(2, "X31 figure dataset: chi=3, H=(Z,0,Z^2), 4 circle links, C1 one vertex two loops", f)


def test_criterion_3_x31_text():
    f = []
    r = build_dual_complex(load_builtin("x31-text"))
    c = r.complex
    check(f, len(r.link_types) == 3, f"{len(r.link_types)} point orbits")
    check(f, euler_characteristic(c) == 2, f"chi {euler_characteristic(c)}")
    h = homology(c)
    check(f, h.betti[0] == 1 and h.betti[2] == 1 and h.betti[1] == 0, f"betti {h.betti}")
    # locked values from the first computation
    check(f, h == HomologyProfile((1, 0, 1), ((), (), ())), f"homology {h}")
    check(f, c.counts() == (6, 16, 12), f"cells {c.counts()}")
    record(3, "X31 text dataset: 3 point orbits, chi=2, H=(Z,0,Z) (locked)", f)


def test_criterion_4_curve_center_graphs():
    f = []
    path = build_dual_complex(load_builtin("double-curve")).complex
    check(f, path.counts() == (3, 2, 0) and len({e.target for e in path.edges}) == 1
          and all(not e.is_loop for e in path.edges), f"double-curve {path.counts()}")
    loop = build_dual_complex(load_builtin("loop-pair")).complex
    check(f, euler_characteristic(loop) == 0 and profile(loop) == ((1, 1, 0), ((), (), ())),
          f"loop-pair {profile(loop)}")
    folded = build_dual_complex(load_builtin("folded-curve")).complex
    check(f, folded.counts() == (2, 1, 0) and euler_characteristic(folded) == 1, f"folded-curve {folded.counts()}")
    record(4, "curve centers: path, circle with H=(Z,Z,0), interval", f)


def test_criterion_5_pipeline_equivalence():
    f = []
    for name in NAMES:
        d = load_builtin(name)
        check(f, isomorphic(build_dual_complex(d).complex, enumerate_cells(d)), f"builtin {name}")
    corpus = random_corpus()
    for i, d in enumerate(corpus):
        check(f, len(d.components) <= 6 and len(d.curves) <= 12 and len(d.points) <= 12, f"limits #{i}")
        check(f, isomorphic(build_dual_complex(d).complex, enumerate_cells(d)), f"random #{i}")
    record(5, f"gluing route matches closed form on {len(NAMES)} builtins and {len(corpus)} random datasets", f)


def test_criterion_6_snc_oracle():
    f = []
    d = load_builtin("snc-triangle")
    c = build_dual_complex(d).complex
    s = snc_dual_complex(d)
    check(f, c.counts() == (7, 12, 6) and s.counts() == (3, 3, 1), f"snc-triangle {c.counts()} {s.counts()}")
    check(f, isomorphic(c, barycentric_subdivision(s), match_labels="vertices"), "snc-triangle iso")
    corpus = snc_corpus()
    for i, d in enumerate(corpus):
        c = build_dual_complex(d).complex
        check(f, isomorphic(c, barycentric_subdivision(snc_dual_complex(d)), match_labels="vertices"),
              f"snc #{i}")
    record(6, f"snc oracle agrees on snc-triangle and {len(corpus)} random snc datasets", f)


def test_criterion_7_link_law():
    f = []
    corpus = random_corpus() + [load_builtin(n) for n in NAMES]
    for i, d in enumerate(corpus):
        r = build_dual_complex(d)
        for z, g in r.link_graphs.items():
            check(f, is_connected(g), f"#{i} link {z} disconnected")
            check(f, r.link_types[z].kind in (GraphType.Circle, GraphType.Interval), f"#{i} link {z} type")
        circles = sum(t.kind is GraphType.Circle for t in r.link_types.values())
        check(f, euler_characteristic(r.complex) == euler_characteristic(r.c1_complex) + circles, f"#{i} chi")
    record(7, "every link graph is a connected circle or interval; chi(C) = chi(C1) + #circles", f)


def test_criterion_8_homology_engine():
    f = []
    for name, tris, want in (
        ("tetrahedron", TETRAHEDRON, ((1, 0, 1), ((), (), ()))),
        ("RP2", RP2, ((1, 0, 0), ((), (2,), ()))),
        ("torus", TORUS, ((1, 2, 1), ((), (), ()))),
    ):
        got = profile(simplicial(tris))
        check(f, got == want, f"{name} {got}")
    complexes = [build_dual_complex(d).complex for d in random_corpus()]
    complexes += [build_dual_complex(load_builtin(n)).complex for n in NAMES]
    complexes += [simplicial(t) for t in (TETRAHEDRON, RP2, TORUS)]
    for i, c in enumerate(complexes):
        d1, d2 = boundary_matrix(c, 1), boundary_matrix(c, 2)
        check(f, (d1 @ d2).is_zero(), f"complex #{i}: d1 d2 != 0")
        for m in (d1, d2):
            snf = smith_normal_form(m)
            check(f, snf.left @ m @ snf.right == diagonal_matrix((m.rows, m.cols), snf.diagonal),
                  f"complex #{i}: SNF certificate")
    for name in NAMES:
        c = build_dual_complex(load_builtin(name)).complex
        b = barycentric_subdivision(c)
        check(f, euler_characteristic(b) == euler_characteristic(c) and homology(b) == homology(c),
              f"subdivision of {name}")
    record(8, "homology engine: reference surfaces, d1 d2 = 0, SNF certificates, subdivision invariance", f)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
