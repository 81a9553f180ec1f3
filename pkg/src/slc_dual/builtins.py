"""Builtin gluing datasets, as input documents.

``x31-figure`` and ``x31-text`` are two readings of the same four-line
configuration on the plane (lines L1..L4, with pij the point where Li meets
Lj; L1 is glued to L2 and L3 to L4).  They agree on the L1/L2 gluing and
differ on L3/L4:

* ``x31-text`` sends p13, p23, p34 on L3 to p14, p24, p34 on L4, in that
  order.  Its orbits merge p13, p14, p23, p24 into a single point.
* ``x31-figure`` identifies p13 with p24 and p14 with p23 under both
  gluings, so L3/L4 sends p13 to p24 and p23 to p14.  This gives four
  point centers.
"""
from __future__ import annotations

import copy


class UnknownExample(KeyError):
    pass


def _doc(components, curves, points, curve_pairs, incidence_pairs):
    return {
        "components": list(components),
        "curves": [{"id": c, "component": d} for c, d in curves],
        "points": [{"id": p, "component": d, "curves": list(cs)} for p, d, cs in points],
        "involution": {
            "curve_pairs": [list(pair) for pair in curve_pairs],
            "incidence_pairs": [[list(a), list(b)] for a, b in incidence_pairs],
        },
    }


def _four_lines(l34_pairs):
    lines = ["L1", "L2", "L3", "L4"]
    points = [(f"p{i}{j}", "P2", (f"L{i}", f"L{j}")) for i in range(1, 5) for j in range(i + 1, 5)]
    l12 = [
        (("p12", "L1"), ("p12", "L2")),
        (("p13", "L1"), ("p24", "L2")),
        (("p14", "L1"), ("p23", "L2")),
    ]
    return _doc(["P2"], [(l, "P2") for l in lines], points, [("L1", "L2"), ("L3", "L4")], l12 + l34_pairs)


_BUILTINS = {
    # affine plane, conductor the two axes, each folded by a sign change fixing the origin
    "pinch-point": _doc(
        ["A2"],
        [("s", "A2"), ("t", "A2")],
        [("O", "A2", ("s", "t"))],
        [("s", "s"), ("t", "t")],
        [(("O", "s"), ("O", "s")), (("O", "t"), ("O", "t"))],
    ),
    "x31-figure": _four_lines([
        (("p13", "L3"), ("p24", "L4")),
        (("p23", "L3"), ("p14", "L4")),
        (("p34", "L3"), ("p34", "L4")),
    ]),
    "x31-text": _four_lines([
        (("p13", "L3"), ("p14", "L4")),
        (("p23", "L3"), ("p24", "L4")),
        (("p34", "L3"), ("p34", "L4")),
    ]),
    # three planes meeting pairwise in lines and all together in one point
    "snc-triangle": _doc(
        ["D1", "D2", "D3"],
        [("c12", "D1"), ("c13", "D1"), ("c21", "D2"), ("c23", "D2"), ("c31", "D3"), ("c32", "D3")],
        [("q1", "D1", ("c12", "c13")), ("q2", "D2", ("c21", "c23")), ("q3", "D3", ("c31", "c32"))],
        [("c12", "c21"), ("c13", "c31"), ("c23", "c32")],
        [
            (("q1", "c12"), ("q2", "c21")),
            (("q1", "c13"), ("q3", "c31")),
            (("q2", "c23"), ("q3", "c32")),
        ],
    ),
    "double-curve": _doc(["D1", "D2"], [("c1", "D1"), ("c2", "D2")], [], [("c1", "c2")], []),
    "loop-pair": _doc(["D1"], [("c1", "D1"), ("c2", "D1")], [], [("c1", "c2")], []),
    "folded-curve": _doc(["D1"], [("c1", "D1")], [], [("c1", "c1")], []),
}

NAMES = tuple(_BUILTINS)


def builtin_example(name: str) -> dict:
    try:
        return copy.deepcopy(_BUILTINS[name])
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(NAMES)}") from None


def load_builtin(name: str):
    from .io import data_from_document

    return data_from_document(builtin_example(name))
