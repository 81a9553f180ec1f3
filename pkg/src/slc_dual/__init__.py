"""Dual complexes of semi-log-canonical surfaces from normalization gluing data."""
from .cell_complex import (
    CellComplex,
    Edge,
    IntegerMatrix,
    Triangle,
    Vertex,
    barycentric_subdivision,
    boundary_matrix,
    cone,
    connected_components,
    disjoint_union,
    euler_characteristic,
    isomorphic,
    quotient,
)
from .construction import (
    DualComplexResult,
    build_by_quotient,
    build_c1,
    build_dual_complex,
    build_gz,
    enumerate_cells,
    snc_dual_complex,
)
from .halfedge_graph import GraphType, HalfEdge, HalfEdgeGraph, is_connected, realize_as_complex, topological_type
from .slc_data import (
    CurveCase,
    SlcGluingData,
    curve_orbits,
    incidence_orbits,
    point_orbits,
    validate,
)
from .topology import HomologyProfile, homology, is_pl_disk, smith_normal_form, surface_type

__version__ = "0.1.0"
