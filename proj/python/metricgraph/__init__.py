"""Metric graphs as quotients of interval families.

Exact rational arithmetic end to end: distances, graph surgery,
relation-algebra operations on graphs, and L^p / Sobolev norms of
edgewise-polynomial functions. Rational values cross the boundary as
`fractions.Fraction`; points and endpoints are compact strings such as
"e@1/2" and "e:0".
"""

from ._core import (
    DomainError,
    MetricGraph,
    ParseError,
    PiecewiseFunction,
    PointTransfer,
    SobolevMembershipError,
    Subdivision,
    build_graph,
    continuity_witness,
    cut_graph,
    distance,
    emit_function,
    emit_graph,
    equivalent_mod_subdivision,
    flower,
    fully_cut,
    geodesic,
    graph_complement,
    graph_intersection,
    graph_union,
    is_ck,
    is_continuous,
    lp_norm,
    lp_norm_pow,
    parse_function,
    parse_graph,
    primitive_form,
    push_to_subdivision,
    rearrange,
    rewire,
    sobolev_norm,
    subdivide,
    sup_norm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
