"""Kite domains for triangle groups, the zipper map onto H and conformal welding."""

from .domain import (
    CosetTable,
    DomainError,
    FundamentalDomain,
    coset_table,
    fundamental_domain,
    geodesic_points,
    hyperbolic_distance,
)
from .preimages import PreimageError, approximate_preimages
from .triangle import (
    NotHyperbolicError,
    TriangleGroupEmbedding,
    choose_orders,
    embed_triangle_group,
    is_hyperbolic,
    moebius,
)
from .weld import Tree, WeldingError, WeldingResult, chordal, weld_h2
from .zipper import ZipperError, ZipperMap, zipper_h1

__all__ = [
    "CosetTable",
    "DomainError",
    "FundamentalDomain",
    "NotHyperbolicError",
    "PreimageError",
    "Tree",
    "TriangleGroupEmbedding",
    "WeldingError",
    "WeldingResult",
    "ZipperError",
    "ZipperMap",
    "approximate_preimages",
    "chordal",
    "choose_orders",
    "coset_table",
    "embed_triangle_group",
    "fundamental_domain",
    "geodesic_points",
    "hyperbolic_distance",
    "is_hyperbolic",
    "moebius",
    "weld_h2",
    "zipper_h1",
]
