"""Hausdorff distances and paths between compact subsets of R^n."""

from ._core import (
    AxisBox,
    CompactSet,
    DistanceResult,
    FormatError,
    GeometryError,
    HyperPath,
    __version__,
    bounding_box,
    brute_force_hausdorff,
    concat,
    connect,
    contraction_gap,
    directed_distance,
    hausdorff,
    nested_box_hausdorff,
    path_modulus_failures,
    point_to_box_path,
    point_to_set,
    reverse,
    set_to_box_path,
    translate,
    translation_path,
)

__all__ = [
    "AxisBox",
    "CompactSet",
    "DistanceResult",
    "FormatError",
    "GeometryError",
    "HyperPath",
    "__version__",
    "bounding_box",
    "brute_force_hausdorff",
    "concat",
    "connect",
    "contraction_gap",
    "directed_distance",
    "hausdorff",
    "nested_box_hausdorff",
    "path_modulus_failures",
    "point_to_box_path",
    "point_to_set",
    "reverse",
    "set_to_box_path",
    "translate",
    "translation_path",
]
