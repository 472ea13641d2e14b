"""Link patterns, Dyck paths and the Temperley-Lieb generator action."""

from app.combinatorics.dyck import (
    DyckPath,
    Step,
    dyck_ribbons,
    from_dyck,
    is_dyck_presentable,
    signed_tile_sum,
    signed_tile_sum_by_columns,
    to_dyck,
)
from app.combinatorics.patterns import (
    DEFECT,
    BoundaryKind,
    LinkPattern,
    count_link_patterns,
    enumerate_link_patterns,
    reference_pattern,
)
from app.combinatorics.temperley_lieb import (
    apply_ei,
    boundary_loops,
    generator_sites,
    loops_right_openings,
    reflect,
    rotate,
)

__all__ = [
    "DEFECT",
    "BoundaryKind",
    "LinkPattern",
    "DyckPath",
    "Step",
    "enumerate_link_patterns",
    "count_link_patterns",
    "reference_pattern",
    "to_dyck",
    "from_dyck",
    "is_dyck_presentable",
    "signed_tile_sum",
    "signed_tile_sum_by_columns",
    "dyck_ribbons",
    "apply_ei",
    "boundary_loops",
    "loops_right_openings",
    "generator_sites",
    "rotate",
    "reflect",
]
