"""Diagonals of a convex polygon as a combinatorial triangulated category.

Diagonals are indecomposable objects, crossings are extensions, and sets of
diagonals are additive subcategories.  The package decides extension
closure (the Ptolemy condition), builds weak almost split triangles at
Ext-projective members, mutates diagrams by remove-and-replace, and ships
exhaustive verification suites plus a CLI and HTTP front end.
"""
from .errors import (
    DiagonalRoleError,
    LabError,
    NotCrossingError,
    NotExtInjectiveError,
    NotExtProjectiveError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .homs import (
    ARQuiver,
    CrossingTriangles,
    ar_quiver,
    crossing_triangles,
    ext1_dim,
    factors_from,
    factors_to,
    hom_dim_from,
    hom_dim_to,
    is_ar_triangle,
)
from .mutation import (
    CoverMutationReport,
    MutationReport,
    backward_replace,
    cover_mutation_check,
    forward_replace,
)
from .polygon import Pair, Polygon
from .ptolemy import (
    Cell,
    CellDecomposition,
    CellKind,
    Diagram,
    borders_two_empty_cells,
    cell_decomposition,
    cells_bordering,
    dissecting_diagonals,
    enumerate_ptolemy,
    extension_closed_oracle,
    is_ptolemy,
    iter_dissections,
    ptolemy_closure,
)
from .weak_ar import (
    Direction,
    WeakARTriangle,
    ext_injectives,
    ext_projectives,
    left_weak_ar,
    right_weak_ar,
    structural_minimality,
    uniqueness_check,
    verify_envelope,
    verify_minimal_left_almost_split,
    verify_minimal_right_almost_split,
)

__version__ = "0.1.0"

__all__ = [
    "ARQuiver",
    "Cell",
    "CellDecomposition",
    "CellKind",
    "CoverMutationReport",
    "CrossingTriangles",
    "Diagram",
    "DiagonalRoleError",
    "Direction",
    "LabError",
    "MutationReport",
    "NotCrossingError",
    "NotExtInjectiveError",
    "NotExtProjectiveError",
    "Pair",
    "ParseError",
    "Polygon",
    "PreconditionError",
    "SizeLimitError",
    "WeakARTriangle",
    "ar_quiver",
    "backward_replace",
    "borders_two_empty_cells",
    "cell_decomposition",
    "cells_bordering",
    "cover_mutation_check",
    "crossing_triangles",
    "dissecting_diagonals",
    "enumerate_ptolemy",
    "ext1_dim",
    "ext_injectives",
    "ext_projectives",
    "extension_closed_oracle",
    "factors_from",
    "factors_to",
    "forward_replace",
    "hom_dim_from",
    "hom_dim_to",
    "is_ar_triangle",
    "is_ptolemy",
    "iter_dissections",
    "left_weak_ar",
    "ptolemy_closure",
    "right_weak_ar",
    "structural_minimality",
    "uniqueness_check",
    "verify_envelope",
    "verify_minimal_left_almost_split",
    "verify_minimal_right_almost_split",
]
