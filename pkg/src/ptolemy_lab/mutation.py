"""Remove-and-replace mutation of diagrams at Ext-projective members.

Backward mutation removes a member c and inserts the outside term of its
left weak almost split triangle; forward mutation is the mirror using the
right triangle.  The resulting diagram need not be extension closed; the
report records the verdict together with the two-empty-cells criterion that
characterizes when closure is preserved, and, when that criterion holds,
the cover-theoretic cross-check identifying the inserted diagonal as the
cocone of a cover taken in the remaining Ext-projectives.
"""
from __future__ import annotations

from dataclasses import dataclass

from .homs import factors_to, hom_dim_to
from .polygon import Pair
from .ptolemy import (
    Diagram,
    borders_two_empty_cells,
    dissecting_diagonals,
    extension_closed_oracle,
    is_ptolemy,
)
from .weak_ar import ext_projectives, left_weak_ar, right_weak_ar, structural_minimality


@dataclass(frozen=True)
class CoverMutationReport:
    """Cross-check that backward mutation agrees with the cover construction.

    ``cover_subcategory`` is the pool of Ext-projectives other than the
    removed member, ``cover_summands`` the non-zero middles of the left
    triangle, and ``cocone_of_cover`` the outside term.  ``equals_inserted``
    holds exactly when the three cover checks pass; ``reason`` retains the
    first failure for reporting.
    """

    cover_subcategory: tuple[Pair, ...]
    cover_summands: tuple[Pair, ...]
    cover_in_subcategory: bool
    cover_is_precover: bool
    cover_is_right_minimal: bool
    cocone_of_cover: Pair
    equals_inserted: bool
    reason: str


@dataclass(frozen=True)
class MutationReport:
    input: Diagram
    removed: Pair
    inserted: Pair
    result: Diagram
    extension_closed: bool
    criterion_two_empty_cells: bool
    inserted_ext_projective_in_result: bool
    cover_mutation: CoverMutationReport | None


def _closed(diagram: Diagram) -> bool:
    # dual route: crossing-pair connectors vs triangle middles must agree
    direct = is_ptolemy(diagram)
    oracle = extension_closed_oracle(diagram)
    if direct != oracle:
        raise RuntimeError(
            f"closure routes diverge on {diagram.sorted_diagonals()}: "
            f"connectors={direct}, middles={oracle}"
        )
    return direct


def cover_mutation_check(diagram: Diagram, c: Pair) -> CoverMutationReport:
    """Build the cover at c inside the remaining Ext-projectives and verify it.

    The candidate cover is the middle term of the left weak almost split
    triangle; the checks are membership of its summands in the pool, the
    precover property (every pool member mapping to c factors through a
    summand), and structural right-minimality.
    """
    polygon = diagram.polygon
    triangle = left_weak_ar(diagram, c)
    pool = ext_projectives(diagram) - {c}
    summands = tuple(
        sorted(b for b in triangle.middles if polygon.is_diagonal(b))
    )
    in_subcategory = all(b in pool for b in summands)
    precover = True
    failing_member: Pair | None = None
    for d in sorted(pool):
        if hom_dim_to(polygon, d, c) == 0:
            continue
        if not any(factors_to(polygon, d, c, b) for b in summands):
            precover = False
            failing_member = d
            break
    right_minimal = structural_minimality(polygon, triangle.middles)
    equals = in_subcategory and precover and right_minimal
    if equals:
        reason = "cover verified; its cocone is the inserted diagonal"
    elif not in_subcategory:
        stray = next(b for b in summands if b not in pool)
        reason = f"cover summand {stray} is not Ext-projective once {c} is removed"
    elif not precover:
        reason = f"member {failing_member} maps to {c} without factoring through the cover"
    else:
        reason = "middle term admits an endomorphism off the diagonal"
    return CoverMutationReport(
        cover_subcategory=tuple(sorted(pool)),
        cover_summands=summands,
        cover_in_subcategory=in_subcategory,
        cover_is_precover=precover,
        cover_is_right_minimal=right_minimal,
        cocone_of_cover=triangle.outside,
        equals_inserted=equals,
        reason=reason,
    )


def backward_replace(diagram: Diagram, c: Pair) -> MutationReport:
    """Swap the Ext-projective member c for the outside term of its left triangle."""
    triangle = left_weak_ar(diagram, c)
    inserted = triangle.outside
    result = diagram.replace(c, inserted)
    criterion = borders_two_empty_cells(diagram, c)
    return MutationReport(
        input=diagram,
        removed=c,
        inserted=inserted,
        result=result,
        extension_closed=_closed(result),
        criterion_two_empty_cells=criterion,
        inserted_ext_projective_in_result=inserted in dissecting_diagonals(result),
        cover_mutation=cover_mutation_check(diagram, c) if criterion else None,
    )


def forward_replace(diagram: Diagram, a: Pair) -> MutationReport:
    """Swap the Ext-injective member a for the outside term of its right triangle."""
    triangle = right_weak_ar(diagram, a)
    inserted = triangle.outside
    result = diagram.replace(a, inserted)
    return MutationReport(
        input=diagram,
        removed=a,
        inserted=inserted,
        result=result,
        extension_closed=_closed(result),
        criterion_two_empty_cells=borders_two_empty_cells(diagram, a),
        inserted_ext_projective_in_result=inserted in dissecting_diagonals(result),
        cover_mutation=None,
    )
