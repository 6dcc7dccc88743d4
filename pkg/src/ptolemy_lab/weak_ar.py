"""Weak almost split triangles for additive subcategories cut out by diagrams.

For a member c crossed by no other member (an Ext-projective, equivalently
Ext-injective member), the left triangle has the shape

    outside -> middle0 + middle1 -> c -> shift(outside)

where the map into c is minimal right almost split among members and the map
out of ``outside`` is an envelope into the diagram.  The right triangle is
the mirror, starting at the member.  Middle summands attach to the two
endpoints of c and are found by scanning the bordering cells; when no member
is available on a side, the summand degenerates to a polygon edge, i.e. the
zero object.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotExtInjectiveError, NotExtProjectiveError
from .homs import ext1_dim, factors_from, factors_to, hom_dim_from, hom_dim_to
from .polygon import Pair, Polygon
from .ptolemy import Diagram, cells_bordering, crossing_map, dissecting_diagonals


class Direction(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class WeakARTriangle:
    """One weak almost split triangle.

    ``member`` is the diagram member the triangle is anchored at,
    ``outside`` the indecomposable not in the diagram at the other end, and
    ``middles`` the two middle summands (edges stand for zero).  For LEFT the
    triangle runs outside -> middles -> member, for RIGHT it runs
    member -> middles -> outside.  ``cell_vertices`` is the sorted combined
    vertex list of the two cells bordered by the member.
    """

    direction: Direction
    outside: Pair
    middles: tuple[Pair, Pair]
    member: Pair
    cell_vertices: tuple[int, ...]


def ext_projectives(diagram: Diagram) -> frozenset[Pair]:
    """Members with no extension against the diagram in the first argument.

    Computed as the dissecting diagonals and double-checked against the
    extension dimensions directly; the two routes can only diverge if the
    crossing model itself is broken, so divergence raises.
    """
    polygon = diagram.polygon
    members = diagram.diagonals
    dissecting = dissecting_diagonals(diagram)
    direct = frozenset(
        d
        for d in members
        if all(ext1_dim(polygon, d, e) == 0 for e in members)
    )
    if dissecting != direct:
        raise AssertionError("dissecting route disagrees with extension route")
    return dissecting


def ext_injectives(diagram: Diagram) -> frozenset[Pair]:
    """Members with no extension against the diagram in the second argument.

    Coincides with ``ext_projectives`` (the crossing relation is symmetric);
    verified here with the arguments in the mirrored order.
    """
    polygon = diagram.polygon
    members = diagram.diagonals
    direct = frozenset(
        d
        for d in members
        if all(ext1_dim(polygon, e, d) == 0 for e in members)
    )
    projectives = ext_projectives(diagram)
    if direct != projectives:
        raise AssertionError("injective route disagrees with projective route")
    return direct


def _role_error(
    diagram: Diagram, d: Pair, exc: type, role: str
) -> Exception:
    if d not in diagram.diagonals:
        return exc(f"{d} is not a member of the diagram", witness=None)
    witness = min(crossing_map(diagram.polygon)[d] & diagram.diagonals)
    return exc(f"{d} is not {role}: crossed by member {witness}", witness=witness)


def _bordering_vertices(diagram: Diagram, c: Pair) -> tuple[int, ...]:
    first, second = cells_bordering(diagram, c)
    return tuple(sorted(set(first.vertices) | set(second.vertices)))


def _last_attached(polygon: Polygon, diagram: Diagram, anchor: int, lo: int, hi: int) -> int:
    """Largest v in the anticlockwise interval [lo, hi] with {anchor, v} a member.

    Falls back to the interval vertex adjacent to the anchor when no member
    exists, making the attached arc an edge, i.e. the zero summand.
    """
    for v in reversed(polygon.interval(lo, hi)):
        if polygon.arc(anchor, v) in diagram.diagonals:
            return v
    return lo


def _first_attached(polygon: Polygon, diagram: Diagram, anchor: int, lo: int, hi: int) -> int:
    """Smallest v in [lo, hi] with {anchor, v} a member, defaulting to the edge."""
    for v in polygon.interval(lo, hi):
        if polygon.arc(anchor, v) in diagram.diagonals:
            return v
    return hi


def left_weak_ar(diagram: Diagram, c: Pair) -> WeakARTriangle:
    """Triangle outside -> middle0 + middle1 -> c for an Ext-projective member c.

    Writing c = {vi, vj}: the middle summand at vi is {vi, vp} with vp the
    last vertex of the anticlockwise interval [vi+1, vj-1] attached to vi by
    a member (or the edge fallback), and symmetrically at vj.  The outside
    term is {vp, vq}.  Swapping the endpoint roles swaps vp with vq and the
    two middles with each other, so the unordered data does not depend on
    the labelling of c.
    """
    if c not in ext_projectives(diagram):
        raise _role_error(diagram, c, NotExtProjectiveError, "Ext-projective")
    polygon = diagram.polygon
    vi, vj = c
    vp = _last_attached(polygon, diagram, vi, polygon.step(vi), polygon.step(vj, -1))
    vq = _last_attached(polygon, diagram, vj, polygon.step(vj), polygon.step(vi, -1))
    outside = polygon.arc(vp, vq)
    cell_vertices = _bordering_vertices(diagram, c)
    if vp not in cell_vertices or vq not in cell_vertices:
        raise AssertionError(
            f"middle attachment left the cells bordered by {c}: {vp}, {vq}"
        )
    assert polygon.is_diagonal(outside)
    assert outside not in diagram.diagonals
    return WeakARTriangle(
        Direction.LEFT,
        outside,
        (polygon.arc(vi, vp), polygon.arc(vj, vq)),
        c,
        cell_vertices,
    )


def right_weak_ar(diagram: Diagram, a: Pair) -> WeakARTriangle:
    """Triangle a -> middle0 + middle1 -> outside for an Ext-injective member a.

    Mirror of ``left_weak_ar``: middles attach to the opposite endpoint, and
    the scan takes the first attached vertex of each interval instead of the
    last.
    """
    if a not in ext_injectives(diagram):
        raise _role_error(diagram, a, NotExtInjectiveError, "Ext-injective")
    polygon = diagram.polygon
    vr, vs = a
    vp = _first_attached(polygon, diagram, vs, polygon.step(vr), polygon.step(vs, -1))
    vq = _first_attached(polygon, diagram, vr, polygon.step(vs), polygon.step(vr, -1))
    outside = polygon.arc(vp, vq)
    cell_vertices = _bordering_vertices(diagram, a)
    if vp not in cell_vertices or vq not in cell_vertices:
        raise AssertionError(
            f"middle attachment left the cells bordered by {a}: {vp}, {vq}"
        )
    assert polygon.is_diagonal(outside)
    assert outside not in diagram.diagonals
    return WeakARTriangle(
        Direction.RIGHT,
        outside,
        (polygon.arc(vs, vp), polygon.arc(vr, vq)),
        a,
        cell_vertices,
    )


def structural_minimality(polygon: Polygon, middles: tuple[Pair, Pair]) -> bool:
    """Endomorphisms of the middle term are forced diagonal.

    With both summands genuine this needs them distinct and without
    morphisms between them, i.e. neither crosses the clockwise shift of the
    other.  Zero summands are vacuously compatible.
    """
    genuine = [b for b in middles if polygon.is_diagonal(b)]
    if len(genuine) == 2:
        b0, b1 = genuine
        if b0 == b1:
            return False
        if polygon.crosses(b1, polygon.suspend_inverse(b0)):
            return False
        if polygon.crosses(b0, polygon.suspend_inverse(b1)):
            return False
    return True


def verify_minimal_right_almost_split(diagram: Diagram, triangle: WeakARTriangle) -> bool:
    """Check the map middles -> member against every member mapping into it.

    True when all non-zero middles are members, every non-zero morphism from
    a member d != member factors through one of them, and the structural
    minimality condition holds.
    """
    if triangle.direction is not Direction.LEFT:
        raise ValueError("expected a LEFT triangle")
    polygon = diagram.polygon
    c = triangle.member
    genuine = [b for b in triangle.middles if polygon.is_diagonal(b)]
    if any(b not in diagram.diagonals for b in genuine):
        return False
    for d in diagram.diagonals:
        if d == c or hom_dim_to(polygon, d, c) == 0:
            continue
        if not any(factors_to(polygon, d, c, b) for b in genuine):
            return False
    return structural_minimality(polygon, triangle.middles)


def verify_envelope(diagram: Diagram, outside: Pair, b0: Pair, b1: Pair) -> bool:
    """Check that outside -> b0 + b1 is a minimal envelope into the diagram.

    True when all non-zero summands are members, every non-zero morphism
    from ``outside`` to a member factors through one of them, and the
    structural minimality condition holds.
    """
    assert outside not in diagram.diagonals
    polygon = diagram.polygon
    genuine = [b for b in (b0, b1) if polygon.is_diagonal(b)]
    if any(b not in diagram.diagonals for b in genuine):
        return False
    for d in diagram.diagonals:
        if hom_dim_from(polygon, outside, d) == 0:
            continue
        if not any(factors_from(polygon, outside, d, b) for b in genuine):
            return False
    return structural_minimality(polygon, (b0, b1))


def verify_minimal_left_almost_split(diagram: Diagram, triangle: WeakARTriangle) -> bool:
    """Mirror check for member -> middles: factor every map out of the member."""
    if triangle.direction is not Direction.RIGHT:
        raise ValueError("expected a RIGHT triangle")
    polygon = diagram.polygon
    a = triangle.member
    genuine = [b for b in triangle.middles if polygon.is_diagonal(b)]
    if any(b not in diagram.diagonals for b in genuine):
        return False
    for d in diagram.diagonals:
        if d == a or hom_dim_from(polygon, a, d) == 0:
            continue
        if not any(factors_from(polygon, a, d, b) for b in genuine):
            return False
    return structural_minimality(polygon, triangle.middles)


def uniqueness_check(diagram: Diagram) -> bool:
    """No two anchors share an outside term, in either direction."""
    anchors = sorted(ext_projectives(diagram))
    left = [left_weak_ar(diagram, c).outside for c in anchors]
    right = [right_weak_ar(diagram, a).outside for a in anchors]
    return len(set(left)) == len(left) and len(set(right)) == len(right)
