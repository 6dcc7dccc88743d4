"""Morphism existence and factoring tests, plus the triangles attached to a
crossing pair of diagonals and the irreducible-morphism quiver.

Every morphism space in this model is at most one dimensional, so the
dimension functions return 0 or 1 and factoring questions are answered by
interval containment of endpoints; no scalars are ever tracked.

Two independent criteria are implemented on purpose: ``hom_dim_from`` reads
the intervals off the source diagonal, ``hom_dim_to`` off the target.  They
must agree everywhere, and the test suite checks that exhaustively.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCrossingError, PreconditionError
from .polygon import Pair, Polygon


def ext1_dim(polygon: Polygon, a: Pair, c: Pair) -> int:
    """dim Ext^1(a, c): 1 exactly when the two diagonals cross."""
    return 1 if polygon.crosses(a, c) else 0


def _source_assignment(polygon: Polygon, x: Pair, y: Pair) -> Pair | None:
    """Endpoints of y labelled relative to the source x, or None if Hom(x, y) = 0.

    With x = (x0, x1) there is a non-zero morphism x -> y exactly when y has
    one endpoint in the closed fan [x0, x1 - 2] and the other in [x1, x0 - 2].
    The two fans are disjoint, so the labelling is unique when it exists.
    """
    x0, x1 = x
    for y0, y1 in (y, (y[1], y[0])):
        if polygon.in_interval(y0, x0, x1 - 2) and polygon.in_interval(y1, x1, x0 - 2):
            return y0, y1
    return None


def hom_dim_from(polygon: Polygon, x: Pair, y: Pair) -> int:
    """dim Hom(x, y), computed from intervals around the source x."""
    return 0 if _source_assignment(polygon, x, y) is None else 1


def _target_assignment(polygon: Polygon, z: Pair, x: Pair) -> Pair | None:
    """Endpoints of z labelled relative to the target x, or None if Hom(z, x) = 0.

    Dual criterion: a non-zero morphism z -> x exists exactly when z has one
    endpoint in [x0 + 2, x1] and the other in [x1 + 2, x0].
    """
    x0, x1 = x
    for z0, z1 in (z, (z[1], z[0])):
        if polygon.in_interval(z0, x0 + 2, x1) and polygon.in_interval(z1, x1 + 2, x0):
            return z0, z1
    return None


def hom_dim_to(polygon: Polygon, z: Pair, x: Pair) -> int:
    """dim Hom(z, x), computed from intervals around the target x."""
    return 0 if _target_assignment(polygon, z, x) is None else 1


def factors_from(polygon: Polygon, x: Pair, y: Pair, s: Pair) -> bool:
    """Does the (unique up to scalar) morphism x -> y factor through s?

    Requires Hom(x, y) != 0.  With the endpoints of y labelled y0, y1
    relative to x, the morphism factors through a diagonal s exactly when s
    has one endpoint in [x0, y0] and the other in [x1, y1].  An edge s is the
    zero object, and a non-zero morphism never factors through it.
    """
    assignment = _source_assignment(polygon, x, y)
    if assignment is None:
        raise PreconditionError(f"no non-zero morphism {x} -> {y}")
    if not polygon.is_diagonal(s):
        return False
    y0, y1 = assignment
    x0, x1 = x
    s0, s1 = s
    return (
        polygon.in_interval(s0, x0, y0) and polygon.in_interval(s1, x1, y1)
    ) or (
        polygon.in_interval(s1, x0, y0) and polygon.in_interval(s0, x1, y1)
    )


def factors_to(polygon: Polygon, z: Pair, x: Pair, s: Pair) -> bool:
    """Does the (unique up to scalar) morphism z -> x factor through s?

    Requires Hom(z, x) != 0.  With the endpoints of z labelled z0, z1
    relative to x, the morphism factors through a diagonal s exactly when s
    has one endpoint in [z0, x1] and the other in [z1, x0].
    """
    assignment = _target_assignment(polygon, z, x)
    if assignment is None:
        raise PreconditionError(f"no non-zero morphism {z} -> {x}")
    if not polygon.is_diagonal(s):
        return False
    z0, z1 = assignment
    x0, x1 = x
    s0, s1 = s
    return (
        polygon.in_interval(s0, z0, x1) and polygon.in_interval(s1, z1, x0)
    ) or (
        polygon.in_interval(s1, z0, x1) and polygon.in_interval(s0, z1, x0)
    )


@dataclass(frozen=True)
class CrossingTriangles:
    """The two triangles attached to a crossing pair of diagonals.

    For crossing diagonals a, c the four quadrilateral sides on their
    endpoints split into two pairs: ``b_pair`` gives the middle of the
    triangle a -> b0 + b1 -> c, and ``s_pair`` the middle of
    c -> s0 + s1 -> a.  Sides that are polygon edges stand for zero
    summands and are returned as-is.
    """

    a: Pair
    c: Pair
    b_pair: tuple[Pair, Pair]
    s_pair: tuple[Pair, Pair]


def crossing_triangles(polygon: Polygon, a: Pair, c: Pair) -> CrossingTriangles:
    """Split the quadrilateral sides of a crossing pair into triangle middles.

    A side {c_j, a_k} belongs to ``b_pair`` exactly when the anticlockwise
    walk from c_j to a_k meets no other endpoint of a or c, i.e. c_j is the
    cyclic predecessor of a_k among the four endpoints; the remaining two
    sides form ``s_pair``.
    """
    if not polygon.crosses(a, c):
        raise NotCrossingError(f"{a} and {c} do not cross")
    endpoints = (*a, *c)
    b_arcs: list[Pair] = []
    s_arcs: list[Pair] = []
    for a_k in a:
        for c_j in c:
            rest = [v for v in endpoints if v != a_k and v != c_j]
            if not any(polygon.in_open_interval(v, c_j, a_k) for v in rest):
                b_arcs.append(polygon.arc(c_j, a_k))
            if not any(polygon.in_open_interval(v, a_k, c_j) for v in rest):
                s_arcs.append(polygon.arc(a_k, c_j))
    if len(b_arcs) != 2 or len(s_arcs) != 2:
        raise AssertionError(f"crossing pair {a}, {c} did not yield 2+2 sides")
    b0, b1 = sorted(b_arcs)
    s0, s1 = sorted(s_arcs)
    return CrossingTriangles(a, c, (b0, b1), (s0, s1))


def is_ar_triangle(polygon: Polygon, triangles: CrossingTriangles, which: str) -> bool:
    """Is the chosen triangle of a crossing pair almost split?

    ``which`` selects the triangle: "b" is a -> b0 + b1 -> c, almost split
    exactly when a is the suspension of c; "s" is c -> s0 + s1 -> a, almost
    split exactly when c is the suspension of a.
    """
    if which == "b":
        return triangles.a == polygon.suspend(triangles.c)
    if which == "s":
        return triangles.c == polygon.suspend(triangles.a)
    raise ValueError(f"which must be 'b' or 's', got {which!r}")


@dataclass(frozen=True)
class ARQuiver:
    """Irreducible-morphism quiver: nodes are diagonals, arrows move one
    endpoint a single anticlockwise step."""

    polygon: Polygon
    nodes: frozenset[Pair]
    arrows: frozenset[tuple[Pair, Pair]]

    def successors(self, d: Pair) -> list[Pair]:
        return sorted(t for s, t in self.arrows if s == d)

    def predecessors(self, d: Pair) -> list[Pair]:
        return sorted(s for s, t in self.arrows if t == d)


def ar_quiver(polygon: Polygon) -> ARQuiver:
    """Build the quiver on all diagonals of the polygon.

    There is an arrow d -> d' whenever d' is obtained from d by moving one
    endpoint a single step anticlockwise and d' is a genuine diagonal.  On a
    square both moves of either diagonal produce edges, so that quiver has
    no arrows at all; from five vertices up every node has matching in- and
    out-degree of 1 or 2.
    """
    nodes = frozenset(polygon.all_diagonals())
    arrows: set[tuple[Pair, Pair]] = set()
    for d in nodes:
        d0, d1 = d
        for moved in ((d0, d1 + 1), (d0 + 1, d1)):
            target = polygon.arc(*moved)
            if polygon.is_diagonal(target):
                arrows.add((d, target))
    return ARQuiver(polygon, nodes, frozenset(arrows))
