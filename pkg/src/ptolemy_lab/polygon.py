"""Cyclic vertex arithmetic on a convex polygon and its chords.

Vertices are the residues 0..size-1, labelled anticlockwise.  An arc is an
unordered pair of distinct vertices stored with the smaller index first.
Arcs joining adjacent vertices are polygon edges and stand for the zero
object wherever arcs appear as summands; every other arc is a diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass

Pair = tuple[int, int]


@dataclass(frozen=True, order=True)
class Polygon:
    """Convex polygon with ``size`` vertices; every operation is pure."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 4:
            raise ValueError(f"need at least 4 vertices, got {self.size}")

    def step(self, v: int, k: int = 1) -> int:
        """The vertex k anticlockwise steps from v (negative k goes clockwise)."""
        return (v + k) % self.size

    def in_interval(self, v: int, a: int, b: int) -> bool:
        """True if v lies in the closed anticlockwise interval [a, b].

        [a, a] is the singleton {a}; [a, a - 1] wraps all the way around and
        contains every vertex.
        """
        return (v - a) % self.size <= (b - a) % self.size

    def in_open_interval(self, v: int, a: int, b: int) -> bool:
        """True if v lies strictly between a and b, going anticlockwise."""
        return 0 < (v - a) % self.size < (b - a) % self.size

    def interval(self, a: int, b: int) -> list[int]:
        """The vertices of [a, b] in anticlockwise order."""
        return [(a + i) % self.size for i in range((b - a) % self.size + 1)]

    def arc(self, a: int, b: int) -> Pair:
        """Canonical unordered pair of distinct vertices."""
        a %= self.size
        b %= self.size
        if a == b:
            raise ValueError(f"degenerate arc at vertex {a}")
        return (a, b) if a < b else (b, a)

    def is_edge(self, arc: Pair) -> bool:
        u, v = arc
        return (v - u) % self.size in (1, self.size - 1)

    def is_diagonal(self, arc: Pair) -> bool:
        u, v = arc
        u %= self.size
        v %= self.size
        return u != v and (v - u) % self.size not in (1, self.size - 1)

    def diagonal(self, a: int, b: int) -> Pair:
        """Validating constructor: the endpoints must not be adjacent."""
        d = self.arc(a, b)
        if self.is_edge(d):
            raise ValueError(f"{d} joins adjacent vertices of a {self.size}-gon")
        return d

    def suspend(self, arc: Pair, k: int = 1) -> Pair:
        """Rotate both endpoints k steps clockwise (the shift on arcs)."""
        return self.arc(arc[0] - k, arc[1] - k)

    def suspend_inverse(self, arc: Pair) -> Pair:
        return self.suspend(arc, -1)

    def crosses(self, d: Pair, e: Pair) -> bool:
        """True if the chords d and e meet in the interior of the polygon.

        Sharing an endpoint does not count; a chord never crosses itself.
        The test: exactly one endpoint of e falls strictly inside the
        anticlockwise span of d.
        """
        d0, d1 = d
        e0, e1 = e
        if d0 == e0 or d0 == e1 or d1 == e0 or d1 == e1:
            return False
        return self.in_open_interval(e0, d0, d1) != self.in_open_interval(e1, d0, d1)

    def all_diagonals(self) -> list[Pair]:
        """All size*(size-3)/2 diagonals, lexicographically sorted."""
        n = self.size
        return [
            (u, v)
            for u in range(n)
            for v in range(u + 2, n)
            if not (u == 0 and v == n - 1)
        ]
