"""Diagrams of diagonals: Ptolemy validation, closure, dissecting diagonals,
cell decomposition, and structural enumeration.

A diagram is Ptolemy when for every crossing pair of members all diagonals
joining an endpoint of one to an endpoint of the other are members too.
``extension_closed_oracle`` asks the same question along an independent
route, through the middle terms of the triangles attached to each crossing
pair; the two verdicts must always agree and the tests enforce that.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import SizeLimitError
from .homs import crossing_triangles
from .polygon import Pair, Polygon

DEFAULT_ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class Diagram:
    """A set of pairwise distinct diagonals of one polygon."""

    polygon: Polygon
    diagonals: frozenset[Pair]

    @classmethod
    def of(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "Diagram":
        """Validating constructor; normalizes endpoint order."""
        polygon = Polygon(size)
        return cls(polygon, frozenset(polygon.diagonal(u, v) for u, v in pairs))

    def sorted_diagonals(self) -> list[Pair]:
        return sorted(self.diagonals)

    def replace(self, remove: Pair, insert: Pair) -> "Diagram":
        return Diagram(self.polygon, (self.diagonals - {remove}) | {insert})


@lru_cache(maxsize=None)
def crossing_map(polygon: Polygon) -> dict[Pair, frozenset[Pair]]:
    """For each diagonal, the set of diagonals crossing it.  Do not mutate."""
    diagonals = polygon.all_diagonals()
    return {
        d: frozenset(e for e in diagonals if polygon.crosses(d, e))
        for d in diagonals
    }


@lru_cache(maxsize=None)
def _connectors(polygon: Polygon, a: Pair, c: Pair) -> tuple[Pair, ...]:
    """Genuine diagonals among the four arcs joining an endpoint of a to one of c."""
    arcs = {polygon.arc(u, v) for u in a for v in c}
    return tuple(sorted(x for x in arcs if polygon.is_diagonal(x)))


@lru_cache(maxsize=None)
def _triangle_middles(polygon: Polygon, a: Pair, c: Pair) -> tuple[Pair, ...]:
    """Non-zero middle summands of both triangles attached to a crossing pair."""
    tri = crossing_triangles(polygon, a, c)
    return tuple(x for x in (*tri.b_pair, *tri.s_pair) if polygon.is_diagonal(x))


def is_ptolemy(diagram: Diagram) -> bool:
    """Direct membership test on connecting diagonals of crossing member pairs."""
    members = diagram.diagonals
    if len(members) < 2:
        return True
    cmap = crossing_map(diagram.polygon)
    for a in members:
        for c in cmap[a] & members:
            if c < a:
                continue
            for w in _connectors(diagram.polygon, a, c):
                if w not in members:
                    return False
    return True


def extension_closed_oracle(diagram: Diagram) -> bool:
    """Closure under the extensions realised by crossing-pair triangles.

    Independent oracle for ``is_ptolemy``: instead of joining endpoints
    directly, it collects the middle summands of the two triangles attached
    to each crossing pair of members and demands membership of every
    non-zero one.
    """
    members = diagram.diagonals
    if len(members) < 2:
        return True
    cmap = crossing_map(diagram.polygon)
    for a in members:
        for c in cmap[a] & members:
            if c < a:
                continue
            for w in _triangle_middles(diagram.polygon, a, c):
                if w not in members:
                    return False
    return True


def ptolemy_closure(diagram: Diagram) -> Diagram:
    """Smallest Ptolemy diagram containing the given one (saturation)."""
    polygon = diagram.polygon
    current = set(diagram.diagonals)
    changed = True
    while changed:
        changed = False
        for a, c in itertools.combinations(sorted(current), 2):
            if not polygon.crosses(a, c):
                continue
            for w in _connectors(polygon, a, c):
                if w not in current:
                    current.add(w)
                    changed = True
    return Diagram(polygon, frozenset(current))


def dissecting_diagonals(diagram: Diagram) -> frozenset[Pair]:
    """Members crossed by no other member; they cut the polygon into cells."""
    cmap = crossing_map(diagram.polygon)
    members = diagram.diagonals
    return frozenset(d for d in members if not (cmap[d] & members))


class CellKind(Enum):
    EMPTY = "empty"
    CLIQUE = "clique"
    MIXED = "mixed"


@dataclass(frozen=True)
class Cell:
    """One region left after cutting along the dissecting diagonals.

    ``vertices`` lists the region's polygon vertices anticlockwise starting
    from the smallest.  Triangles have no internal diagonals and count as
    EMPTY.  MIXED (some but not all internal diagonals present) never occurs
    on a Ptolemy diagram.
    """

    vertices: tuple[int, ...]
    kind: CellKind


@dataclass(frozen=True)
class CellDecomposition:
    dissecting: frozenset[Pair]
    cells: tuple[Cell, ...]


def _cell_internal_diagonals(vertices: tuple[int, ...]) -> list[Pair]:
    """Chords joining non-adjacent vertices of the cell polygon."""
    m = len(vertices)
    out: list[Pair] = []
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            u, v = vertices[i], vertices[j]
            out.append((u, v) if u < v else (v, u))
    return out


def _split_region(region: tuple[int, ...], chords: tuple[Pair, ...]) -> list[tuple[int, ...]]:
    index = {v: i for i, v in enumerate(region)}
    m = len(region)
    for u, v in chords:
        if u in index and v in index:
            i, j = index[u], index[v]
            if i > j:
                i, j = j, i
            if j - i >= 2 and not (i == 0 and j == m - 1):
                left = region[i : j + 1]
                right = region[j:] + region[: i + 1]
                return _split_region(left, chords) + _split_region(right, chords)
    return [region]


def _canonical_cycle(region: tuple[int, ...]) -> tuple[int, ...]:
    k = region.index(min(region))
    return region[k:] + region[:k]


@lru_cache(maxsize=None)
def cell_decomposition(diagram: Diagram) -> CellDecomposition:
    """Cut the polygon along the dissecting diagonals and classify each cell."""
    polygon = diagram.polygon
    chords = dissecting_diagonals(diagram)
    regions = _split_region(tuple(range(polygon.size)), tuple(sorted(chords)))
    cells = []
    for region in regions:
        vertices = _canonical_cycle(region)
        internal = _cell_internal_diagonals(vertices)
        if not internal:
            kind = CellKind.EMPTY
        else:
            present = sum(1 for d in internal if d in diagram.diagonals)
            if present == 0:
                kind = CellKind.EMPTY
            elif present == len(internal):
                kind = CellKind.CLIQUE
            else:
                kind = CellKind.MIXED
        cells.append(Cell(vertices, kind))
    cells.sort(key=lambda c: c.vertices)
    return CellDecomposition(chords, tuple(cells))


def cells_bordering(diagram: Diagram, c: Pair) -> tuple[Cell, Cell]:
    """The two cells having the dissecting diagonal c on their boundary."""
    found = [
        cell
        for cell in cell_decomposition(diagram).cells
        if c[0] in cell.vertices and c[1] in cell.vertices
    ]
    if len(found) != 2:
        raise AssertionError(f"{c} borders {len(found)} cells, expected 2")
    return found[0], found[1]


def borders_two_empty_cells(diagram: Diagram, c: Pair) -> bool:
    first, second = cells_bordering(diagram, c)
    return first.kind is CellKind.EMPTY and second.kind is CellKind.EMPTY


def iter_dissections(polygon: Polygon) -> Iterator[frozenset[Pair]]:
    """All sets of pairwise non-crossing diagonals, the empty set included."""
    diagonals = polygon.all_diagonals()
    cmap = crossing_map(polygon)
    chosen: list[Pair] = []

    def rec(start: int) -> Iterator[frozenset[Pair]]:
        yield frozenset(chosen)
        for i in range(start, len(diagonals)):
            d = diagonals[i]
            if all(d not in cmap[e] for e in chosen):
                chosen.append(d)
                yield from rec(i + 1)
                chosen.pop()

    yield from rec(0)


def enumerate_ptolemy(polygon: Polygon, bound: int | None = None) -> list[Diagram]:
    """Every Ptolemy diagram of the polygon, generated structurally.

    Each diagram arises from a dissection (its dissecting diagonals) plus an
    empty-or-clique choice per cell with at least four vertices; clique
    cells contribute all their internal diagonals.  The result is
    deduplicated and deterministically ordered.  Brute-force filtering of
    all subsets must agree, which the tests check on small polygons.
    """
    limit = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    if polygon.size > limit:
        raise SizeLimitError(
            f"enumeration over a {polygon.size}-gon exceeds the bound {limit}"
        )
    seen: set[frozenset[Pair]] = set()
    for dissection in iter_dissections(polygon):
        base = Diagram(polygon, dissection)
        big_cells = [
            cell
            for cell in cell_decomposition(base).cells
            if len(cell.vertices) >= 4
        ]
        internals = [_cell_internal_diagonals(cell.vertices) for cell in big_cells]
        for flags in itertools.product((False, True), repeat=len(big_cells)):
            members = set(dissection)
            for flag, internal in zip(flags, internals):
                if flag:
                    members.update(internal)
            seen.add(frozenset(members))
    ordered = sorted(seen, key=lambda s: (len(s), sorted(s)))
    return [Diagram(polygon, s) for s in ordered]
