from __future__ import annotations

from itertools import combinations

import pytest

from ptolemy_lab import (
    CellKind,
    Diagram,
    Polygon,
    SizeLimitError,
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

from _fixtures import hexagon_fan, showcase, showcase_two_empty

# counts frozen from the brute-force enumeration below
PTOLEMY_COUNTS = {4: 4, 5: 17, 6: 82, 7: 422}
DISSECTION_COUNTS = {4: 3, 5: 11, 6: 45, 7: 197}


def _all_subsets(polygon: Polygon):
    diagonals = polygon.all_diagonals()
    for mask in range(1 << len(diagonals)):
        yield frozenset(d for i, d in enumerate(diagonals) if mask >> i & 1)


def test_diagram_validates_members() -> None:
    with pytest.raises(ValueError):
        Diagram.of(6, [(0, 1)])
    d = Diagram.of(6, [(0, 2)])
    assert d.replace((0, 2), (1, 3)).diagonals == frozenset({(1, 3)})


def test_empty_and_full_diagrams_are_closed() -> None:
    for n in range(4, 8):
        p = Polygon(n)
        assert is_ptolemy(Diagram(p, frozenset()))
        assert is_ptolemy(Diagram(p, frozenset(p.all_diagonals())))


def test_single_crossing_needs_its_connectors() -> None:
    open_diagram = Diagram.of(6, [(0, 2), (1, 3)])
    assert not is_ptolemy(open_diagram)
    assert not extension_closed_oracle(open_diagram)
    closed = ptolemy_closure(open_diagram)
    assert sorted(closed.diagonals) == [(0, 2), (0, 3), (1, 3)]
    assert is_ptolemy(closed)


def test_closure_is_extensive_and_idempotent() -> None:
    p = Polygon(6)
    for members in combinations(p.all_diagonals(), 3):
        diagram = Diagram(p, frozenset(members))
        closed = ptolemy_closure(diagram)
        assert diagram.diagonals <= closed.diagonals
        assert is_ptolemy(closed)
        assert ptolemy_closure(closed).diagonals == closed.diagonals


def test_connector_and_triangle_routes_agree_exhaustively() -> None:
    for n in range(4, 7):
        p = Polygon(n)
        for subset in _all_subsets(p):
            diagram = Diagram(p, subset)
            assert is_ptolemy(diagram) == extension_closed_oracle(diagram)


def test_ptolemy_counts_frozen() -> None:
    for n, expected in PTOLEMY_COUNTS.items():
        assert len(enumerate_ptolemy(Polygon(n))) == expected


def test_enumeration_matches_brute_force() -> None:
    for n in range(4, 7):
        p = Polygon(n)
        brute = {s for s in _all_subsets(p) if is_ptolemy(Diagram(p, s))}
        assert {d.diagonals for d in enumerate_ptolemy(p)} == brute


def test_enumeration_respects_size_bound() -> None:
    with pytest.raises(SizeLimitError):
        enumerate_ptolemy(Polygon(9))
    assert enumerate_ptolemy(Polygon(9), bound=9)[0].diagonals == frozenset()


def test_dissection_counts_frozen() -> None:
    for n, expected in DISSECTION_COUNTS.items():
        assert sum(1 for _ in iter_dissections(Polygon(n))) == expected


def test_rotation_preserves_closure() -> None:
    p = Polygon(6)
    for diagram in enumerate_ptolemy(p):
        rotated = Diagram(p, frozenset(p.suspend(d) for d in diagram.diagonals))
        assert is_ptolemy(rotated)


def test_dissecting_members_of_the_showcase() -> None:
    diagram = showcase()
    assert sorted(dissecting_diagonals(diagram)) == [
        (1, 3), (1, 11), (3, 5), (3, 9), (5, 7), (7, 9), (9, 11),
    ]
    # the two clique diagonals cross each other, so they dissect nothing
    assert (1, 9) not in dissecting_diagonals(diagram)
    assert (3, 11) not in dissecting_diagonals(diagram)


def test_showcase_cells() -> None:
    decomposition = cell_decomposition(showcase())
    kinds = {cell.vertices: cell.kind for cell in decomposition.cells}
    assert kinds[(1, 3, 9, 11)] is CellKind.CLIQUE
    assert kinds[(3, 5, 7, 9)] is CellKind.EMPTY
    assert sum(kind is CellKind.EMPTY for kind in kinds.values()) == 7
    assert len(kinds) == 8


def test_cells_partition_the_polygon() -> None:
    p = Polygon(6)
    for subset in _all_subsets(p):
        decomposition = cell_decomposition(Diagram(p, subset))
        # triangulated area count: every dissection cell loses two vertices
        assert sum(len(c.vertices) - 2 for c in decomposition.cells) == p.size - 2


def test_mixed_cells_characterize_failure() -> None:
    for n in range(4, 7):
        p = Polygon(n)
        for subset in _all_subsets(p):
            diagram = Diagram(p, subset)
            mixed = any(
                cell.kind is CellKind.MIXED
                for cell in cell_decomposition(diagram).cells
            )
            assert mixed == (not is_ptolemy(diagram))


def test_bordering_cells_of_a_dissecting_member() -> None:
    diagram = showcase()
    left, right = cells_bordering(diagram, (3, 9))
    kinds = {left.vertices: left.kind, right.vertices: right.kind}
    assert kinds == {
        (3, 5, 7, 9): CellKind.EMPTY,
        (1, 3, 9, 11): CellKind.CLIQUE,
    }
    assert not borders_two_empty_cells(diagram, (3, 9))
    mutable = [
        d for d in sorted(dissecting_diagonals(diagram))
        if borders_two_empty_cells(diagram, d)
    ]
    assert mutable == [(3, 5), (5, 7), (7, 9)]


def test_two_empty_variant_unlocks_the_central_member() -> None:
    assert borders_two_empty_cells(showcase_two_empty(), (3, 9))


def test_triangulation_cells_are_all_triangles() -> None:
    decomposition = cell_decomposition(hexagon_fan())
    assert all(len(c.vertices) == 3 for c in decomposition.cells)
    assert all(c.kind is CellKind.EMPTY for c in decomposition.cells)
