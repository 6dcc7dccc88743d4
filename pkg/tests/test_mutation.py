from __future__ import annotations

import pytest

from ptolemy_lab import (
    Diagram,
    NotExtInjectiveError,
    NotExtProjectiveError,
    backward_replace,
    cover_mutation_check,
    forward_replace,
)

from _fixtures import hexagon_fan, showcase, showcase_two_empty


def test_backward_replace_next_to_the_clique() -> None:
    report = backward_replace(showcase(), (3, 9))
    assert report.removed == (3, 9)
    assert report.inserted == (1, 5)
    assert not report.extension_closed
    assert not report.criterion_two_empty_cells
    assert not report.inserted_ext_projective_in_result
    assert report.cover_mutation is None
    expected = (showcase().diagonals - {(3, 9)}) | {(1, 5)}
    assert report.result.diagonals == expected


def test_backward_replace_between_two_empty_cells() -> None:
    report = backward_replace(showcase_two_empty(), (3, 9))
    assert report.inserted == (5, 11)
    assert report.extension_closed
    assert report.criterion_two_empty_cells
    assert report.inserted_ext_projective_in_result
    assert sorted(report.result.diagonals) == [
        (1, 3), (1, 11), (3, 5), (5, 7), (5, 11), (7, 9), (9, 11),
    ]
    cover = report.cover_mutation
    assert cover is not None
    assert cover.cover_summands == ((3, 5), (9, 11))
    assert cover.cover_in_subcategory
    assert cover.cover_is_precover
    assert cover.cover_is_right_minimal
    assert cover.cocone_of_cover == (5, 11)
    assert cover.equals_inserted
    assert cover.reason == "cover verified; its cocone is the inserted diagonal"


def test_cover_check_reports_failure_without_raising() -> None:
    # next to the clique the removed member's cover escapes the remaining
    # projectives, so the comparison fails but still yields a report
    report = cover_mutation_check(showcase(), (3, 9))
    assert not report.cover_in_subcategory
    assert not report.equals_inserted
    assert report.cover_summands == ((1, 9), (3, 5))
    assert "(1, 9)" in report.reason


def test_backward_replace_in_a_fan_triangulation() -> None:
    report = backward_replace(hexagon_fan(), (0, 2))
    assert report.inserted == (1, 4)
    assert report.extension_closed
    assert report.criterion_two_empty_cells
    cover = report.cover_mutation
    assert cover is not None
    assert cover.cover_summands == ((2, 4),)
    assert cover.equals_inserted


def test_forward_then_backward_is_the_identity() -> None:
    original = hexagon_fan()
    flipped = backward_replace(original, (0, 2)).result
    restored = forward_replace(flipped, (1, 4))
    assert restored.inserted == (0, 2)
    assert restored.result.diagonals == original.diagonals
    assert restored.cover_mutation is None


def test_forward_replace_next_to_the_clique() -> None:
    report = forward_replace(showcase(), (3, 9))
    assert report.inserted == (7, 11)
    assert not report.extension_closed
    assert not report.criterion_two_empty_cells


def test_replace_demands_the_proper_role() -> None:
    with pytest.raises(NotExtProjectiveError):
        backward_replace(showcase(), (3, 11))
    with pytest.raises(NotExtInjectiveError):
        forward_replace(showcase(), (1, 9))


def test_report_records_the_exchanged_members() -> None:
    diagram = showcase_two_empty()
    report = backward_replace(diagram, (5, 7))
    assert report.input.diagonals == diagram.diagonals
    assert report.result.diagonals == (diagram.diagonals - {report.removed}) | {report.inserted}
    assert report.removed not in report.result.diagonals
    assert report.inserted in report.result.diagonals
