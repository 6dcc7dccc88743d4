from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptolemy_lab import Polygon


def test_rejects_degenerate_polygons() -> None:
    for size in (0, 1, 2, 3):
        with pytest.raises(ValueError):
            Polygon(size)


def test_interval_wraps_around_zero() -> None:
    p = Polygon(8)
    assert p.interval(6, 1) == [6, 7, 0, 1]
    assert p.interval(2, 2) == [2]
    # one step back from the start means the full cycle
    assert p.interval(3, 2) == [3, 4, 5, 6, 7, 0, 1, 2]


def test_interval_membership() -> None:
    p = Polygon(8)
    assert p.in_interval(0, 6, 1)
    assert p.in_interval(6, 6, 1)
    assert not p.in_interval(2, 6, 1)
    assert p.in_open_interval(7, 6, 1)
    assert not p.in_open_interval(6, 6, 1)
    assert not p.in_open_interval(1, 6, 1)


def test_arc_canonical_form() -> None:
    p = Polygon(6)
    assert p.arc(5, 1) == (1, 5)
    assert p.arc(-1, 1) == (1, 5)
    assert p.arc(8, 0) == (0, 2)
    with pytest.raises(ValueError):
        p.arc(2, 2)


def test_edges_are_not_diagonals() -> None:
    p = Polygon(6)
    assert p.is_edge((0, 1))
    assert p.is_edge((0, 5))
    assert not p.is_edge((0, 2))
    assert p.is_diagonal((0, 2))
    assert not p.is_diagonal((0, 5))
    with pytest.raises(ValueError):
        p.diagonal(0, 1)


def test_diagonal_count_formula() -> None:
    for n in range(4, 13):
        assert len(Polygon(n).all_diagonals()) == n * (n - 3) // 2


def test_all_diagonals_sorted_and_valid() -> None:
    p = Polygon(7)
    diagonals = p.all_diagonals()
    assert diagonals == sorted(set(diagonals))
    assert all(p.is_diagonal(d) for d in diagonals)


def test_suspension_steps_clockwise() -> None:
    p = Polygon(12)
    assert p.suspend((3, 9)) == (2, 8)
    assert p.suspend((0, 2)) == (1, 11)
    assert p.suspend_inverse((2, 8)) == (3, 9)


def test_suspension_period_is_polygon_size() -> None:
    for n in range(4, 13):
        p = Polygon(n)
        for d in p.all_diagonals():
            arc = d
            for _ in range(n):
                arc = p.suspend(arc)
            assert arc == d


def test_crossing_examples() -> None:
    p = Polygon(8)
    assert p.crosses((0, 2), (1, 3))
    assert not p.crosses((0, 2), (0, 4))  # shared endpoint
    assert not p.crosses((0, 2), (3, 6))
    assert not p.crosses((0, 2), (0, 2))
    assert Polygon(12).crosses((3, 9), (1, 5))


@st.composite
def _two_arcs(draw: st.DrawFn) -> tuple[Polygon, tuple[int, int], tuple[int, int]]:
    size = draw(st.integers(min_value=4, max_value=16))
    p = Polygon(size)
    d = draw(st.sampled_from(p.all_diagonals()))
    e = draw(st.sampled_from(p.all_diagonals()))
    return p, d, e


@given(_two_arcs())
def test_crossing_is_symmetric(data: tuple[Polygon, tuple[int, int], tuple[int, int]]) -> None:
    p, d, e = data
    assert p.crosses(d, e) == p.crosses(e, d)


@given(_two_arcs())
def test_crossing_survives_rotation(data: tuple[Polygon, tuple[int, int], tuple[int, int]]) -> None:
    p, d, e = data
    assert p.crosses(p.suspend(d), p.suspend(e)) == p.crosses(d, e)
    assert p.suspend_inverse(p.suspend(d)) == d
