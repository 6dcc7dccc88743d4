from __future__ import annotations

import pytest

from ptolemy_lab.verify import SUITE_NAMES, run_suites


def test_all_suites_pass_on_small_polygons() -> None:
    reports = run_suites(max_size=5)
    assert [r.suite for r in reports] == list(SUITE_NAMES)
    for report in reports:
        assert report.passed, report.summary()
        assert report.checked > 0
        assert not report.failures
        assert "ok" in report.summary()


def test_suite_selection_runs_in_canonical_order() -> None:
    reports = run_suites(["uniqueness", "hom-criteria"], max_size=4)
    assert [r.suite for r in reports] == ["hom-criteria", "uniqueness"]


def test_unknown_suite_name_is_rejected() -> None:
    with pytest.raises(ValueError):
        run_suites(["theorem-b"], max_size=4)


def test_sampling_kicks_in_beyond_the_exhaustive_limit() -> None:
    # size 8 has 2^20 subsets; the sampled run must stay bounded and seeded
    first = run_suites(["ptolemy-equivalence"], max_size=8, samples=50, seed=7)[0]
    second = run_suites(["ptolemy-equivalence"], max_size=8, samples=50, seed=7)[0]
    assert first.passed
    assert first.checked == second.checked
