"""Exhaustive and randomized verification suites over small polygons.

Each suite sweeps every polygon size from 4 up to a requested maximum and
checks one family of invariants, reporting how many instances it looked at
and which ones failed.  Sizes up to 7 are covered exhaustively; the
closure-equivalence suite falls back to seeded random sampling above that,
since the subset lattice grows past 2^20.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .homs import crossing_triangles, ext1_dim, hom_dim_from, hom_dim_to
from .mutation import backward_replace, cover_mutation_check, forward_replace
from .polygon import Polygon
from .ptolemy import (
    Diagram,
    borders_two_empty_cells,
    enumerate_ptolemy,
    extension_closed_oracle,
    is_ptolemy,
)
from .weak_ar import (
    ext_injectives,
    ext_projectives,
    left_weak_ar,
    right_weak_ar,
    uniqueness_check,
    verify_envelope,
    verify_minimal_left_almost_split,
    verify_minimal_right_almost_split,
)

SUITE_NAMES = (
    "ptolemy-equivalence",
    "hom-criteria",
    "weak-ar",
    "mutation-closure",
    "cover-mutation",
    "uniqueness",
)

EXHAUSTIVE_SUBSET_LIMIT = 7
MAX_RECORDED_FAILURES = 25


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    max_size: int
    checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "ok" if self.passed else f"FAILED ({len(self.failures)} shown)"
        return f"{self.suite}: sizes 4..{self.max_size}, {self.checked} checks, {verdict}"


class _Collector:
    def __init__(self) -> None:
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, describe: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(describe)


def _report(suite: str, max_size: int, acc: _Collector) -> SuiteReport:
    return SuiteReport(suite, max_size, acc.checked, tuple(acc.failures))


def _all_subsets(polygon: Polygon):
    diagonals = polygon.all_diagonals()
    for mask in range(1 << len(diagonals)):
        yield frozenset(d for i, d in enumerate(diagonals) if mask >> i & 1)


def _sampled_subsets(polygon: Polygon, samples: int, seed: int):
    diagonals = polygon.all_diagonals()
    rng = random.Random(f"{seed}:{polygon.size}")
    for _ in range(samples):
        mask = rng.getrandbits(len(diagonals))
        yield frozenset(d for i, d in enumerate(diagonals) if mask >> i & 1)


def suite_ptolemy_equivalence(
    max_size: int, samples: int = 100_000, seed: int = 0
) -> SuiteReport:
    """All-pairs connectors present iff all triangle middles present.

    The definition walks the connecting diagonals of each crossing pair of
    members; the oracle walks the middle terms of their two extension
    triangles.  They must agree on every subset of diagonals, Ptolemy or
    not.
    """
    acc = _Collector()
    for n in range(4, max_size + 1):
        polygon = Polygon(n)
        if n <= EXHAUSTIVE_SUBSET_LIMIT:
            subsets = _all_subsets(polygon)
        else:
            subsets = _sampled_subsets(polygon, samples, seed)
        for subset in subsets:
            diagram = Diagram(polygon, subset)
            acc.check(
                is_ptolemy(diagram) == extension_closed_oracle(diagram),
                f"size={n} diagonals={sorted(subset)}: closure routes disagree",
            )
    return _report("ptolemy-equivalence", max_size, acc)


def suite_hom_criteria(max_size: int) -> SuiteReport:
    """Source and target descriptions of morphism spaces agree, and the
    extension pairing matches crossing and the shifted morphism spaces."""
    acc = _Collector()
    for n in range(4, max_size + 1):
        polygon = Polygon(n)
        diagonals = polygon.all_diagonals()
        for x in diagonals:
            for y in diagonals:
                where = f"size={n} x={x} y={y}"
                acc.check(
                    hom_dim_from(polygon, x, y) == hom_dim_to(polygon, x, y),
                    f"{where}: source and target criteria disagree",
                )
                ext = ext1_dim(polygon, x, y)
                acc.check(
                    ext == int(polygon.crosses(x, y)),
                    f"{where}: extension dimension is not the crossing indicator",
                )
                acc.check(
                    ext == hom_dim_from(polygon, x, polygon.suspend(y)),
                    f"{where}: extension differs from maps into the shift",
                )
                acc.check(
                    ext == hom_dim_from(polygon, y, polygon.suspend(x)),
                    f"{where}: extension pairing is not symmetric",
                )
    return _report("hom-criteria", max_size, acc)


def suite_weak_ar(max_size: int) -> SuiteReport:
    """Both weak triangles verify at every Ext-projective of every diagram.

    Checks the minimal right almost split map and the envelope on the left
    triangle, the minimal left almost split map on the right one, that the
    outside terms are not members, and that the middles agree with the
    crossing-pair triangles of (outside, member).
    """
    acc = _Collector()
    for n in range(4, max_size + 1):
        polygon = Polygon(n)
        for diagram in enumerate_ptolemy(polygon):
            where = f"size={n} diagonals={diagram.sorted_diagonals()}"
            for c in sorted(ext_projectives(diagram)):
                left = left_weak_ar(diagram, c)
                acc.check(
                    verify_minimal_right_almost_split(diagram, left),
                    f"{where} c={c}: right almost split check failed",
                )
                acc.check(
                    verify_envelope(diagram, left.outside, *left.middles),
                    f"{where} c={c}: envelope check failed",
                )
                acc.check(
                    left.outside not in diagram.diagonals,
                    f"{where} c={c}: left outside term is a member",
                )
                acc.check(
                    set(left.middles)
                    == set(crossing_triangles(polygon, left.outside, c).b_pair),
                    f"{where} c={c}: left middles differ from the crossing triangle",
                )
                right = right_weak_ar(diagram, c)
                acc.check(
                    verify_minimal_left_almost_split(diagram, right),
                    f"{where} a={c}: left almost split check failed",
                )
                acc.check(
                    right.outside not in diagram.diagonals,
                    f"{where} a={c}: right outside term is a member",
                )
                acc.check(
                    set(right.middles)
                    == set(crossing_triangles(polygon, right.outside, c).s_pair),
                    f"{where} a={c}: right middles differ from the crossing triangle",
                )
    return _report("weak-ar", max_size, acc)


def suite_mutation_closure(max_size: int) -> SuiteReport:
    """Closure of the mutated diagram, the two-empty-cells criterion, and
    Ext-projectivity of the inserted diagonal are equivalent; when they
    hold, the mirror mutation undoes the first one."""
    acc = _Collector()
    for n in range(4, max_size + 1):
        polygon = Polygon(n)
        for diagram in enumerate_ptolemy(polygon):
            where = f"size={n} diagonals={diagram.sorted_diagonals()}"
            for c in sorted(ext_projectives(diagram)):
                report = backward_replace(diagram, c)
                acc.check(
                    report.extension_closed == report.criterion_two_empty_cells,
                    f"{where} c={c}: closure vs two-empty-cells mismatch",
                )
                acc.check(
                    report.extension_closed
                    == report.inserted_ext_projective_in_result,
                    f"{where} c={c}: closure vs inserted-projectivity mismatch",
                )
                if report.criterion_two_empty_cells:
                    back = forward_replace(report.result, report.inserted)
                    acc.check(
                        back.result == diagram and back.inserted == c,
                        f"{where} c={c}: mirror mutation did not undo",
                    )
            for a in sorted(ext_injectives(diagram)):
                report = forward_replace(diagram, a)
                acc.check(
                    report.extension_closed == report.criterion_two_empty_cells,
                    f"{where} a={a}: forward closure vs criterion mismatch",
                )
                acc.check(
                    report.extension_closed
                    == report.inserted_ext_projective_in_result,
                    f"{where} a={a}: forward closure vs projectivity mismatch",
                )
    return _report("mutation-closure", max_size, acc)


def suite_cover_mutation(max_size: int) -> SuiteReport:
    """Wherever the two-empty-cells criterion holds, the cover construction
    validates and its cocone is the inserted diagonal of a closed result."""
    acc = _Collector()
    for n in range(4, max_size + 1):
        polygon = Polygon(n)
        for diagram in enumerate_ptolemy(polygon):
            where = f"size={n} diagonals={diagram.sorted_diagonals()}"
            for c in sorted(ext_projectives(diagram)):
                if not borders_two_empty_cells(diagram, c):
                    continue
                cover = cover_mutation_check(diagram, c)
                mutated = backward_replace(diagram, c)
                acc.check(
                    cover.equals_inserted
                    and cover.cover_in_subcategory
                    and cover.cover_is_precover
                    and cover.cover_is_right_minimal,
                    f"{where} c={c}: cover checks failed: {cover.reason}",
                )
                acc.check(
                    cover.cocone_of_cover == mutated.inserted
                    and mutated.extension_closed,
                    f"{where} c={c}: cocone does not match a closed mutation",
                )
    return _report("cover-mutation", max_size, acc)


def suite_uniqueness(max_size: int) -> SuiteReport:
    """Distinct members have distinct outside terms, in both directions."""
    acc = _Collector()
    for n in range(4, max_size + 1):
        polygon = Polygon(n)
        for diagram in enumerate_ptolemy(polygon):
            acc.check(
                uniqueness_check(diagram),
                f"size={n} diagonals={diagram.sorted_diagonals()}: outside terms collide",
            )
    return _report("uniqueness", max_size, acc)


def run_suites(
    names: list[str] | None = None,
    max_size: int = 6,
    samples: int = 100_000,
    seed: int = 0,
) -> list[SuiteReport]:
    chosen = SUITE_NAMES if names is None else tuple(names)
    unknown = [name for name in chosen if name not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    reports = []
    for name in SUITE_NAMES:
        if name not in chosen:
            continue
        if name == "ptolemy-equivalence":
            reports.append(suite_ptolemy_equivalence(max_size, samples, seed))
        elif name == "hom-criteria":
            reports.append(suite_hom_criteria(max_size))
        elif name == "weak-ar":
            reports.append(suite_weak_ar(max_size))
        elif name == "mutation-closure":
            reports.append(suite_mutation_closure(max_size))
        elif name == "cover-mutation":
            reports.append(suite_cover_mutation(max_size))
        else:
            reports.append(suite_uniqueness(max_size))
    return reports
