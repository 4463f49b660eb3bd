"""Exact expected Betti numbers and their Monte Carlo cross-checks.

Core claims exercised here:
  * subset classes enumerate exactly the contributing families, with the
    middle-degree coincidence double-counted;
  * the n = 3 expectations reproduce the classical stick-breaking values
    exactly (1/2 on the simplex, 1 on the cube);
  * engine regression values are pinned with full rational precision and
    validated against the seeded Monte Carlo path at 3 standard errors;
  * convergence tables expose signed gaps and shrink ratios, with None after
    an exactly-zero gap;
  * per-term bounds and anchor-relabeling invariance hold on the computed
    range.
"""

from __future__ import annotations

import itertools
import math
import warnings
from fractions import Fraction

import pytest

from linkage_betti import (
    DomainError,
    IndexSubset,
    Measure,
    average_betti_exact,
    average_betti_mc,
    convergence_table,
    subset_classes,
    subset_volume_term,
)

PIN_7_1_SIMPLEX = Fraction(131441, 27648)
PIN_10_0_CUBE = Fraction(10369, 10368)
PIN_14_1_SIMPLEX = Fraction(3185271128689, 247669456896)


def test_subset_classes_examples():
    first, second = subset_classes(3, 0)
    assert [sorted(s) for s in first] == [[1]]
    assert [sorted(s) for s in second] == [[1]]

    first, second = subset_classes(5, 1)
    family1 = {frozenset(s.members) for s in first}
    family2 = {frozenset(s.members) for s in second}
    assert len(family1) == 4
    assert family1 == family2

    first, second = subset_classes(6, 1)
    assert len(list(first)) == 5
    assert len(list(second)) == 10

    with pytest.raises(DomainError):
        subset_classes(5, 3)


def test_subset_volume_term_examples():
    assert subset_volume_term(IndexSubset.of({1}, 3), Measure.SIMPLEX) == Fraction(1, 4)
    assert subset_volume_term(IndexSubset.of({1}, 3), Measure.CUBE) == Fraction(1, 2)
    for n in (3, 5, 8):
        full = IndexSubset.of(range(1, n + 1), n)
        assert subset_volume_term(full, Measure.SIMPLEX) == 0
        assert subset_volume_term(full, Measure.CUBE) == 0
    with pytest.raises(DomainError):
        subset_volume_term(IndexSubset.of(set(), 3), Measure.SIMPLEX)


def test_terms_lie_in_unit_interval():
    for measure in Measure:
        for n in (4, 6, 8):
            for p in range(n - 2):
                for family in subset_classes(n, p):
                    for subset in family:
                        term = subset_volume_term(subset, measure)
                        assert 0 <= term <= 1


def test_classical_triangle_averages():
    simplex = average_betti_exact(3, 0, Measure.SIMPLEX)
    cube = average_betti_exact(3, 0, Measure.CUBE)
    assert simplex.exact == Fraction(1, 2)
    assert cube.exact == 1
    assert simplex.term_count == 2
    assert cube.term_count == 2
    assert simplex.gap == Fraction(1, 2)
    assert cube.gap == 0


def test_middle_degree_double_count():
    report = average_betti_exact(5, 1, Measure.SIMPLEX)
    assert report.term_count == 8
    assert report.class_sums[0] == report.class_sums[1]
    assert report.exact == 2 * report.class_sums[0]


def test_regression_pins():
    assert average_betti_exact(7, 1, Measure.SIMPLEX).exact == PIN_7_1_SIMPLEX
    report = average_betti_exact(10, 0, Measure.CUBE)
    assert report.exact == PIN_10_0_CUBE
    assert abs(report.gap) < Fraction(5, 100)
    report = average_betti_exact(14, 1, Measure.SIMPLEX)
    assert report.exact == PIN_14_1_SIMPLEX
    assert abs(report.exact - 13) < 1


def test_report_bounds():
    for measure in Measure:
        for n in range(3, 9):
            for p in range(n - 2):
                report = average_betti_exact(n, p, measure)
                assert 0 < report.exact <= (
                    math.comb(n - 1, p) + math.comb(n - 1, n - 3 - p)
                )
                assert report.binomial == math.comb(n - 1, p)
                assert report.gap == report.binomial - report.exact


def test_workers_do_not_change_exact_result():
    for workers in (1, 4):
        assert (
            average_betti_exact(8, 1, Measure.CUBE, workers=workers).exact
            == average_betti_exact(8, 1, Measure.CUBE).exact
        )


def test_scale_warning_beyond_tuned_range():
    with pytest.warns(RuntimeWarning):
        average_betti_exact(17, 0, Measure.CUBE)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        average_betti_exact(10, 0, Measure.CUBE)


def test_convergence_table_shape_and_ratios():
    rows = convergence_table(0, 3, 10, Measure.SIMPLEX)
    assert [r.report.n for r in rows] == list(range(3, 11))
    gaps = [abs(r.report.gap) for r in rows]
    assert all(g > 0 for g in gaps)
    assert rows[0].gap_ratio is None
    for prev, row in zip(rows, rows[1:]):
        assert row.gap_ratio == abs(row.report.gap) / abs(prev.report.gap)
        assert row.gap_ratio < 1


def test_convergence_zero_gap_yields_none_ratio():
    rows = convergence_table(1, 4, 8, Measure.CUBE)
    by_n = {r.report.n: r for r in rows}
    assert by_n[5].report.gap == 0
    assert by_n[5].gap_ratio == 0
    assert by_n[6].gap_ratio is None
    assert by_n[7].gap_ratio is not None


def test_convergence_validation():
    with pytest.raises(DomainError):
        convergence_table(1, 3, 10, Measure.SIMPLEX)
    assert convergence_table(0, 5, 4, Measure.SIMPLEX) == []


def test_degree_validation():
    with pytest.raises(DomainError):
        average_betti_exact(2, 0, Measure.SIMPLEX)
    with pytest.raises(DomainError):
        average_betti_exact(5, 3, Measure.SIMPLEX)
    with pytest.raises(DomainError):
        average_betti_mc(5, -1, Measure.CUBE, 10, 1)


def test_mc_cross_validation_small():
    for measure in Measure:
        for n, p in ((5, 0), (6, 1)):
            exact = float(average_betti_exact(n, p, measure).exact)
            estimate = average_betti_mc(n, p, measure, 60000, 500 + n + p)
            assert abs(estimate.estimate - exact) <= 3 * estimate.stderr


def test_mc_single_sample_is_integer_valued():
    estimate = average_betti_mc(6, 0, Measure.CUBE, 1, 3)
    assert estimate.estimate == int(estimate.estimate)
    assert estimate.stderr == 0.0
    assert estimate.samples == 1


def test_mc_deterministic_across_workers():
    baseline = average_betti_mc(6, 1, Measure.SIMPLEX, 70000, 5, workers=1)
    assert average_betti_mc(6, 1, Measure.SIMPLEX, 70000, 5, workers=3) == baseline


def test_class_term_weak_monotonicity():
    for measure in Measure:
        for p in (0, 1):
            minima, maxima = [], []
            for n in range(p + 4, 12):
                first, second = subset_classes(n, p)
                minima.append(min(subset_volume_term(s, measure) for s in first))
                maxima.append(max(subset_volume_term(s, measure) for s in second))
            assert all(a <= b for a, b in zip(minima, minima[1:]))
            assert all(a >= b for a, b in zip(maxima, maxima[1:]))
            assert minima[-1] > Fraction(1, 2)
            assert maxima[-1] < Fraction(1, 2)


def test_anchor_relabeling_invariance():
    def relabeled_sum(n: int, p: int, measure: Measure, anchor: int) -> Fraction:
        others = [i for i in range(1, n + 1) if i != anchor]
        relabel = {anchor: 1, **{o: i + 2 for i, o in enumerate(others)}}
        total = Fraction(0)
        for cardinality in (p + 1, n - 2 - p):
            for extra in itertools.combinations(others, cardinality - 1):
                members = frozenset(relabel[i] for i in (anchor,) + extra)
                total += subset_volume_term(IndexSubset.of(members, n), measure)
        return total

    for measure in Measure:
        expected = average_betti_exact(6, 1, measure).exact
        for anchor in (2, 4, 6):
            assert relabeled_sum(6, 1, measure, anchor) == expected
