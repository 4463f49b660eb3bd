"""Exact volume fraction of a simplex on one side of a linear cut.

Let q_0, ..., q_n be the values of a linear functional at the n+1 vertices of
a nondegenerate n-simplex.  The fraction of the simplex's volume lying where
the functional is negative depends only on these values.  When they are
pairwise distinct it is the classic partial-fraction sum

    r = sum over i with q_i < 0 of   prod_{j != i} q_i / (q_i - q_j),

and the one-sided distribution function x -> vol fraction below x replaces
q_i by q_i - x in the products.  When values repeat, each value Q_i of
multiplicity k_i + 1 contributes a correction factor

    F_i = sum over weak compositions delta of k_i into s+1 parts of
          C(n, delta_i) * (-Q_i)^(k_i - delta_i)
          * prod_{j != i} C(k_j + delta_j, delta_j) / (Q_i - Q_j)^delta_j,

with s + 1 the number of distinct values, and

    r = sum over i with Q_i < 0 of
        F_i * prod_{j != i} (Q_i / (Q_i - Q_j))^(k_j + 1).

F_i collapses to 1 for simple values (k_i = 0), so the confluent form extends
the distinct one.  All arithmetic is exact rational arithmetic; the public
entry point ``slice_ratio`` additionally evaluates whichever side of the cut
has fewer contributing groups and complements, since vol fractions of the two
open sides add to 1.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DomainError
from .simplexes import VertexValues

__all__ = [
    "GroupedValues",
    "group_values",
    "weak_compositions",
    "slice_ratio_distinct",
    "slice_cdf",
    "slice_ratio_confluent",
    "slice_ratio",
]


@dataclass(frozen=True)
class GroupedValues:
    """Distinct vertex values in strictly decreasing order, with multiplicities."""

    distinct: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.distinct) != len(self.multiplicities):
            raise DomainError("one multiplicity per distinct value")
        if not self.distinct:
            raise DomainError("need at least one value")
        if any(m < 1 for m in self.multiplicities):
            raise DomainError("multiplicities must be positive")
        if any(a <= b for a, b in zip(self.distinct, self.distinct[1:])):
            raise DomainError("distinct values must strictly decrease")

    @property
    def ambient_dim(self) -> int:
        """Dimension n of the simplex carrying these n+1 vertex values."""
        return sum(self.multiplicities) - 1

    def negated(self) -> "GroupedValues":
        """Grouping of the negated values; order reverses to stay decreasing."""
        return GroupedValues(
            tuple(-v for v in reversed(self.distinct)),
            tuple(reversed(self.multiplicities)),
        )

    def scaled(self, factor: Fraction | int) -> "GroupedValues":
        factor = Fraction(factor)
        if factor <= 0:
            raise DomainError("scaling factor must be positive")
        return GroupedValues(
            tuple(v * factor for v in self.distinct), self.multiplicities
        )


def _as_values(values: "VertexValues | Iterable[Fraction]") -> tuple[Fraction, ...]:
    if isinstance(values, VertexValues):
        return values.values
    return tuple(Fraction(v) for v in values)


def group_values(values: "VertexValues | Iterable[Fraction]") -> GroupedValues:
    """Collect vertex values into decreasing distinct values with multiplicities."""
    vals = _as_values(values)
    if not vals:
        raise DomainError("need at least one value")
    counts = Counter(vals)
    distinct = tuple(sorted(counts, reverse=True))
    return GroupedValues(distinct, tuple(counts[v] for v in distinct))


def weak_compositions(parts: int, total: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``.

    Stars and bars: there are C(parts - 1 + total, total) of them.
    """
    if parts < 1 or total < 0:
        raise DomainError("need parts >= 1 and total >= 0")
    slots = parts - 1 + total
    for cuts in itertools.combinations(range(slots), parts - 1):
        extended = (-1,) + cuts + (slots,)
        yield tuple(extended[i + 1] - extended[i] - 1 for i in range(parts))


def _require_dimension(n: int) -> None:
    if n < 1:
        raise DomainError("need an ambient simplex dimension of at least 1")


def slice_ratio_distinct(values: "VertexValues | Iterable[Fraction]") -> Fraction:
    """Negative-side volume fraction when all vertex values are distinct."""
    vals = _as_values(values)
    _require_dimension(len(vals) - 1)
    if len(set(vals)) != len(vals):
        raise DomainError("values repeat; use slice_ratio or slice_ratio_confluent")
    total = Fraction(0)
    for i, qi in enumerate(vals):
        if qi >= 0:
            continue
        term = Fraction(1)
        for j, qj in enumerate(vals):
            if j != i:
                term *= qi / (qi - qj)
        total += term
    return total


def slice_cdf(values: "VertexValues | Iterable[Fraction]", x: Fraction | int) -> Fraction:
    """Volume fraction where the functional is below x (distinct values only).

    As a function of x this is the piecewise-polynomial distribution function
    of the functional under the uniform law on the simplex; at x = 0 it is
    ``slice_ratio_distinct``.
    """
    vals = _as_values(values)
    _require_dimension(len(vals) - 1)
    if len(set(vals)) != len(vals):
        raise DomainError("values repeat; shift and group instead")
    x = Fraction(x)
    total = Fraction(0)
    for k, qk in enumerate(vals):
        if qk >= x:
            continue
        term = Fraction(1)
        for j, qj in enumerate(vals):
            if j != k:
                term *= (qk - x) / (qk - qj)
        total += term
    return total


def _confluent_factor(grouped: GroupedValues, i: int) -> Fraction:
    """Correction factor F_i of one group, a sum over weak compositions.

    Simple groups (multiplicity 1) give exactly 1.  The factor is homogeneous
    of degree zero in the values, matching the scale invariance of a volume
    fraction.
    """
    mult = grouped.multiplicities
    k_i = mult[i] - 1
    if k_i == 0:
        return Fraction(1)
    values = grouped.distinct
    n = grouped.ambient_dim
    q_i = values[i]
    groups = len(values)
    acc = Fraction(0)
    for delta in weak_compositions(groups, k_i):
        term = Fraction(math.comb(n, delta[i])) * (-q_i) ** (k_i - delta[i])
        for j, q_j in enumerate(values):
            if j == i or delta[j] == 0:
                continue
            k_j = mult[j] - 1
            term *= Fraction(math.comb(k_j + delta[j], delta[j])) * (q_i - q_j) ** (-delta[j])
        acc += term
    return acc


def _negative_side_sum(grouped: GroupedValues) -> Fraction:
    total = Fraction(0)
    for i, q_i in enumerate(grouped.distinct):
        if q_i >= 0:
            continue
        product = Fraction(1)
        for j, q_j in enumerate(grouped.distinct):
            if j != i:
                product *= (q_i / (q_i - q_j)) ** grouped.multiplicities[j]
        total += _confluent_factor(grouped, i) * product
    return total


def slice_ratio_confluent(grouped: GroupedValues) -> Fraction:
    """Negative-side volume fraction with repeated vertex values allowed."""
    _require_dimension(grouped.ambient_dim)
    return _negative_side_sum(grouped)


@functools.lru_cache(maxsize=65536)
def _cached_ratio(distinct: tuple[Fraction, ...], mults: tuple[int, ...]) -> Fraction:
    grouped = GroupedValues(distinct, mults)
    negatives = sum(1 for v in grouped.distinct if v < 0)
    positives = sum(1 for v in grouped.distinct if v > 0)
    if negatives == 0:
        return Fraction(0)
    if positives == 0:
        return Fraction(1)
    if negatives <= positives:
        return _negative_side_sum(grouped)
    return 1 - _negative_side_sum(grouped.negated())

# Zero vertex values sit on the cut itself and carry no volume, so "all values
# >= 0" still means the negative side is empty and "all <= 0" means it is
# everything; the dispatcher above relies on that.


def slice_ratio(values: "VertexValues | GroupedValues | Iterable[Fraction]") -> Fraction:
    """Negative-side volume fraction for arbitrary vertex values.

    Groups the values, then evaluates the closed form on whichever side of
    the cut has fewer distinct values, complementing if needed; both routes
    agree exactly, this just keeps the composition sums small.
    """
    grouped = values if isinstance(values, GroupedValues) else group_values(values)
    _require_dimension(grouped.ambient_dim)
    return _cached_ratio(grouped.distinct, grouped.multiplicities)
