"""Exact Betti numbers of planar linkage moduli spaces.

A closed planar chain of n bars with lengths l_1, ..., l_n has a moduli space
of closed configurations modulo orientation-preserving isometry.  For n >= 3
its Betti numbers are determined combinatorially.  Fix an anchor index
carrying a maximal length; call a subset J of bar indices *short* when the
bars in J sum to less than the bars outside J, *median* when the two sums tie,
and *long* otherwise.  With

    a_k = number of short subsets containing the anchor, of size k + 1,
    m_k = number of median subsets containing the anchor, of size k + 1,

the p-th Betti number of the moduli space is

    b_p = a_p + m_p + a_{n-3-p},        0 <= p <= n - 3.

Everything in this module is exact: lengths are arbitrary-precision rationals
and all comparisons clear denominators before comparing integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "LengthVector",
    "IndexSubset",
    "BettiProfile",
    "max_length_index",
    "is_generic",
    "count_short",
    "count_median",
    "betti",
    "betti_profile",
    "equilateral_reference",
]


@dataclass(frozen=True)
class LengthVector:
    """Positive bar lengths held exactly as rationals."""

    lengths: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.lengths:
            raise DomainError("a length vector needs at least one bar")
        if any(not isinstance(l, Fraction) for l in self.lengths):
            raise TypeError("lengths must be Fractions; use LengthVector.of")
        if any(l <= 0 for l in self.lengths):
            raise DomainError("bar lengths must be positive")

    @classmethod
    def of(cls, *lengths: Fraction | int | str) -> "LengthVector":
        """Build from ints, exact decimal/ratio strings, or Fractions.

        Floats are rejected on purpose: their binary expansions would leak
        rounding into an otherwise exact pipeline.  Pass "0.3" or
        Fraction(3, 10) instead of 0.3.
        """
        converted = []
        for l in lengths:
            if isinstance(l, float):
                raise TypeError("floats are not exact; pass a string or Fraction")
            converted.append(Fraction(l))
        return cls(tuple(converted))

    @property
    def n(self) -> int:
        return len(self.lengths)

    def total(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    def scaled_integers(self) -> tuple[int, ...]:
        """The lengths rescaled by the denominator lcm, as plain integers.

        Rescaling preserves every short/median/long classification, so all
        comparisons downstream run on integers.
        """
        common = math.lcm(*(l.denominator for l in self.lengths))
        return tuple(int(l * common) for l in self.lengths)

    def scaled(self, factor: Fraction | int) -> "LengthVector":
        factor = Fraction(factor)
        if factor <= 0:
            raise DomainError("scaling factor must be positive")
        return LengthVector(tuple(l * factor for l in self.lengths))


@dataclass(frozen=True)
class IndexSubset:
    """A subset of the 1-based bar index set {1, ..., n}."""

    members: frozenset[int]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("ambient size must be nonnegative")
        if any(not (1 <= i <= self.n) for i in self.members):
            raise DomainError(f"members must lie in 1..{self.n}")

    @classmethod
    def of(cls, members: Iterable[int], n: int) -> "IndexSubset":
        return cls(frozenset(members), n)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def complement(self) -> "IndexSubset":
        return IndexSubset(frozenset(range(1, self.n + 1)) - self.members, self.n)


@dataclass(frozen=True)
class BettiProfile:
    """The full Betti vector of one moduli space plus its counting data.

    ``values[p]`` is b_p for p = 0..n-3.  ``short_counts[k]`` and
    ``median_counts[k]`` hold a_k and m_k for k = 0..n-3, so the profile can
    be rebuilt from the counts alone: values[p] == short_counts[p]
    + median_counts[p] + short_counts[n-3-p].
    """

    n: int
    anchor: int
    values: tuple[int, ...]
    short_counts: tuple[int, ...]
    median_counts: tuple[int, ...]

    def total_rank(self) -> int:
        return sum(self.values)

    def is_empty_space(self) -> bool:
        """True when the moduli space has no points (anchor bar is long)."""
        return all(v == 0 for v in self.values)


def max_length_index(ell: LengthVector) -> int:
    """1-based index of a maximal length, smallest index on ties."""
    best = 0
    for i in range(1, ell.n):
        if ell.lengths[i] > ell.lengths[best]:
            best = i
    return best + 1


def is_generic(ell: LengthVector) -> bool:
    """True when no signed sum +-l_1 +- l_2 ... +- l_n vanishes.

    Equivalently, no subset of bars weighs exactly half the total.  Decided
    exactly via meet-in-the-middle over the integer rescale, so vectors up to
    roughly n = 40 stay fast.
    """
    weights = ell.scaled_integers()
    total = sum(weights)
    if total % 2:
        return True
    target = total // 2
    half = len(weights) // 2
    lo_sums = {0}
    for w in weights[:half]:
        lo_sums |= {s + w for s in lo_sums}
    hi_sums = {0}
    for w in weights[half:]:
        hi_sums |= {s + w for s in hi_sums}
    return all(target - s not in lo_sums for s in hi_sums)


def _check_anchored_args(ell: LengthVector, cardinality: int, anchor: int) -> None:
    if not 0 <= cardinality <= ell.n:
        raise DomainError(f"cardinality {cardinality} outside 0..{ell.n}")
    if not 1 <= anchor <= ell.n:
        raise DomainError(f"anchor {anchor} outside 1..{ell.n}")


def _count_anchored(ell: LengthVector, cardinality: int, anchor: int, *, median: bool) -> int:
    _check_anchored_args(ell, cardinality, anchor)
    if cardinality == 0:
        return 0
    weights = ell.scaled_integers()
    total = sum(weights)
    base = weights[anchor - 1]
    rest = [w for i, w in enumerate(weights) if i != anchor - 1]
    count = 0
    for combo in itertools.combinations(rest, cardinality - 1):
        doubled = 2 * (base + sum(combo))
        if (doubled == total) if median else (doubled < total):
            count += 1
    return count


def count_short(ell: LengthVector, cardinality: int, anchor: int) -> int:
    """Number of short subsets of the given size containing the anchor."""
    return _count_anchored(ell, cardinality, anchor, median=False)


def count_median(ell: LengthVector, cardinality: int, anchor: int) -> int:
    """Number of median subsets of the given size containing the anchor."""
    return _count_anchored(ell, cardinality, anchor, median=True)


def _check_degree(n: int, p: int) -> None:
    if n < 3:
        raise DomainError("moduli space topology needs at least 3 bars")
    if not 0 <= p <= n - 3:
        raise DomainError(f"degree {p} outside 0..{n - 3}")


def betti(ell: LengthVector, p: int) -> int:
    """The p-th Betti number of the moduli space of ``ell``."""
    _check_degree(ell.n, p)
    anchor = max_length_index(ell)
    return (
        count_short(ell, p + 1, anchor)
        + count_median(ell, p + 1, anchor)
        + count_short(ell, ell.n - 2 - p, anchor)
    )


def _anchored_class_counts(ell: LengthVector, anchor: int) -> tuple[list[int], list[int]]:
    """Short and median subset counts through ``anchor``, bucketed by size.

    One Gray-code walk over the 2^(n-1) subsets of the non-anchor indices;
    each step flips a single membership bit, so the running sum updates in
    O(1).  Returns (short, median) with index = subset size.
    """
    weights = ell.scaled_integers()
    n = len(weights)
    total = sum(weights)
    rest = [w for i, w in enumerate(weights) if i != anchor - 1]
    k = n - 1
    short = [0] * (n + 1)
    median = [0] * (n + 1)

    current = weights[anchor - 1]
    size = 1
    doubled = 2 * current
    if doubled < total:
        short[size] += 1
    elif doubled == total:
        median[size] += 1

    in_set = [False] * k
    for m in range(1, 1 << k):
        bit = (m & -m).bit_length() - 1
        if in_set[bit]:
            current -= rest[bit]
            size -= 1
        else:
            current += rest[bit]
            size += 1
        in_set[bit] = not in_set[bit]
        doubled = 2 * current
        if doubled < total:
            short[size] += 1
        elif doubled == total:
            median[size] += 1
    return short, median


def betti_profile(ell: LengthVector) -> BettiProfile:
    """All Betti numbers of the moduli space in one subset sweep."""
    n = ell.n
    _check_degree(n, 0)
    anchor = max_length_index(ell)
    short, median = _anchored_class_counts(ell, anchor)
    short_counts = tuple(short[p + 1] for p in range(n - 2))
    median_counts = tuple(median[p + 1] for p in range(n - 2))
    values = tuple(
        short_counts[p] + median_counts[p] + short_counts[n - 3 - p]
        for p in range(n - 2)
    )
    return BettiProfile(
        n=n,
        anchor=anchor,
        values=values,
        short_counts=short_counts,
        median_counts=median_counts,
    )


def equilateral_reference(n: int, p: int) -> int:
    """Betti number of the equilateral n-gon space in low degree.

    Valid for 2p < n - 3, where the value is the binomial coefficient
    C(n-1, p); outside that range the equilateral value differs from the
    binomial and this reference refuses to answer.
    """
    _check_degree(n, p)
    if 2 * p >= n - 3:
        raise DomainError(f"closed form needs 2p < n - 3; got p={p}, n={n}")
    return math.comb(n - 1, p)
