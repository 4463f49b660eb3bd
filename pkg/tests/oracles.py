"""Independent oracles the test suite checks the library against.

Nothing in this module calls the closed-form machinery under test.  The
slice oracles integrate geometrically (exact polygon clipping in 2D, direct
interval arithmetic in 1D); the Betti oracle re-derives subset counts by the
most naive enumeration possible.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]


def _shoelace_area(polygon: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    m = len(polygon)
    for i in range(m):
        x1, y1 = polygon[i]
        x2, y2 = polygon[(i + 1) % m]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def _clip_negative(polygon: list[Point], f) -> list[Point]:
    """Sutherland-Hodgman clip of a convex polygon to {f < 0}, exactly."""
    out: list[Point] = []
    m = len(polygon)
    for i in range(m):
        cur, nxt = polygon[i], polygon[(i + 1) % m]
        fc, fn = f(cur), f(nxt)
        if fc <= 0:
            out.append(cur)
        if (fc < 0 < fn) or (fn < 0 < fc):
            t = fc / (fc - fn)
            out.append(
                (cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1]))
            )
    return out


def triangle_negative_fraction(q0: Fraction, q1: Fraction, q2: Fraction) -> Fraction:
    """Area fraction of a triangle where the linear interpolant of the three
    vertex values is negative.  Affine invariance lets us fix the reference
    triangle (0,0), (1,0), (0,1)."""
    q0, q1, q2 = Fraction(q0), Fraction(q1), Fraction(q2)

    def f(pt: Point) -> Fraction:
        return q0 + (q1 - q0) * pt[0] + (q2 - q0) * pt[1]

    reference: list[Point] = [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
    ]
    clipped = _clip_negative(reference, f)
    if len(clipped) < 3:
        return Fraction(0)
    return _shoelace_area(clipped) / Fraction(1, 2)


def segment_negative_fraction(q0: Fraction, q1: Fraction) -> Fraction:
    """Length fraction of a segment where the linear interpolant is negative."""
    q0, q1 = Fraction(q0), Fraction(q1)
    if q0 >= 0 and q1 >= 0:
        return Fraction(0)
    if q0 <= 0 and q1 <= 0:
        return Fraction(1) if (q0 < 0 or q1 < 0) else Fraction(0)
    root = q0 / (q0 - q1)
    return root if q0 < 0 else 1 - root


def brute_betti(lengths: Sequence[Fraction], p: int) -> int:
    """Anchored subset counting done the slow, obviously-correct way.

    Enumerates every subset of every relevant size and filters, with no
    shared code or shortcuts; anchor is the first index of maximal length.
    """
    n = len(lengths)
    total = sum(lengths)
    anchor = max(range(n), key=lambda i: (lengths[i], -i))

    def count(cardinality: int, median: bool) -> int:
        hits = 0
        for subset in itertools.combinations(range(n), cardinality):
            if anchor not in subset:
                continue
            doubled = 2 * sum(lengths[i] for i in subset)
            if (doubled == total) if median else (doubled < total):
                hits += 1
        return hits

    return count(p + 1, False) + count(p + 1, True) + count(n - 2 - p, False)


def brute_profile(lengths: Sequence[Fraction]) -> tuple[int, ...]:
    n = len(lengths)
    return tuple(brute_betti(lengths, p) for p in range(n - 2))
