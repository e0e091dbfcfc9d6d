"""Exact rational geometry primitives.

Coordinates are `fractions.Fraction` throughout: arbitrary precision, always
normalized to lowest terms with a positive denominator, so equality is
structural.  Every predicate below decides with exact integer arithmetic on
cross products; there is no floating point anywhere on a decision path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


def point(x: RationalLike, y: RationalLike) -> Point2:
    """Build a Point2, coercing ints to Fractions."""
    return Point2(Fraction(x), Fraction(y))


class CollinearTripleError(ValueError):
    """A degenerate (collinear) triple reached a predicate that forbids it."""

    def __init__(self, pts):
        self.points = tuple(pts)
        super().__init__(f"collinear points: {self.points}")


@dataclass(frozen=True)
class Drawing:
    """An ordered set of exact points; the vertices of a rectilinear K_n.

    The class itself does not enforce general position (that would make
    construction quadratic-to-cubic); call validate_general_position to
    check the invariant explicitly.  Equality compares points only, so a
    drawing round-trips through the file format identically; the label is
    a human tag naming the generating strategy.
    """

    points: tuple[Point2, ...]
    label: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    @staticmethod
    def from_pairs(pairs, label: str = "") -> "Drawing":
        return Drawing(tuple(point(x, y) for x, y in pairs), label)


@dataclass(frozen=True)
class Violation:
    """General-position violation: a duplicate pair or a collinear triple."""

    kind: str  # "duplicate" | "collinear"
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} at vertices {self.indices}"


def orientation(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the cross product (b-a) x (c-a).

    +1 for a counter-clockwise turn, -1 for clockwise, 0 for collinear.
    """
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def _check_triples(pts) -> None:
    # Degenerate triples among *distinct* points are errors; triples that
    # repeat a point (shared segment endpoints) are legitimate.
    m = len(pts)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                a, b, c = pts[i], pts[j], pts[k]
                if a == b or a == c or b == c:
                    continue
                if orientation(a, b, c) == 0:
                    raise CollinearTripleError((a, b, c))


def segments_properly_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool:
    """True iff the open segments (p1,p2) and (q1,q2) cross in one interior point.

    Segments sharing an endpoint never count as crossing.  Raises
    CollinearTripleError if any three distinct input points are collinear,
    since that violates the general-position model.
    """
    if p1 == p2 or q1 == q2:
        raise ValueError("zero-length segment")
    _check_triples((p1, p2, q1, q2))
    if (
        orientation(p1, p2, q1) * orientation(p1, p2, q2) < 0
        and orientation(q1, q2, p1) * orientation(q1, q2, p2) < 0
    ):
        return True
    return False


def in_convex_position(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """True iff the four points are the corners of a convex quadrilateral.

    Equivalently, none of the points lies inside the triangle of the other
    three.  With s1..s4 the four leave-one-out orientation signs, the quad
    is convex exactly when an even number of them are positive.
    """
    if len({a, b, c, d}) != 4:
        raise ValueError("points must be pairwise distinct")
    _check_triples((a, b, c, d))
    s1 = orientation(b, c, d)
    s2 = orientation(a, c, d)
    s3 = orientation(a, b, d)
    s4 = orientation(a, b, c)
    return ((s1 > 0) + (s2 > 0) + (s3 > 0) + (s4 > 0)) % 2 == 0


def validate_general_position(d: Drawing) -> Optional[Violation]:
    """None if all points are distinct and no three are collinear.

    Otherwise returns the first violation in index order.  The triple scan
    runs on integer-rescaled coordinates (per-axis lcm of denominators, an
    orientation-preserving positive scaling) to keep the O(n^3) loop cheap.
    """
    pts = d.points
    seen: dict[Point2, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            return Violation("duplicate", (seen[p], i))
        seen[p] = i
    m = len(pts)
    if m < 3:
        return None
    lx = math.lcm(*(p.x.denominator for p in pts))
    ly = math.lcm(*(p.y.denominator for p in pts))
    ipts = [
        (p.x.numerator * (lx // p.x.denominator), p.y.numerator * (ly // p.y.denominator))
        for p in pts
    ]
    for i in range(m):
        ax, ay = ipts[i]
        for j in range(i + 1, m):
            bx, by = ipts[j]
            ux = bx - ax
            uy = by - ay
            for k in range(j + 1, m):
                cx, cy = ipts[k]
                if ux * (cy - ay) == uy * (cx - ax):
                    return Violation("collinear", (i, j, k))
    return None
