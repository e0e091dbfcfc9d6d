"""Exact crossing counting for complete-graph drawings.

Two independent counting routes are kept deliberately:

* pairs: enumerate unordered pairs of vertex-disjoint edges and test each
  pair for a proper segment crossing;
* quads: enumerate 4-subsets of vertices and count those in convex
  position (each convex quadruple contributes exactly one crossing).

Counts are plain Python ints (arbitrary precision).  Before counting, the
drawing is rescaled per axis by the lcm of coordinate denominators; that is
an anisotropic positive scaling, which preserves every orientation sign, so
the hot loops run on exact integers only.

Counting is embarrassingly parallel: the index space is split into static
contiguous ranges, one per worker, and the partial sums are added.  The
result is identical for every worker count.
"""

from __future__ import annotations

import math
from multiprocessing import get_context
from typing import Literal, Sequence

from .exactgeom import Drawing, validate_general_position

Method = Literal["pairs", "quads"]


class GeneralPositionError(ValueError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"drawing is not in general position: {violation}")


def _int_coords(d: Drawing) -> list[tuple[int, int]]:
    """Clear denominators axis by axis (a count-preserving positive scaling)."""
    lx = math.lcm(*(p.x.denominator for p in d.points))
    ly = math.lcm(*(p.y.denominator for p in d.points))
    return [
        (p.x.numerator * (lx // p.x.denominator), p.y.numerator * (ly // p.y.denominator))
        for p in d.points
    ]


def _require_general_position(d: Drawing) -> None:
    v = validate_general_position(d)
    if v is not None:
        raise GeneralPositionError(v)


# ---------------------------------------------------------------------------
# kernels (pure integer arithmetic, inlined for speed)
# ---------------------------------------------------------------------------


def _edge_list(pts: Sequence[tuple[int, int]]) -> list[tuple[int, int, int, int, int, int]]:
    n = len(pts)
    edges = []
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            xj, yj = pts[j]
            edges.append((i, j, xi, yi, xj - xi, yj - yi))
    return edges


def _pairs_kernel(args) -> int:
    edges, lo, hi = args
    total = 0
    m = len(edges)
    for e1 in range(lo, hi):
        i, j, ax, ay, ux, uy = edges[e1]
        for e2 in range(e1 + 1, m):
            k, l, cx, cy, vx, vy = edges[e2]
            if k == i or k == j or l == i or l == j:
                continue
            # orient(a,b,c) * orient(a,b,d) < 0, with b-a = (ux,uy)
            dx = cx - ax
            dy = cy - ay
            o1 = ux * dy - uy * dx
            o2 = ux * (dy + vy) - uy * (dx + vx)
            if (o1 > 0) == (o2 > 0) or o1 == 0 or o2 == 0:
                continue
            o3 = vx * -dy - vy * -dx
            o4 = vx * (ay + uy - cy) - vy * (ax + ux - cx)
            if o3 == 0 or o4 == 0 or (o3 > 0) == (o4 > 0):
                continue
            total += 1
    return total


def _quads_kernel(args) -> int:
    pts, lo, hi = args
    total = 0
    n = len(pts)
    for i in range(lo, hi):
        ax, ay = pts[i]
        for j in range(i + 1, n):
            bx, by = pts[j]
            abx = bx - ax
            aby = by - ay
            for k in range(j + 1, n):
                cx, cy = pts[k]
                acx = cx - ax
                acy = cy - ay
                s4 = abx * acy - aby * acx  # orient(a,b,c)
                bcx = cx - bx
                bcy = cy - by
                for l in range(k + 1, n):
                    dx_, dy_ = pts[l]
                    adx = dx_ - ax
                    ady = dy_ - ay
                    s1 = bcx * (dy_ - by) - bcy * (dx_ - bx)  # orient(b,c,d)
                    s2 = acx * ady - acy * adx  # orient(a,c,d)
                    s3 = abx * ady - aby * adx  # orient(a,b,d)
                    if ((s1 > 0) + (s2 > 0) + (s3 > 0) + (s4 > 0)) % 2 == 0:
                        total += 1
    return total


def _balanced_ranges(weights: list[int], jobs: int) -> list[tuple[int, int]]:
    """Split range(len(weights)) into <= jobs contiguous chunks of similar weight."""
    total = sum(weights)
    if total == 0 or jobs <= 1:
        return [(0, len(weights))]
    target = total / jobs
    ranges = []
    lo = 0
    acc = 0
    for i, w in enumerate(weights):
        acc += w
        if acc >= target and len(ranges) < jobs - 1:
            ranges.append((lo, i + 1))
            lo = i + 1
            acc = 0
    ranges.append((lo, len(weights)))
    return [r for r in ranges if r[0] < r[1]]


def _run(kernel, payload, weights, jobs: int) -> int:
    ranges = _balanced_ranges(weights, jobs)
    if len(ranges) == 1:
        return kernel((payload, 0, len(weights)))
    try:
        ctx = get_context("fork")
    except ValueError:  # platforms without fork; kernels pickle fine
        ctx = get_context("spawn")
    with ctx.Pool(processes=len(ranges)) as pool:
        parts = pool.map(kernel, [(payload, lo, hi) for lo, hi in ranges])
    return sum(parts)


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def count_crossings_pairs(d: Drawing, jobs: int = 1) -> int:
    """Number of unordered pairs of vertex-disjoint edges that properly cross."""
    _require_general_position(d)
    if d.n < 4:
        return 0
    edges = _edge_list(_int_coords(d))
    m = len(edges)
    weights = [m - 1 - e for e in range(m)]
    return _run(_pairs_kernel, edges, weights, jobs)


def count_crossings_quads(d: Drawing, jobs: int = 1) -> int:
    """Number of 4-subsets of vertices in convex position."""
    _require_general_position(d)
    n = d.n
    if n < 4:
        return 0
    pts = _int_coords(d)
    weights = [math.comb(n - 1 - i, 3) for i in range(n)]
    return _run(_quads_kernel, pts, weights, jobs)


def count_crossings(d: Drawing, method: Method = "pairs", jobs: int = 1) -> int:
    """Exact crossing count of the complete-graph drawing d.

    The two methods agree on every general-position drawing; jobs only
    partitions the work and never changes the result.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if method == "pairs":
        return count_crossings_pairs(d, jobs)
    if method == "quads":
        return count_crossings_quads(d, jobs)
    raise ValueError(f"unknown method: {method!r}")
