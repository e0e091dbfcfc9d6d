"""Exact-coordinate generators for the recursive drawing strategies.

All strategies except ``convex`` share one assembly engine: three *arms*
along fixed integer directions, each arm holding a flattened copy of a
recursively built sub-drawing.  The arm axes pairwise separate the other
two arms, so every bundle of edges between two arms docks on a definite
side of each, which is exactly the situation the counting formulas price.

Two arm orientations are used:

* recursive mode: each arm shows its cheap ("top") side to the upward
  direction, so a vertex far above the whole cluster reaches every arm
  through its top profile.  This keeps the one-sided access counts of the
  assembled cluster on the published recurrences at every depth.
* cyclic mode (the slid top level): each arm shows its top side to the
  next arm around, so every arm docks cheaply at one neighbour and
  expensively at the other, and sliding it along its own axis past that
  neighbour's axis line moves b = k - a of its vertices to the cheap side.

Coordinates are dyadic rationals built from integer direction vectors and
power-of-two flattening factors, so exact integer-scaled counting stays
fast.  "Sufficiently flat" is made constructive by a validation loop:
build, count exactly, compare with the predicted formula value, and retry
with a smaller flattening factor on mismatch.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence

from . import drawingio
from .counter import count_crossings
from .exactgeom import Drawing, Point2, point, validate_general_position
from .formulas import (
    BASE_CROSSINGS,
    StrategyId,
    THIRDS_ABOVE,
    c3g,
    c_recurrence,
    closed_form,
    thirds_parts,
)

# Canonical content lives in the box |x|,|y| <= CANON_BOUND.
CANON_BOUND = 16

# Arm directions: L points down-left, M up, R down-right.  Each direction's
# axis line separates the other two arms, and the x-extents of the three
# arms are disjoint with M in the middle, which makes the flattened cluster
# "point upwards" (its middle third raised).
ARM_DIRS = ((-5, -1), (2, 5), (5, -1))
ARM_PERPS = tuple((-wy, wx) for wx, wy in ARM_DIRS)

# Cyclic docking table used by the slid top level: CYCLIC_ABOVE[x] is the
# arm docking on arm x's top side.  A slid arm crosses the axis line of the
# arm where it currently docks on the bottom side.
CYCLIC_ABOVE = (2, 0, 1)
SLIDE_TARGET = (2, 0, 1)  # arm i slides across the line of arm SLIDE_TARGET[i]
SLIDE_ORDER = (1, 2, 0)  # which arms move for the 1-, 2-, 3-arm variants

_RECURSIVE_Q = Fraction(1)
_SLIDE_Q = Fraction(64)
_SLIDE_ETA = Fraction(-1, 2)


class Strategy(enum.Enum):
    CONVEX = "convex"
    SINGER = "singer"
    THIRDS = "thirds"
    BASE_A = "base"
    MAX_ASYM = "maxasym"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"


_SLIDE_VARIANTS = {Strategy.S1: 1, Strategy.S2: 2, Strategy.S3: 3}
_SLIDE_FORMS = {Strategy.S1: StrategyId.CS1, Strategy.S2: StrategyId.CS2, Strategy.S3: StrategyId.CS3}


@dataclass(frozen=True)
class FlattenParams:
    epsilon: Fraction

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")


@dataclass(frozen=True)
class ConstructionSpec:
    strategy: Strategy
    n: int
    a: Optional[int] = None
    epsilon_schedule: Fraction = Fraction(1, 64)

    def validate(self) -> None:
        s, n, a = self.strategy, self.n, self.a
        if not (0 < self.epsilon_schedule < 1):
            raise InvalidSpecError("epsilon_schedule must be in (0, 1)")
        if s in (Strategy.CONVEX, Strategy.SINGER, Strategy.THIRDS) and a is not None:
            raise InvalidSpecError(f"{s.value} takes no slide amount")
        if s is Strategy.CONVEX:
            if n < 3:
                raise InvalidSpecError("convex needs n >= 3")
        elif s is Strategy.SINGER:
            _power_index(n, 3, "singer")
        elif s is Strategy.THIRDS:
            if n < 3:
                raise InvalidSpecError("thirds needs n >= 3")
        elif s is Strategy.BASE_A:
            if a not in (4, 5, 7, 9):
                raise InvalidSpecError("base template order must be 4, 5, 7 or 9")
            _power_index(n, a, "base")
        elif s is Strategy.MAX_ASYM:
            if n < 3 or n % 3:
                raise InvalidSpecError("maxasym needs n divisible by 3")
            _check_slide_amount(a, n)
        elif s in _SLIDE_VARIANTS:
            _power_index(n, 3, "slide")
            _check_slide_amount(a, n)
        else:  # pragma: no cover
            raise InvalidSpecError(f"unknown strategy {s}")


class InvalidSpecError(ValueError):
    pass


class ConstructionError(RuntimeError):
    """The validation loop exhausted its flattening schedule."""

    def __init__(self, spec: ConstructionSpec, achieved, expected):
        self.spec = spec
        self.achieved = achieved
        self.expected = expected
        super().__init__(
            f"{spec.strategy.value} n={spec.n} a={spec.a}: achieved {achieved}, expected {expected}"
        )


def _power_index(n: int, a: int, what: str) -> int:
    j = 0
    m = n
    while m > 1 and m % a == 0:
        m //= a
        j += 1
    if m != 1 or j < 1:
        raise InvalidSpecError(f"{what} needs n = {a}^j, got n={n}")
    return j


def _check_slide_amount(a, n) -> None:
    if a is None:
        raise InvalidSpecError("this strategy needs a slide amount a")
    if not 0 <= a <= n // 3:
        raise InvalidSpecError(f"slide amount must satisfy 0 <= a <= n/3, got a={a}")


# ---------------------------------------------------------------------------
# arm assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arm:
    """Top-level arm of an assembled drawing: vertex slice and axis line."""

    start: int
    stop: int
    origin: Point2
    direction: tuple[int, int]

    def side_of_axis(self, p: Point2) -> int:
        wx, wy = self.direction
        d = wx * (p.y - self.origin.y) - wy * (p.x - self.origin.x)
        return (d > 0) - (d < 0)


def _cross(v: tuple[int, int], w: tuple[int, int]) -> int:
    return v[0] * w[1] - v[1] * w[0]


def _arm_up_signs(above: Sequence[int], q: Fraction, eta: Fraction) -> list[int]:
    """Orientation sign per arm: +1 keeps the arm's own top side on the +perp
    side of its axis, -1 mirrors it, chosen so the top side faces the arm
    listed in the docking table."""
    signs = []
    centers = []
    for i in range(3):
        ox = eta * ARM_PERPS[i][0]
        oy = eta * ARM_PERPS[i][1]
        cx = ox + (q + Fraction(1, 2)) * ARM_DIRS[i][0]
        cy = oy + (q + Fraction(1, 2)) * ARM_DIRS[i][1]
        centers.append((cx, cy))
    for i in range(3):
        j = above[i]
        ox = eta * ARM_PERPS[i][0]
        oy = eta * ARM_PERPS[i][1]
        wx, wy = ARM_DIRS[i]
        side = wx * (centers[j][1] - oy) - wy * (centers[j][0] - ox)
        assert side != 0, "arm centers must be off each other's axis lines"
        signs.append(1 if side > 0 else -1)
    return signs


def _line_crossing(i: int, t: int, eta: Fraction) -> Fraction:
    """Axis parameter on arm i's line where arm t's line crosses it."""
    wi, wt = ARM_DIRS[i], ARM_DIRS[t]
    oi = (eta * ARM_PERPS[i][0], eta * ARM_PERPS[i][1])
    ot = (eta * ARM_PERPS[t][0], eta * ARM_PERPS[t][1])
    num = wt[0] * (ot[1] - oi[1]) - wt[1] * (ot[0] - oi[0])
    return num / _cross(wt, wi)


def _assemble(
    children: Sequence[Sequence[Point2]],
    *,
    above: Sequence[int],
    sigma: Fraction,
    q: Fraction,
    eta: Fraction,
    slides: Optional[dict[int, int]] = None,
) -> tuple[list[Point2], list[Arm]]:
    """Place three canonical children on the three arms.

    Children are mapped into an axis interval of length 1 starting at q and
    squashed to height sigma, then carried onto their arm's axis line.  For
    a slid arm, the whole arm is translated along its own axis so that
    exactly b = k - a of its vertices pass the target arm's axis line while
    none reach the third arm's line.
    """
    up = _arm_up_signs(above, q, eta)
    pts: list[Point2] = []
    arms: list[Arm] = []
    two_cb = 2 * CANON_BOUND
    for i in range(3):
        wx, wy = ARM_DIRS[i]
        bx = up[i] * ARM_PERPS[i][0]
        by = up[i] * ARM_PERPS[i][1]
        ox = eta * ARM_PERPS[i][0]
        oy = eta * ARM_PERPS[i][1]
        axis_coords = []
        arm_pts = []
        for p in children[i]:
            xa = q + Fraction(p.x + CANON_BOUND, two_cb)
            ya = sigma * p.y / CANON_BOUND
            arm_pts.append(Point2(ox + xa * wx + ya * bx, oy + xa * wy + ya * by))
            axis_coords.append(xa)
        if slides and i in slides:
            k = len(arm_pts)
            b = k - slides[i]
            if b > 0:
                t_cut = _line_crossing(i, SLIDE_TARGET[i], eta)
                t_far = _line_crossing(i, 3 - i - SLIDE_TARGET[i], eta)
                srt = sorted(axis_coords)
                if b < k:
                    d = (srt[b - 1] + srt[b]) / 2 - t_cut
                else:
                    gap = (srt[-1] - srt[0]) / (2 * k) if k > 1 else Fraction(1, 4)
                    d = srt[-1] - t_cut + gap
                lo = srt[0] - d
                if not t_far < lo:
                    raise ArithmeticError("slid arm would cross both axis lines")
                arm_pts = [Point2(p.x - d * wx, p.y - d * wy) for p in arm_pts]
        start = len(pts)
        pts.extend(arm_pts)
        arms.append(Arm(start, len(pts), point(ox, oy), (wx, wy)))
    return pts, arms


# ---------------------------------------------------------------------------
# canonical contents
# ---------------------------------------------------------------------------


def _content_point() -> list[Point2]:
    return [point(0, 0)]


def _content_pair() -> list[Point2]:
    return [point(-8, -1), point(8, 1)]


def _thirds_content(n: int, sigma: Fraction) -> list[Point2]:
    """Canonical recursive thirds cluster (the Singer cluster at n = 3^j)."""
    if n == 1:
        return _content_point()
    if n == 2:
        return _content_pair()
    parts = thirds_parts(n)
    children = [_thirds_content(p, sigma) for p in parts]
    pts, _ = _assemble(children, above=THIRDS_ABOVE, sigma=sigma, q=_RECURSIVE_Q, eta=Fraction(0))
    assert all(max(abs(p.x), abs(p.y)) <= CANON_BOUND for p in pts)
    return pts


def _arc_content(k: int) -> list[Point2]:
    """Convex cluster on a downward-curving arc: chords pass below vertices,
    so the cheap docking side is above, matching the recursive clusters."""
    if k == 1:
        return _content_point()
    if k == 2:
        return _content_pair()
    xs = [2 * i - (k - 1) for i in range(k)]
    sx = Fraction(12, k - 1)
    sy = Fraction(12, (k - 1) ** 2)
    return [point(Fraction(t) * sx, -Fraction(t * t) * sy) for t in xs]


# ---------------------------------------------------------------------------
# template-based recursion (base_a)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def load_template(a: int) -> Drawing:
    """Bundled optimal K_a drawing; its crossing count is verified at load.

    Template x-coordinates are pairwise distinct: the assembly below uses a
    child's x as its position along the flattening axis, so a repeated x
    would stack two sub-clusters at one axis position.
    """
    if a not in (4, 5, 7, 9):
        raise InvalidSpecError(f"no template for a={a}")
    ref = resources.files("rcnlab").joinpath(f"templates/k{a}.drawing")
    d = drawingio.parse_drawing(ref.read_text(encoding="ascii"), label=f"k{a}-template")
    got = count_crossings(d, "quads")
    if got != BASE_CROSSINGS[a]:
        raise ConstructionError(
            ConstructionSpec(Strategy.BASE_A, a, a), got, BASE_CROSSINGS[a]
        )
    xs = {p.x for p in d.points}
    if len(xs) != d.n:
        raise ConstructionError(ConstructionSpec(Strategy.BASE_A, a, a), got, BASE_CROSSINGS[a])
    return d


def _reduced_int_vector(x: Fraction, y: Fraction) -> tuple[int, int]:
    m = math.lcm(x.denominator, y.denominator)
    ix = x.numerator * (m // x.denominator)
    iy = y.numerator * (m // y.denominator)
    g = math.gcd(ix, iy)
    return (ix // g, iy // g) if g else (ix, iy)


def _halving_direction(tpl: Sequence[Point2], i: int) -> tuple[tuple[int, int], int]:
    """Axis direction through vertex i splitting the others most evenly.

    Sweep construction: sort the directions to the other vertices together
    with their negations; any strictly positive combination of two
    angularly consecutive directions defines a line incident to no vertex,
    and one of those gaps realizes the floor/ceil split.  Candidates with a
    zero x-component are rejected (the parent squash would collapse a
    vertically placed cluster), and among valid gaps the one with the
    largest angular clearance from all vertices wins.

    Returns the direction and the sign of its heavier side (+1 for the
    counter-clockwise side).
    """
    v = tpl[i]
    rel = [(p.x - v.x, p.y - v.y) for j, p in enumerate(tpl) if j != i]
    events = rel + [(-dx, -dy) for dx, dy in rel]

    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    def cmp(d1, d2):
        h1, h2 = half(d1), half(d2)
        if h1 != h2:
            return -1 if h1 < h2 else 1
        c = d1[0] * d2[1] - d1[1] * d2[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    events.sort(key=functools.cmp_to_key(cmp))
    m = len(rel)
    want_hi = (m + 1) // 2
    best = None
    for j in range(len(events)):
        d1 = events[j]
        d2 = events[(j + 1) % len(events)]
        for lam in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)):
            wx = (1 - lam) * d1[0] + lam * d2[0]
            wy = (1 - lam) * d1[1] + lam * d2[1]
            if wx != 0:
                break
        else:
            continue
        w = _reduced_int_vector(Fraction(wx), Fraction(wy))
        plus = minus = 0
        clearance = None
        for dx, dy in rel:
            s = w[0] * dy - w[1] * dx
            if s == 0:
                plus = -1
                break
            # squared sine of the angle between w and the vertex direction
            c = Fraction(s * s, (w[0] ** 2 + w[1] ** 2) * (dx * dx + dy * dy))
            clearance = c if clearance is None or c < clearance else clearance
            if s > 0:
                plus += 1
            else:
                minus += 1
        if plus < 0 or max(plus, minus) != want_hi:
            continue
        key = (clearance, -abs(w[0]), -abs(w[1]))
        if best is None or key > best[0]:
            best = (key, w, 1 if plus >= minus else -1)
    if best is None:
        raise ArithmeticError(f"no halving direction at template vertex {i}")
    return best[1], best[2]


@lru_cache(maxsize=None)
def _template_layout(a: int):
    """Per template vertex: a halving axis direction and its heavy side,
    plus the minimum inter-vertex gap that bounds sub-cluster size."""
    tpl = load_template(a).points
    dirs = []
    heavy = []
    for i in range(len(tpl)):
        w, h = _halving_direction(tpl, i)
        dirs.append(w)
        heavy.append(h)
    gap = min(
        max(abs(p.x - r.x), abs(p.y - r.y))
        for idx, p in enumerate(tpl)
        for r in tpl[idx + 1 :]
    )
    return tpl, tuple(dirs), tuple(heavy), gap


def _base_content(a: int, j: int, sigma: Fraction) -> list[Point2]:
    tpl, dirs, heavy, gap = _template_layout(a)
    if j == 1:
        return list(tpl)
    child = _base_content(a, j - 1, sigma)
    # Even template orders leave one bundle side heavier; alternating which
    # side each cluster opens to keeps the total docking cost balanced.
    pts: list[Point2] = []
    for i, v in enumerate(tpl):
        wx, wy = dirs[i]
        gamma = _pow2_at_most(gap / (8 * max(abs(wx), abs(wy))))
        face = heavy[i] if i < (len(tpl) + 1) // 2 else -heavy[i]
        bx, by = -wy * face, wx * face
        for p in child:
            xa = gamma * p.x / (2 * CANON_BOUND)
            ya = gamma * sigma * p.y / CANON_BOUND
            pts.append(Point2(v.x + xa * wx + ya * bx, v.y + xa * wy + ya * by))
    assert all(max(abs(p.x), abs(p.y)) <= CANON_BOUND for p in pts)
    return pts


def _pow2_at_most(x: Fraction) -> Fraction:
    """Largest power of two that is <= x (x > 0)."""
    if x <= 0:
        raise ValueError("x must be positive")
    e = x.numerator.bit_length() - x.denominator.bit_length()
    p = Fraction(2) ** e
    while p > x:
        p /= 2
    while p * 2 <= x:
        p *= 2
    return p


# ---------------------------------------------------------------------------
# general-position repair
# ---------------------------------------------------------------------------


def _repair_general_position(pts: list[Point2], rounds: int = 8) -> Optional[list[Point2]]:
    """Nudge offending vertices below the smallest orientation margin.

    A collinear triple (typically born of symmetric placement) is broken by
    moving its first vertex vertically by a power of two smaller than the
    amount that could flip any nonzero orientation; duplicates are not
    repairable here.
    """
    cur = list(pts)
    for _ in range(rounds):
        v = validate_general_position(Drawing(tuple(cur)))
        if v is None:
            return cur
        if v.kind != "collinear":
            return None
        delta = _safe_margin(cur)
        if delta is None:
            return None
        i = v.indices[0]
        cur[i] = Point2(cur[i].x, cur[i].y + delta)
    return None


def _safe_margin(pts: Sequence[Point2]) -> Optional[Fraction]:
    lx = math.lcm(*(p.x.denominator for p in pts))
    ly = math.lcm(*(p.y.denominator for p in pts))
    ipts = [
        (p.x.numerator * (lx // p.x.denominator), p.y.numerator * (ly // p.y.denominator))
        for p in pts
    ]
    m = len(ipts)
    margin = None
    for i in range(m):
        ax, ay = ipts[i]
        for j in range(i + 1, m):
            bx, by = ipts[j]
            ux, uy = bx - ax, by - ay
            for k in range(j + 1, m):
                cx, cy = ipts[k]
                d = ux * (cy - ay) - uy * (cx - ax)
                if d:
                    d = abs(d)
                    if margin is None or d < margin:
                        margin = d
    if margin is None:
        return None
    spread = max(x for x, _ in ipts) - min(x for x, _ in ipts)
    if spread == 0:
        return None
    # Moving one vertex vertically by delta changes any orientation value by
    # at most delta * x-spread (in scaled units); stay a factor 4 below.
    return _pow2_at_most(Fraction(margin, 4 * spread * ly))


# ---------------------------------------------------------------------------
# construction + validation loop
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BuildResult:
    drawing: Drawing
    achieved: int
    expected: int
    arms: tuple[Arm, ...] = ()


def _expected_count(spec: ConstructionSpec) -> int:
    s = spec.strategy
    if s is Strategy.CONVEX:
        return math.comb(spec.n, 4)
    if s is Strategy.SINGER:
        return c_recurrence(3, spec.n)
    if s is Strategy.THIRDS:
        return c3g(spec.n)
    if s is Strategy.BASE_A:
        return c_recurrence(spec.a, spec.n)
    if s is Strategy.MAX_ASYM:
        return closed_form(StrategyId.CM).evaluate_int(spec.n, spec.a)
    return closed_form(_SLIDE_FORMS[s]).evaluate_int(spec.n, spec.a)


def _construct(spec: ConstructionSpec, sigma: Fraction) -> tuple[list[Point2], list[Arm]]:
    s, n = spec.strategy, spec.n
    if s is Strategy.CONVEX:
        return [point(i, i * i) for i in range(n)], []
    if s in (Strategy.SINGER, Strategy.THIRDS):
        parts = thirds_parts(n)
        children = [_thirds_content(p, sigma) for p in parts]
        return _assemble(
            children, above=THIRDS_ABOVE, sigma=sigma, q=_RECURSIVE_Q, eta=Fraction(0)
        )
    if s is Strategy.BASE_A:
        j = _power_index(n, spec.a, "base")
        if j == 1:
            return list(load_template(spec.a).points), []
        return _base_content(spec.a, j, sigma), []
    # slid top level (recursive arms or convex arcs)
    k = n // 3
    if s is Strategy.MAX_ASYM:
        child = _arc_content(k)
        slid = set(SLIDE_ORDER)
    else:
        child = _thirds_content(k, sigma)
        slid = set(SLIDE_ORDER[: _SLIDE_VARIANTS[s]])
    slides = {i: spec.a for i in slid}
    return _assemble(
        [child, child, child],
        above=CYCLIC_ABOVE,
        sigma=sigma,
        q=_SLIDE_Q,
        eta=_SLIDE_ETA,
        slides=slides,
    )


def _label(spec: ConstructionSpec) -> str:
    s = spec.strategy
    if s in (Strategy.MAX_ASYM, Strategy.S1, Strategy.S2, Strategy.S3):
        return f"{s.value}-{spec.n}-a{spec.a}"
    if s is Strategy.BASE_A:
        return f"base{spec.a}-{spec.n}"
    return f"{s.value}-{spec.n}"


def build(spec: ConstructionSpec, jobs: int = 1, max_attempts: int = 5) -> BuildResult:
    """Construct the drawing and certify its crossing count.

    The flattening factor starts at spec.epsilon_schedule per recursion
    level and shrinks by 2^-4 per retry until the exact count matches the
    formula prediction; a persistent mismatch raises ConstructionError.
    """
    spec.validate()
    expected = _expected_count(spec)
    label = _label(spec)
    achieved = None
    for attempt in range(max_attempts):
        sigma = spec.epsilon_schedule * Fraction(1, 16) ** attempt
        pts, arms = _construct(spec, sigma)
        repaired = _repair_general_position(pts)
        if repaired is None:
            continue
        d = Drawing(tuple(repaired), label)
        achieved = count_crossings(d, "quads", jobs)
        if achieved == expected:
            return BuildResult(d, achieved, expected, tuple(arms))
    raise ConstructionError(spec, achieved, expected)


# ---------------------------------------------------------------------------
# public generators
# ---------------------------------------------------------------------------


def convex(n: int, jobs: int = 1) -> Drawing:
    """n points in strictly convex position (integer points on a parabola)."""
    return build(ConstructionSpec(Strategy.CONVEX, n), jobs).drawing


def flatten(d: Drawing, params: FlattenParams) -> Drawing:
    """Compress the drawing vertically into a box of height <= epsilon.

    Pure y-scaling by a positive rational: general position and the exact
    crossing count are unchanged.
    """
    if d.n <= 1:
        return d
    ys = [p.y for p in d.points]
    height = max(ys) - min(ys)
    if height <= params.epsilon:
        return d
    s = params.epsilon / height
    return Drawing(tuple(Point2(p.x, p.y * s) for p in d.points), d.label)


def singer(j: int, jobs: int = 1) -> Drawing:
    """The recursive-thirds drawing of K_(3^j)."""
    if j < 1:
        raise InvalidSpecError("singer needs j >= 1")
    return build(ConstructionSpec(Strategy.SINGER, 3**j), jobs).drawing


def general_thirds(n: int, jobs: int = 1) -> Drawing:
    """The generalized thirds drawing of K_n (near-equal parts)."""
    return build(ConstructionSpec(Strategy.THIRDS, n), jobs).drawing


def base_a(a: int, j: int, jobs: int = 1) -> Drawing:
    """Recursive drawing of K_(a^j) over the bundled optimal K_a template."""
    return build(ConstructionSpec(Strategy.BASE_A, a**j, a), jobs).drawing


def max_asym(n: int, a: int, jobs: int = 1) -> Drawing:
    """Three slid convex-arc clusters (the maximally asymmetric layout)."""
    return build(ConstructionSpec(Strategy.MAX_ASYM, n, a), jobs).drawing


def slide(variant: str, n: int, a: int, jobs: int = 1) -> Drawing:
    """Recursive clusters with 1, 2 or 3 arms slid by the same amount a."""
    try:
        s = Strategy(variant)
    except ValueError:
        raise InvalidSpecError(f"unknown slide variant {variant!r}") from None
    if s not in _SLIDE_VARIANTS:
        raise InvalidSpecError(f"unknown slide variant {variant!r}")
    return build(ConstructionSpec(s, n, a), jobs).drawing
