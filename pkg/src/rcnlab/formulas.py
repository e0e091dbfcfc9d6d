"""Exact counting formulas for the recursive drawing strategies.

Everything here is integer or `Fraction` arithmetic; a closed form that is
supposed to be integer-valued but evaluates to a non-integer raises
immediately (that property catches coefficient transcription mistakes).

Conventions used throughout:

* ``f(k)``           crossings created inside a flat cluster of order k when
                     vertices dock in balanced pairs from both sides;
* ``i_cross(p, k)``  crossings internal to the edge bundle between two
                     clusters of orders p and k;
* ``e_merge(k,p,j)`` crossings between two bundles (from clusters of orders
                     p and j) that dock on the same side of an order-k
                     cluster;
* ``e_offvertex``    crossings of two bundles meeting away from any cluster.

Cluster layout used by the thirds strategies (and mirrored by the
generator in :mod:`rcnlab.constructions`): three arms called L, M, R with
M raised, so a flat cluster is entered more cheaply from above than from
below.  The docking sides are: at L the above-bundle comes from M and the
below-bundle from R; at M from L (above) and R (below); at R from M
(above) and L (below).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

# Known optimal crossing numbers of small complete graphs, used both as
# recursion bases and as the bundle-to-bundle multiplier of the template.
BASE_CROSSINGS: Mapping[int, int] = MappingProxyType({3: 0, 4: 0, 5: 1, 7: 9, 9: 36, 10: 62})


class IntegralityError(ArithmeticError):
    """An integer-valued closed form produced a non-integer."""


class NoClosedFormError(ValueError):
    """The strategy has no polynomial closed form; use its recurrence."""


# ---------------------------------------------------------------------------
# counting toolbox
# ---------------------------------------------------------------------------


def f(k: int) -> int:
    """sum_{i=1..k} (i-1)(k-i)  ==  k^3/6 - k^2/2 + k/3  ==  k(k-1)(k-2)/6."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return k * (k - 1) * (k - 2) // 6


def i_cross(p: int, k: int) -> int:
    """C(p,2) * C(k,2): one crossing per quadrilateral across a bundle."""
    if p < 0 or k < 0:
        raise ValueError("orders must be >= 0")
    return math.comb(p, 2) * math.comb(k, 2)


def e_merge(k: int, p: int, j: int) -> int:
    """sum_{i=0..k-1} i*p*j  ==  p*j*k(k-1)/2: two bundles merging at order k."""
    if min(k, p, j) < 0:
        raise ValueError("orders must be >= 0")
    return p * j * (k * (k - 1) // 2)


def e_offvertex(p: int, j: int, k: int, l: int) -> int:
    """p*j*k*l: two bundles crossing away from every cluster."""
    if min(p, j, k, l) < 0:
        raise ValueError("orders must be >= 0")
    return p * j * k * l


# ---------------------------------------------------------------------------
# recurrences
# ---------------------------------------------------------------------------


def _check_power(n: int, a: int) -> None:
    m = n
    while m > 1 and m % a == 0:
        m //= a
    if m != 1 or n < a:
        raise ValueError(f"n={n} is not a positive power of {a} (>= {a})")


@lru_cache(maxsize=None)
def c_recurrence(a: int, n: int) -> int:
    """Crossing count of the order-a recursive construction at n = a^j.

    a*C_a(k) + C(a,2)*k*f(k) + 2a*C((a-1)/2, 2)*e_merge(k,k,k)
             + C(a,2)*i_cross(k,k) + cr(K_a)*k^4,   k = n/a.
    """
    if a == 4:
        return c4_recurrence(n)
    if a % 2 == 0:
        raise ValueError("a must be odd (a=4 is the special even case)")
    if a not in BASE_CROSSINGS:
        raise ValueError(f"no base crossing number known for a={a}")
    _check_power(n, a)
    base = BASE_CROSSINGS[a]
    if n == a:
        return base
    k = n // a
    half = (a - 1) // 2
    return (
        a * c_recurrence(a, k)
        + math.comb(a, 2) * k * f(k)
        + 2 * a * math.comb(half, 2) * e_merge(k, k, k)
        + math.comb(a, 2) * i_cross(k, k)
        + base * k**4
    )


@lru_cache(maxsize=None)
def c4_recurrence(n: int) -> int:
    """4*C4(k) + 6*i(k,k) + 6k*f(k) + 4*e(k,k,k) with C4(4) = 0."""
    _check_power(n, 4)
    if n == 4:
        return 0
    k = n // 4
    return 4 * c4_recurrence(k) + 6 * i_cross(k, k) + 6 * k * f(k) + 4 * e_merge(k, k, k)


def c_recurrence_sum(a: int, n: int) -> int:
    """Non-recursive form of c_recurrence for odd a (cross-check route).

    (n/a)*cr(K_a) + sum over levels j of a^(j-1) times the per-level terms
    evaluated at k = n/a^j.
    """
    if a % 2 == 0:
        raise ValueError("the summation form is defined for odd a")
    if a not in BASE_CROSSINGS:
        raise ValueError(f"no base crossing number known for a={a}")
    _check_power(n, a)
    base = BASE_CROSSINGS[a]
    half = (a - 1) // 2
    total = (n // a) * base
    j = 1
    while a**j < n:
        k = n // a**j
        total += a ** (j - 1) * (
            math.comb(a, 2) * k * f(k)
            + math.comb(a, 2) * i_cross(k, k)
            + 2 * a * math.comb(half, 2) * e_merge(k, k, k)
            + base * k**4
        )
        j += 1
    return total


def jen(n: int) -> int:
    """Reference crossing count of the alternating-axis construction.

    floor((7n^4 - 56n^3 + 128n^2 + 48n*floor((n-7)/3) + 108) / 432),
    evaluated in exact integer arithmetic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return (7 * n**4 - 56 * n**3 + 128 * n**2 + 48 * n * ((n - 7) // 3) + 108) // 432


# ---------------------------------------------------------------------------
# one-sided docking access counts
# ---------------------------------------------------------------------------


def f_top(n: int) -> int:
    """Crossings inside an order-n recursive cluster reached from above (n = 3^j)."""
    _check_power(n, 3)
    if n == 3:
        return 0
    k = n // 3
    return 3 * (f_top(k) + e_merge(k, k, 1))


def f_bot(n: int) -> int:
    """Crossings inside an order-n recursive cluster reached from below (n = 3^j)."""
    _check_power(n, 3)
    if n == 3:
        return 1
    k = n // 3
    return 3 * (f_bot(k) + e_merge(k, k, 1)) + k**3


def thirds_parts(n: int) -> tuple[int, int, int]:
    """Near-equal part orders (L, M, R) for the generalized thirds split.

    The larger parts are placed so that every unbalanced docking leaves its
    odd vertex on the cheap (top) side: remainder 1 puts the big part in
    the middle, remainder 2 puts the small part on the right.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    m, r = divmod(n, 3)
    if r == 0:
        return m, m, m
    if r == 1:
        return m, m + 1, m
    return m + 1, m + 1, m


# Docking sides of the thirds layout, shared with the drawing generator:
# THIRDS_ABOVE[x] is the arm whose bundle enters arm x on its top side
# (0=L, 1=M, 2=R), THIRDS_BELOW[x] the one entering from below.
THIRDS_ABOVE = (1, 0, 1)
THIRDS_BELOW = (2, 2, 0)


@lru_cache(maxsize=None)
def access_top(n: int) -> int:
    """Crossings inside a generalized-thirds cluster entered from above."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return 0
    parts = thirds_parts(n)
    total = sum(access_top(p) for p in parts)
    for x in range(3):
        total += e_merge(parts[x], parts[THIRDS_ABOVE[x]], 1)
    return total


@lru_cache(maxsize=None)
def access_bot(n: int) -> int:
    """Crossings inside a generalized-thirds cluster entered from below."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return 0
    parts = thirds_parts(n)
    total = sum(access_bot(p) for p in parts)
    for x in range(3):
        total += e_merge(parts[x], parts[THIRDS_BELOW[x]], 1)
    return total + parts[0] * parts[1] * parts[2]


@lru_cache(maxsize=None)
def c3g(n: int) -> int:
    """Crossing count of the generalized-thirds construction.

    Recursive parts, bundle-internal crossings, and one-sided docking costs
    per the L/M/R layout.  Co-validated against the brute-force count of
    the generated drawing (see the constructions module).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if n == 3:
        return 0
    parts = thirds_parts(n)
    total = sum(c3g(p) for p in parts if p >= 3)
    total += i_cross(parts[0], parts[1]) + i_cross(parts[0], parts[2]) + i_cross(parts[1], parts[2])
    for x in range(3):
        total += parts[THIRDS_ABOVE[x]] * access_top(parts[x])
        total += parts[THIRDS_BELOW[x]] * access_bot(parts[x])
    return total


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


class StrategyId(enum.Enum):
    C3 = "c3"
    C4 = "c4"
    C5 = "c5"
    C7 = "c7"
    C9 = "c9"
    C3G = "c3g"
    CM = "cm"
    CS1 = "cs1"
    CS2 = "cs2"
    CS3 = "cs3"
    CS3_OPT = "cs3opt"
    JENSEN = "jensen"
    CONVEX = "convex"


@dataclass(frozen=True)
class Quartic:
    """c4*n^4 + c3*n^3 + c2*n^2 + c1*n + c0 with exact rational coefficients."""

    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction = Fraction(0)

    def evaluate(self, n: int) -> Fraction:
        return (((self.c4 * n + self.c3) * n + self.c2) * n + self.c1) * n + self.c0

    def evaluate_int(self, n: int) -> int:
        v = self.evaluate(n)
        if v.denominator != 1:
            raise IntegralityError(f"value {v} at n={n} is not an integer")
        return v.numerator

    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.c4, self.c3, self.c2, self.c1, self.c0)


@dataclass(frozen=True)
class BivariateQuartic:
    """Polynomial in (n, a): sum of coeff[(i, j)] * n^i * a^j."""

    coeffs: Mapping[tuple[int, int], Fraction]

    def evaluate(self, n: int, a) -> Fraction:
        return sum(
            (c * Fraction(n) ** i * Fraction(a) ** j for (i, j), c in self.coeffs.items()),
            Fraction(0),
        )

    def evaluate_int(self, n: int, a: int) -> int:
        v = self.evaluate(n, a)
        if v.denominator != 1:
            raise IntegralityError(f"value {v} at (n={n}, a={a}) is not an integer")
        return v.numerator

    def a_poly_coeffs(self) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
        """Coefficients grouped by power of a: three lists indexed by power of n."""
        out: tuple[list[Fraction], list[Fraction], list[Fraction]] = (
            [Fraction(0)] * 5,
            [Fraction(0)] * 5,
            [Fraction(0)] * 5,
        )
        for (i, j), c in self.coeffs.items():
            out[j][i] += c
        return out

    def substitute_affine_a(self, alpha: Fraction, beta: Fraction) -> Quartic:
        """Exact expansion of self(n, alpha*n + beta) as a quartic in n."""
        acc = [Fraction(0)] * 5
        for (i, j), c in self.coeffs.items():
            # (alpha*n + beta)^j expanded binomially
            for t in range(j + 1):
                coef = c * math.comb(j, t) * alpha**t * beta ** (j - t)
                acc[i + t] += coef
        if any(acc[5:]):
            raise ValueError("substitution exceeded degree 4")
        return Quartic(acc[4], acc[3], acc[2], acc[1], acc[0])


def _frac_table(entries) -> Mapping[tuple[int, int], Fraction]:
    return MappingProxyType({k: Fraction(*v) for k, v in entries.items()})


_CLOSED_UNIVARIATE: dict[StrategyId, Quartic] = {
    StrategyId.C3: Quartic(Fraction(5, 312), Fraction(-1, 8), Fraction(7, 24), Fraction(-19, 104)),
    StrategyId.C4: Quartic(Fraction(1, 56), Fraction(-2, 15), Fraction(7, 24), Fraction(-37, 210)),
    StrategyId.C5: Quartic(Fraction(61, 3720), Fraction(-1, 8), Fraction(7, 24), Fraction(-227, 1240)),
    StrategyId.CS3_OPT: Quartic(
        Fraction(6467, 404352), Fraction(-1297, 10368), Fraction(1009, 3456), Fraction(-2723, 14976)
    ),
    StrategyId.CONVEX: Quartic(Fraction(1, 24), Fraction(-1, 4), Fraction(11, 24), Fraction(-1, 4)),
}

_CLOSED_BIVARIATE: dict[StrategyId, BivariateQuartic] = {
    StrategyId.CM: BivariateQuartic(
        _frac_table(
            {
                (4, 0): (19, 648),
                (3, 1): (-5, 54),
                (2, 2): (1, 6),
                (3, 0): (-5, 36),
                (2, 1): (1, 6),
                (1, 2): (-1, 2),
                (2, 0): (17, 72),
                (1, 1): (1, 3),
                (1, 0): (-1, 4),
            }
        )
    ),
    StrategyId.CS1: BivariateQuartic(
        _frac_table(
            {
                (4, 0): (137, 6318),
                (3, 1): (-23, 648),
                (2, 2): (1, 18),
                (3, 0): (-31, 216),
                (2, 1): (1, 9),
                (1, 2): (-1, 6),
                (2, 0): (8, 27),
                (1, 1): (-1, 72),
                (1, 0): (-19, 104),
            }
        )
    ),
    StrategyId.CS2: BivariateQuartic(
        _frac_table(
            {
                (4, 0): (691, 25272),
                (3, 1): (-23, 324),
                (2, 2): (1, 9),
                (3, 0): (-35, 216),
                (2, 1): (2, 9),
                (1, 2): (-1, 3),
                (2, 0): (65, 216),
                (1, 1): (-1, 36),
                (1, 0): (-19, 104),
            }
        )
    ),
    StrategyId.CS3: BivariateQuartic(
        _frac_table(
            {
                (4, 0): (139, 4212),
                (3, 1): (-23, 216),
                (2, 2): (1, 6),
                (3, 0): (-13, 72),
                (2, 1): (1, 3),
                (1, 2): (-1, 2),
                (2, 0): (11, 36),
                (1, 1): (-1, 24),
                (1, 0): (-19, 104),
            }
        )
    ),
}


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Fraction; raises on a singular system."""
    n = len(rows)
    m = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / m[col][col]
                for c in range(col, n + 1):
                    m[r][c] -= factor * m[col][c]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        x[i] = (m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))) / m[i][i]
    return x


@lru_cache(maxsize=None)
def _fit_recurrence_quartic(a: int) -> Quartic:
    """Derive the quartic closed form of c_recurrence(a, .) by exact fit.

    Five interpolation points at n = a..a^5 determine the coefficients; the
    fit is then verified at a^6 and a^7, so the result is overdetermined
    rather than merely fitted.
    """
    ns = [a**j for j in range(1, 6)]
    rows = [[Fraction(n) ** p for p in (4, 3, 2, 1, 0)] for n in ns]
    rhs = [Fraction(c_recurrence(a, n)) for n in ns]
    c = _solve_linear(rows, rhs)
    q = Quartic(*c)
    for j in (6, 7):
        n = a**j
        if q.evaluate_int(n) != c_recurrence(a, n):
            raise ArithmeticError(f"closed-form fit for a={a} fails at n={n}")
    return q


def closed_form(s: StrategyId) -> Quartic | BivariateQuartic:
    """The exact polynomial closed form of the strategy's crossing count.

    Univariate strategies return a Quartic in n; the slid/asymmetric
    strategies return a BivariateQuartic in (n, a).  Strategies without a
    polynomial form (the generalized thirds construction, the reference
    floor formula) raise NoClosedFormError.
    """
    if s in _CLOSED_UNIVARIATE:
        return _CLOSED_UNIVARIATE[s]
    if s in _CLOSED_BIVARIATE:
        return _CLOSED_BIVARIATE[s]
    if s is StrategyId.C7:
        return _fit_recurrence_quartic(7)
    if s is StrategyId.C9:
        return _fit_recurrence_quartic(9)
    if s is StrategyId.C3G:
        raise NoClosedFormError("c3g has no closed form; use c3g() or the counter")
    if s is StrategyId.JENSEN:
        raise NoClosedFormError("the reference count is a floor formula; use jen()")
    raise NoClosedFormError(f"no closed form for {s}")


# ---------------------------------------------------------------------------
# minimizing slide amounts, ratios, limits
# ---------------------------------------------------------------------------

#: Rounding rule for the asymmetric-arc strategy, which has no stated rule:
#: "nearest" (ties up) by default; the slide strategies always take ceil.
CM_ROUNDING = "nearest"


def optimal_a_affine(s: StrategyId) -> tuple[Fraction, Fraction]:
    """(alpha, beta) with a0(n) = alpha*n + beta minimizing the count in a."""
    form = closed_form(s)
    if not isinstance(form, BivariateQuartic):
        raise ValueError(f"{s} does not take a slide amount")
    a0, a1, a2 = form.a_poly_coeffs()
    # minimizer of a quadratic in a: -B(n) / (2 A(n)); divide exactly.
    num = [-c for c in a1]
    den = [2 * c for c in a2]
    # strip the common factor n (both polynomials have zero constant term)
    while num[0] == 0 and den[0] == 0:
        num = num[1:] + [Fraction(0)]
        den = den[1:] + [Fraction(0)]
    # polynomial division num/den, exact with affine quotient
    deg_den = max(i for i, c in enumerate(den) if c != 0)
    deg_num = max(i for i, c in enumerate(num) if c != 0)
    quot = [Fraction(0)] * (deg_num - deg_den + 1)
    rem = num[:]
    for d in range(deg_num, deg_den - 1, -1):
        q = rem[d] / den[deg_den]
        quot[d - deg_den] = q
        for i in range(deg_den + 1):
            rem[d - deg_den + i] -= q * den[i]
    if any(rem):
        raise ArithmeticError(f"minimizer of {s} is not an affine function of n")
    if len(quot) != 2:
        raise ArithmeticError(f"minimizer of {s} is not affine")
    return quot[1], quot[0]


def optimal_a(s: StrategyId, n: int) -> tuple[Fraction, int]:
    """Exact minimizer a0 of the count in a, and its integer rounding.

    Slide strategies round up (the ceiling is the nearest integer on their
    domain); the asymmetric-arc strategy rounds per CM_ROUNDING.
    """
    alpha, beta = optimal_a_affine(s)
    a_real = alpha * n + beta
    if s is StrategyId.CM and CM_ROUNDING == "nearest":
        a_int = math.floor(a_real + Fraction(1, 2))
    else:
        a_int = math.ceil(a_real)
    return a_real, a_int


def ratio(count: int, n: int) -> Fraction:
    """count / C(n,4), exact."""
    if n < 4:
        raise ValueError("n must be >= 4")
    return Fraction(count, math.comb(n, 4))


def asymptotic_limit(s: StrategyId) -> Fraction:
    """lim count/C(n,4) = 24 times the leading coefficient of the closed form.

    For the strategies parametrized by a slide amount, the exact minimizer
    a0(n) is substituted first.
    """
    form = closed_form(s)
    if isinstance(form, BivariateQuartic):
        alpha, beta = optimal_a_affine(s)
        form = form.substitute_affine_a(alpha, beta)
    return 24 * form.c4
