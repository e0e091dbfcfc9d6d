import math
from fractions import Fraction

import pytest

from rcnlab.formulas import (
    BASE_CROSSINGS,
    IntegralityError,
    NoClosedFormError,
    StrategyId as S,
    access_bot,
    access_top,
    asymptotic_limit,
    c3g,
    c4_recurrence,
    c_recurrence,
    c_recurrence_sum,
    closed_form,
    e_merge,
    e_offvertex,
    f,
    f_bot,
    f_top,
    i_cross,
    jen,
    optimal_a,
    optimal_a_affine,
    ratio,
    thirds_parts,
)


# --- counting toolbox, checked against literal enumeration oracles ---------


def brute_f(k):
    return sum((i - 1) * (k - i) for i in range(1, k + 1))


def brute_e(k, p, j):
    return sum(i * p * j for i in range(k))


def test_f_matches_enumeration():
    assert f(2) == 0
    assert f(3) == brute_f(3) == 1
    assert f(9) == brute_f(9) == 84
    for k in range(0, 60):
        assert f(k) == brute_f(k)
    assert f(3**7) == brute_f(3**7)


def test_i_cross():
    assert i_cross(1, 17) == 0
    assert i_cross(2, 2) == 1
    assert i_cross(9, 9) == 1296
    assert i_cross(6, 4) == math.comb(6, 2) * math.comb(4, 2)


def test_e_merge_matches_enumeration():
    assert e_merge(1, 5, 7) == 0
    assert e_merge(3, 3, 1) == brute_e(3, 3, 1) == 9
    assert e_merge(7, 7, 7) == brute_e(7, 7, 7) == 1029
    for k in range(0, 12):
        assert e_merge(k, 4, 5) == brute_e(k, 4, 5)
    assert e_merge(729, 729, 81) == brute_e(729, 729, 81)


def test_base_crossings_is_read_only():
    with pytest.raises(TypeError):
        BASE_CROSSINGS[11] = 100  # type: ignore[index]


def test_e_offvertex():
    assert e_offvertex(5, 5, 5, 5) == 625
    assert e_offvertex(0, 3, 9, 2) == 0
    assert e_offvertex(1, 2, 3, 4) == 24


# --- recurrences -------------------------------------------------------------


def test_c_recurrence_small_values():
    # one recursion step written out longhand
    assert c_recurrence(3, 9) == 3 * 0 + 3 * 3 * f(3) + 3 * i_cross(3, 3) == 36
    assert (
        c_recurrence(5, 25)
        == 5 * 1 + 10 * 5 * f(5) + 10 * e_merge(5, 5, 5) + 10 * i_cross(5, 5) + 1 * 5**4
        == 4630
    )
    assert (
        c_recurrence(7, 49)
        == 63 + 21 * 7 * 35 + 42 * 1029 + 21 * 441 + 9 * 2401
        == 79296
    )
    assert c_recurrence(3, 27) == 6264


def test_c4_recurrence():
    assert c4_recurrence(4) == 0
    assert c4_recurrence(16) == 6 * 36 + 24 * 4 + 4 * 96 == 696
    assert c_recurrence(4, 16) == 696
    assert closed_form(S.C4).evaluate_int(16) == 696


def test_recurrence_domain_errors():
    with pytest.raises(ValueError):
        c_recurrence(6, 36)
    with pytest.raises(ValueError):
        c_recurrence(11, 11)
    with pytest.raises(ValueError):
        c_recurrence(3, 12)
    with pytest.raises(ValueError):
        c4_recurrence(8)


def test_sum_form_agrees_with_recurrence():
    for a in (3, 5, 7, 9):
        j = 1
        while a**j <= 100_000:
            n = a**j
            assert c_recurrence_sum(a, n) == c_recurrence(a, n)
            j += 1


def test_jen():
    assert jen(7) == (16807 - 19208 + 6272 + 0 + 108) // 432 == 9
    assert jen(81) == 630786
    assert jen(24) > c3g(24)


# --- one-sided access counts -------------------------------------------------


def test_f_top_f_bot_bases_and_step():
    assert f_top(3) == 0 and f_bot(3) == 1
    assert f_top(9) == 3 * (f_top(3) + e_merge(3, 3, 1)) == 27
    assert f_bot(9) == 3 * (f_bot(3) + e_merge(3, 3, 1)) + 27 == 57
    assert f_top(9) + f_bot(9) == f(9) == 84


def test_f_top_f_bot_closed_forms():
    for j in range(1, 8):
        n = 3**j
        assert f_top(n) == (n**3 - 4 * n**2 + 3 * n) // 16
        assert f_bot(n) == (5 * n**3 - 12 * n**2 + 7 * n) // 48
        assert f_top(n) + f_bot(n) == f(n)


def test_f_top_over_f_bot_approaches_three_fifths():
    # ratio 3(n-3)/(5n-7) climbs towards 3/5
    vals = [Fraction(f_top(3**j), f_bot(3**j)) for j in range(2, 8)]
    assert all(v < Fraction(3, 5) for v in vals)
    assert vals == sorted(vals)
    assert abs(vals[-1] - Fraction(3, 5)) < Fraction(1, 100)


def test_thirds_parts():
    assert thirds_parts(9) == (3, 3, 3)
    assert thirds_parts(10) == (3, 4, 3)
    assert thirds_parts(11) == (4, 4, 3)
    for n in range(3, 120):
        parts = thirds_parts(n)
        assert sum(parts) == n
        assert max(parts) - min(parts) <= 1
        assert sorted(parts) == sorted((n // 3, -(-n // 3), n - n // 3 - -(-n // 3)))


def test_access_counts():
    for j in range(1, 6):
        n = 3**j
        assert access_top(n) == f_top(n)
        assert access_bot(n) == f_bot(n)
    for n in range(3, 80):
        assert access_top(n) + access_bot(n) == f(n)


def test_c3g_small_values():
    assert [c3g(n) for n in range(3, 11)] == [0, 0, 1, 3, 9, 19, 36, 63]
    for n in (3, 4, 5, 7, 9):
        # the generalized construction reaches every known optimum it covers
        assert c3g(n) == BASE_CROSSINGS[n]
    for j in range(1, 6):
        assert c3g(3**j) == c_recurrence(3, 3**j)


def test_c3g_below_reference_curve():
    for n in range(24, 201):
        assert c3g(n) < jen(n)


# --- closed forms ------------------------------------------------------------


def test_closed_form_values():
    assert closed_form(S.C3).evaluate_int(81) == 625320
    assert closed_form(S.CS1).evaluate_int(81, 26) == 624852
    assert closed_form(S.CS2).evaluate_int(81, 26) == 624384
    assert closed_form(S.CS3).evaluate_int(81, 26) == 623916
    assert closed_form(S.CONVEX).evaluate_int(81) == math.comb(81, 4) == 1663740


def test_closed_forms_match_recurrences():
    for sid, a in ((S.C3, 3), (S.C4, 4), (S.C5, 5), (S.C7, 7), (S.C9, 9)):
        q = closed_form(sid)
        for j in range(1, 6):
            n = a**j
            assert q.evaluate_int(n) == c_recurrence(a, n)


def test_integrality_guard():
    with pytest.raises(IntegralityError):
        closed_form(S.C3).evaluate_int(5)  # off the 3^j domain
    with pytest.raises(IntegralityError):
        closed_form(S.CS3).evaluate_int(12, 3)  # off the 3^j domain


def test_no_closed_form():
    with pytest.raises(NoClosedFormError):
        closed_form(S.C3G)
    with pytest.raises(NoClosedFormError):
        closed_form(S.JENSEN)


def test_no_slide_degeneracy():
    c3 = closed_form(S.C3)
    for sid in (S.CS1, S.CS2, S.CS3):
        form = closed_form(sid)
        for n in (9, 27, 81):
            assert form.evaluate_int(n, n // 3) == c3.evaluate_int(n)


def test_table3_ordering():
    vals = [closed_form(s).evaluate_int(81, 26) for s in (S.CS3, S.CS2, S.CS1)]
    vals.append(closed_form(S.C3).evaluate_int(81))
    vals.append(jen(81))
    assert vals == sorted(vals) and len(set(vals)) == 5


# --- minimizers, ratios, limits ---------------------------------------------


def test_optimal_a():
    assert optimal_a_affine(S.CM) == (Fraction(5, 18), Fraction(1, 3))
    for sid in (S.CS1, S.CS2, S.CS3):
        assert optimal_a_affine(sid) == (Fraction(23, 72), Fraction(-1, 24))
    assert optimal_a(S.CS3, 81) == (Fraction(155, 6), 26)
    assert optimal_a(S.CS1, 81)[1] == 26
    assert optimal_a(S.CM, 18) == (Fraction(16, 3), 5)


def test_optimal_a_is_integer_minimum():
    for sid in (S.CM, S.CS1, S.CS2, S.CS3):
        form = closed_form(sid)
        for n in (27, 81, 243):
            _, ai = optimal_a(sid, n)
            here = form.evaluate(n, ai)
            assert here <= form.evaluate(n, ai - 1)
            assert here <= form.evaluate(n, ai + 1)


def test_ratio():
    assert ratio(1663740, 81) == 1
    assert ratio(36, 9) == Fraction(2, 7)
    assert abs(float(ratio(623916, 81)) - 0.375008) < 5e-7
    with pytest.raises(ValueError):
        ratio(1, 3)


def test_asymptotic_limits_exact():
    assert asymptotic_limit(S.C3) == Fraction(15, 39)
    assert asymptotic_limit(S.C4) == Fraction(3, 7)
    assert asymptotic_limit(S.C5) == Fraction(61, 155)
    assert asymptotic_limit(S.C7) == Fraction(155, 399)
    assert asymptotic_limit(S.C9) == Fraction(15, 39)
    assert asymptotic_limit(S.CM) == Fraction(32, 81)
    assert asymptotic_limit(S.CS1) == Fraction(19427, 50544)
    assert asymptotic_limit(S.CS2) == Fraction(9707, 25272)
    assert asymptotic_limit(S.CS3) == Fraction(6467, 16848)
    assert asymptotic_limit(S.CS3_OPT) == asymptotic_limit(S.CS3)
    assert asymptotic_limit(S.CONVEX) == 1
    with pytest.raises(NoClosedFormError):
        asymptotic_limit(S.C3G)


def test_limits_against_per_level_cost():
    # independent route: the order-a recursion gains tau4*k^4 per level,
    # summing to tau4/(a^4 - a) as the leading coefficient
    for a, sid in ((3, S.C3), (5, S.C5), (7, S.C7), (9, S.C9)):
        half = (a - 1) // 2
        tau4 = (
            Fraction(math.comb(a, 2), 6)
            + Fraction(2 * a * math.comb(half, 2), 2)
            + Fraction(math.comb(a, 2), 4)
            + BASE_CROSSINGS[a]
        )
        assert asymptotic_limit(sid) == 24 * tau4 / (a**4 - a)


def test_substituted_slide_form_matches_published_quartic():
    cs3 = closed_form(S.CS3).substitute_affine_a(Fraction(23, 72), Fraction(-1, 24))
    assert cs3 == closed_form(S.CS3_OPT)
    cm = closed_form(S.CM).substitute_affine_a(*optimal_a_affine(S.CM))
    assert cm.coefficients()[:4] == (
        Fraction(4, 243),
        Fraction(-85, 648),
        Fraction(67, 216),
        Fraction(-7, 36),
    )


def test_top_level_dominance():
    n = 3**7
    share = Fraction(c_recurrence(3, n) - 3 * c_recurrence(3, n // 3), c_recurrence(3, n))
    assert abs(share - Fraction(26, 27)) < Fraction(1, 100)


def test_ratio_convergence_is_monotone():
    devs = [
        abs(ratio(c_recurrence(3, 3**j), 3**j) - Fraction(15, 39)) for j in range(3, 8)
    ]
    assert devs == sorted(devs, reverse=True)
