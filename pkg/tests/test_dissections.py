"""Progression extraction and the dissection identity checkers."""

import pytest
from hypothesis import given, settings, strategies as st

from qcongruence.dissect import (IdentityReport, Progression,
                                 dissection3_f1cubed, dissection5,
                                 dissection7, extract, ramanathan,
                                 report_from_comparison, rogers_ramanujan)
from qcongruence.eta import overpartition_gf
from qcongruence.series import (EXACT, LaurentSeries, agree, euler_factor,
                                mod2k, theta_f)

from oracles import naive_euler, naive_inverse, naive_mul

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")


# -- extract -------------------------------------------------------------------


def test_extract_all_ones():
    geometric = LaurentSeries(0, [1] * 20, EXACT)  # 1/(1-q)
    got = extract(geometric, Progression(2, 1))
    assert got.coeffs() == [1] * 10


def test_extract_overpartition_8n7_stream():
    # leading values frozen from the independent schoolbook expansion
    gf = overpartition_gf(5, EXACT, 8 * 3 + 8)
    got = extract(gf, Progression(8, 7))
    assert got.coeffs()[:4] == [37760, 50744448, 14742829440, 1885213930240]
    assert all(c % 128 == 0 for c in got.coeffs())


def test_extract_window_arithmetic():
    s = LaurentSeries(0, list(range(20)), EXACT)
    got = extract(s, Progression(3, 2))
    assert got.offset == 0
    assert got.trunc == (20 - 2 + 2) // 3  # ceil((trunc - j) / m)
    assert got.coeffs() == [2, 5, 8, 11, 14, 17]


def test_extract_rejects_true_laurent_series():
    s = LaurentSeries(-2, [3, 0, 1, 1, 1], EXACT)
    with pytest.raises(ValueError):
        extract(s, Progression(2, 0))


def test_extract_accepts_zero_padded_negative_offset():
    s = LaurentSeries(-2, [0, 0, 1, 1, 1], EXACT)
    assert extract(s, Progression(2, 0)).coeffs() == [1, 1]


def test_extract_mod2k_matches_exact():
    gf = overpartition_gf(5, EXACT, 100)
    for (m, j) in ((8, 7), (8, 2), (3, 0)):
        a = extract(gf, Progression(m, j)).to_ring(mod2k(5))
        b = extract(gf.to_ring(mod2k(5)), Progression(m, j))
        assert a.coeffs() == b.coeffs()


def test_progression_validation():
    with pytest.raises(ValueError):
        Progression(0, 0)
    with pytest.raises(ValueError):
        Progression(3, 3)
    with pytest.raises(ValueError):
        Progression(3, -1)


coeffs = st.lists(st.integers(-30, 30), min_size=8, max_size=40)


@given(coeffs, coeffs, st.sampled_from([2, 3, 5, 7, 8]), st.integers(0, 7))
def test_extract_linearity(ca, cb, m, j):
    j = j % m
    a = LaurentSeries(0, ca, EXACT)
    b = LaurentSeries(0, cb, EXACT)
    p = Progression(m, j)
    lhs = extract(a.add(b), p)
    rhs = extract(a, p).add(extract(b, p))
    assert agree(lhs, rhs)


@given(coeffs, st.sampled_from([2, 3, 5, 7, 8]),
       st.sampled_from([EXACT, mod2k(1), mod2k(8), mod2k(64)]))
def test_stream_partition_identity(cs, m, ring):
    a = LaurentSeries(0, cs, ring)
    total = None
    for j in range(m):
        piece = extract(a, Progression(m, j)).substitute_qpow(m).shift(j)
        total = piece if total is None else total.add(piece)
    assert agree(total, a, through=a.trunc)


@given(coeffs, st.sampled_from([2, 3, 5]))
def test_extract_inverts_substitution(cs, m):
    a = LaurentSeries(0, cs, EXACT)
    assert agree(extract(a.substitute_qpow(m), Progression(m, 0)), a)


@given(coeffs, st.integers(2, 4), st.integers(2, 4), st.integers(0, 3),
       st.integers(0, 3))
def test_extract_composition_law(cs, m1, m2, j1, j2):
    j1 %= m1
    j2 %= m2
    a = LaurentSeries(0, cs + [0] * 40, EXACT)
    twice = extract(extract(a, Progression(m1, j1)), Progression(m2, j2))
    once = extract(a, Progression(m1 * m2, j1 + m1 * j2))
    assert agree(twice, once)


# -- Rogers-Ramanujan quotient ----------------------------------------------------


def test_rogers_ramanujan_constant_term():
    assert rogers_ramanujan(5).coefficient(0) == 1


def test_rogers_ramanujan_against_naive_expansion():
    n = 12
    num = naive_mul(naive_euler(1, 5, 1, n), naive_euler(4, 5, 1, n), n)
    den = naive_mul(naive_euler(2, 5, 1, n), naive_euler(3, 5, 1, n), n)
    want = naive_mul(num, naive_inverse(den, n), n)
    assert rogers_ramanujan(n).coeffs() == want
    assert want[:11] == [1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 2]


# -- dissection identities ---------------------------------------------------------


def test_dissection3_matches():
    rep = dissection3_f1cubed(500)
    assert rep.matched and rep.truncation == 500


def test_dissection3_tiny_truncation():
    assert dissection3_f1cubed(1).matched


def test_dissection3_mutation_detected():
    # wrong identity f3 + q*f9^2 must fail at a small exponent
    r = mod2k(1)
    lhs = euler_factor(1, 1, 3, r, 60)
    wrong = euler_factor(3, 3, 1, r, 60).add(
        euler_factor(9, 9, 2, r, 59).shift(1))
    rep = report_from_comparison("mutated 3-dissection", lhs, wrong, through=60)
    assert not rep.matched
    assert rep.first_mismatch[0] <= 20


def test_dissection5_matches():
    rep = dissection5(600)
    assert rep.matched


def test_dissection5_constant_terms():
    assert euler_factor(1, 1, 1, EXACT, 2).coefficient(0) == 1
    inner = rogers_ramanujan(2)
    assert inner.coefficient(0) == 1


def test_dissection5_extract_5n2_gives_minus_f5_R():
    # the only residue-2 term in the 5-dissection is -q^2 R(q^5), so both
    # sides extracted at 5n+2 equal -f5(q)*R(q)
    T = 300
    f1 = euler_factor(1, 1, 1, EXACT, 5 * T + 3)
    lhs = extract(f1, Progression(5, 2)).truncate(T)
    rhs = euler_factor(5, 5, 1, EXACT, T).mul(rogers_ramanujan(T)).neg()
    assert agree(lhs, rhs, through=T)


def test_dissection7_matches():
    assert dissection7(600).matched


def test_dissection7_theta_quotients_telescope():
    T = 400
    a = theta_f(14, 35, T).mul(theta_f(7, 42, T).inverse())
    b = theta_f(21, 28, T).mul(theta_f(14, 35, T).inverse())
    c = theta_f(7, 42, T).mul(theta_f(21, 28, T).inverse())
    prod = a.mul(b).mul(c)
    assert agree(prod, LaurentSeries.one(EXACT, T), through=prod.trunc)


def test_ramanathan_small_cases_match():
    for n in (5, 7, 13):
        rep = ramanathan(n, 200)
        assert rep.matched, rep.summary()


def test_ramanathan_7_equals_dissection7_bracket():
    # at n=7 the general dissection must reproduce the explicit
    # A - q*B - q^2 + q^5*C combination
    T = 300
    a = theta_f(14, 35, T).mul(theta_f(7, 42, T).inverse())
    b = theta_f(21, 28, T).mul(theta_f(14, 35, T).inverse())
    c = theta_f(7, 42, T).mul(theta_f(21, 28, T).inverse())
    bracket = a.sub(b.shift(1)).sub(LaurentSeries.q_power(2, EXACT, T))
    bracket = bracket.add(c.shift(5))
    # rebuild the ramanathan bracket: g=1, n=7, case 6g+1
    g, n = 1, 7
    acc = LaurentSeries.q_power((n * n - 1) // 24, EXACT, T).neg()
    for k in range(1, 4):
        e = (k - g) * (3 * k - 3 * g - 1) // 2
        term = theta_f(2 * n * k, n * n - 2 * n * k, T).mul(
            theta_f(n * k, n * n - n * k, T).inverse()).shift(e).truncate(T)
        if (k + g) % 2:
            term = term.neg()
        acc = acc.add(term)
    assert agree(acc, bracket, through=min(acc.trunc, bracket.trunc))


def test_ramanathan_rejects_bad_n():
    for bad in (4, 9, 15, 3):
        with pytest.raises(ValueError):
            ramanathan(bad, 100)


def test_induction_split_identity_mod8():
    # 4*f1^6 == 4*f3^2 + 4*q^2*f9^6 (mod 8)
    r = mod2k(3)
    T = 600
    lhs = euler_factor(1, 1, 6, r, T).scale(4)
    rhs = euler_factor(3, 3, 2, r, T).scale(4).add(
        euler_factor(9, 9, 6, r, T - 2).scale(4).shift(2))
    assert agree(lhs, rhs, through=T)


# -- report type ----------------------------------------------------------------


def test_identity_report_invariant():
    with pytest.raises(ValueError):
        IdentityReport(name="x", truncation=10, matched=True,
                       first_mismatch=(1, 2, 3))
    with pytest.raises(ValueError):
        IdentityReport(name="x", truncation=10, matched=False)


def test_identity_report_summary_lines():
    ok = IdentityReport(name="id", truncation=10, matched=True)
    assert "matched" in ok.summary()
    bad = IdentityReport(name="id", truncation=10, matched=False,
                         first_mismatch=(3, 1, 2))
    assert "q^3" in bad.summary()
