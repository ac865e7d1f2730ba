"""Core truncated-series arithmetic, checked against the naive oracles and
the ring-series invariants (property tests use fixed-seed hypothesis)."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcongruence.series import (EXACT, InsufficientTruncation, LaurentSeries,
                                NonInvertibleSeries, RingMismatch, agree,
                                euler_factor, first_difference, mod2k,
                                theta_f)

from oracles import (count_partitions, generalized_pentagonal, naive_euler,
                     naive_mul, naive_product)

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")


def series(offset, coeffs, ring=EXACT):
    return LaurentSeries(offset, coeffs, ring)


# -- constructors and accessors ----------------------------------------------


def test_window_accounting():
    s = series(-2, [0, 5, 0, 7])
    assert s.offset == -2 and s.trunc == 2 and len(s) == 4
    assert s.coefficient(-1) == 5
    assert s.coefficient(-10) == 0
    with pytest.raises(InsufficientTruncation):
        s.coefficient(2)


def test_valuation_skips_representational_zeros():
    assert series(-2, [0, 5, 0, 7]).valuation() == -1
    assert series(3, [0, 0, 1]).valuation() == 5
    assert series(0, [0, 0, 0]).valuation() is None


def test_mod2k_canonical_reduction():
    s = series(0, [-1, 9, 256], mod2k(3))
    assert s.coeffs() == [7, 1, 0]


def test_ring_validation():
    with pytest.raises(ValueError):
        mod2k(0)
    with pytest.raises(ValueError):
        mod2k(65)


def test_empty_series_rejected():
    with pytest.raises(ValueError):
        series(0, [])


# -- mul ----------------------------------------------------------------------


def test_mul_telescopes_geometric():
    one_minus_q = series(0, [1, -1] + [0] * 48)
    geometric = series(0, [1] * 50)
    assert one_minus_q.mul(geometric).coeffs() == [1] + [0] * 49


def test_mul_binomial_square():
    s = series(0, [1, 1, 0])
    assert s.mul(s).coeffs() == [1, 2, 1]


def test_mul_euler_times_its_inverse_is_one():
    f1 = euler_factor(1, 1, 1, EXACT, 201)
    inv = f1.inverse()
    assert f1.mul(inv).coeffs() == [1] + [0] * 200


def test_mul_truncation_rule():
    a = series(1, [1, 2, 3])      # window [1, 4)
    b = series(-2, [4, 5])        # window [-2, 0)
    p = a.mul(b)
    assert p.offset == -1
    assert p.trunc == min(a.trunc + b.offset, b.trunc + a.offset)


def test_mul_ring_mismatch():
    with pytest.raises(RingMismatch):
        series(0, [1]).mul(series(0, [1], mod2k(2)))


# -- inverse -------------------------------------------------------------------


def test_inverse_geometric():
    inv = series(0, [1, -1] + [0] * 8).inverse()
    assert inv.coeffs() == [1] * 10


def test_inverse_gives_partition_numbers():
    # oracle first: raw recursive enumeration of partitions
    expected = [count_partitions(n) for n in range(10)]
    assert expected == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    inv = euler_factor(1, 1, 1, EXACT, 10).inverse()
    assert inv.coeffs() == expected


def test_inverse_of_shifted_series_has_negative_offset():
    s = series(1, [1, -1] + [0] * 8)   # q(1 - q)
    inv = s.inverse()
    assert inv.offset == -1
    assert inv.coeffs()[:4] == [1, 1, 1, 1]


def test_inverse_rejects_nonunit_and_zero():
    with pytest.raises(NonInvertibleSeries):
        series(0, [2, 1]).inverse()
    with pytest.raises(NonInvertibleSeries):
        series(0, [0, 0, 0]).inverse()
    # odd leading coefficients are units mod 2^k
    assert series(0, [3, 1, 1], mod2k(4)).inverse() is not None


def test_inverse_is_two_sided():
    s = series(0, [1, 4, -2, 7, 0, 3] + [0] * 20)
    inv = s.inverse()
    assert agree(inv.mul(s), LaurentSeries.one(EXACT, 20), through=20)
    assert agree(s.mul(inv), LaurentSeries.one(EXACT, 20), through=20)


# -- pow ------------------------------------------------------------------------


def test_pow_binomial():
    assert series(0, [1, 1, 0]).pow(2).coeffs() == [1, 2, 1]


def test_pow_zero_is_one():
    s = series(0, [1, 5, 5, 5])
    assert s.pow(0).coeffs() == [1, 0, 0, 0]


def test_pow_negative_one_equals_inverse():
    s = series(0, [1, 3, -1, 2] + [0] * 6)
    assert agree(s.pow(-1), s.inverse())


def test_pow_f1_cubed_mod2_matches_three_dissection():
    # classical 3-dissection of f1^3 reduced mod 2: f3 + q*f9^3
    r = mod2k(1)
    lhs = euler_factor(1, 1, 1, r, 500).pow(3)
    rhs = euler_factor(3, 3, 1, r, 500).add(
        euler_factor(9, 9, 3, r, 499).shift(1))
    assert agree(lhs, rhs, through=500)


# -- substitute_qpow -------------------------------------------------------------


def test_substitute_simple():
    assert series(0, [1, 1]).substitute_qpow(3).coeffs() == [1, 0, 0, 1, 0, 0]


def test_substitute_identity():
    s = series(-1, [1, 2, 3])
    assert s.substitute_qpow(1) is s


def test_substitute_f1_gives_f9():
    sub = euler_factor(1, 1, 1, EXACT, 25).substitute_qpow(9)
    direct = euler_factor(9, 9, 1, EXACT, 225)
    assert agree(sub, direct, through=225)


def test_substitute_scales_window():
    s = series(-1, [1, 2, 3])
    out = s.substitute_qpow(4)
    assert out.offset == -4 and out.trunc == 8


# -- euler_factor ------------------------------------------------------------------


def test_euler_factor_inverse_is_partition_gf():
    expected = [count_partitions(n) for n in range(10)]
    assert euler_factor(1, 1, -1, EXACT, 10).coeffs() == expected


def test_euler_factor_pentagonal_signs():
    got = euler_factor(1, 1, 1, EXACT, 13).coeffs()
    direct = naive_product(range(1, 13), 13)
    assert got == direct
    assert got == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_euler_factor_general_progression_matches_naive():
    for (a, m, e) in ((2, 5, 1), (3, 5, 1), (1, 4, 2), (2, 3, -1)):
        got = euler_factor(a, m, e, EXACT, 60).coeffs()
        assert got == naive_euler(a, m, e, 60)


def test_pentagonal_support_through_1000():
    got = euler_factor(1, 1, 1, EXACT, 1000).coeffs()
    direct = naive_product(range(1, 1000), 1000)
    assert got == direct
    signs = generalized_pentagonal(1000)
    for e, c in enumerate(got):
        assert c == signs.get(e, 0)


def test_euler_factor_validation():
    with pytest.raises(ValueError):
        euler_factor(0, 1, 1, EXACT, 10)
    with pytest.raises(InsufficientTruncation):
        euler_factor(1, 1, 1, EXACT, 0)


# -- theta_f ----------------------------------------------------------------------


def test_theta_triple_product_specialization():
    assert agree(theta_f(1, 2, 200), euler_factor(1, 1, 1, EXACT, 200))


def test_theta_constant_term():
    for (x, y) in ((1, 1), (3, 4), (7, 42), (21, 28)):
        assert theta_f(x, y, 50).coefficient(0) == 1


def test_theta_symmetric_arguments_double_up():
    # x = y = 1 collapses the n and -n terms onto the squares
    got = theta_f(1, 1, 26).coeffs()
    expected = [0] * 26
    expected[0] = 1
    for n in range(1, 6):
        expected[n * n] = 2 * (-1 if n % 2 else 1)
    assert got == expected


def test_theta_validation():
    with pytest.raises(ValueError):
        theta_f(0, 2, 10)


# -- comparison helpers -------------------------------------------------------------


def test_first_difference_zero_extends_below_offset():
    a = series(0, [1, 2, 3])
    b = series(-2, [0, 0, 1, 2, 3])
    assert first_difference(a, b) is None
    c = series(-2, [4, 0, 1, 2, 3])
    assert first_difference(a, c) == (-2, 0, 4)


def test_first_difference_window_semantics():
    # comparison covers [min(offsets), min(truncs)); exponents past either
    # truncation are unknown and never compared
    assert first_difference(series(5, [1]), series(0, [0, 0])) is None
    assert first_difference(series(5, [1]), series(0, [0] * 6)) == (5, 1, 0)
    # a through-cap below every known exponent leaves nothing to compare
    with pytest.raises(InsufficientTruncation):
        first_difference(series(5, [1]), series(0, [1, 2]), through=0)


# -- property suite (fixed-seed hypothesis) -----------------------------------------

rings = st.sampled_from([EXACT, mod2k(1), mod2k(3), mod2k(8), mod2k(64)])
coeff_lists = st.lists(st.integers(-40, 40), min_size=1, max_size=32)
offsets = st.integers(-6, 6)


@given(coeff_lists, coeff_lists, offsets, offsets, rings)
def test_mul_commutes_and_valuation_superadditive(ca, cb, oa, ob, ring):
    a = series(oa, ca, ring)
    b = series(ob, cb, ring)
    ab = a.mul(b)
    ba = b.mul(a)
    assert ab.offset == ba.offset and ab.coeffs() == ba.coeffs()
    va, vb, vab = a.valuation(), b.valuation(), ab.valuation()
    if vab is not None:
        assert va is not None and vb is not None
        assert vab >= va + vb


@given(coeff_lists, coeff_lists, offsets, rings)
def test_mul_matches_schoolbook_reference(ca, cb, off, ring):
    a = series(off, ca, ring)
    b = series(0, cb, ring)
    got = a.mul(b)
    n = min(len(ca), len(cb))
    want = naive_mul(ca, cb, n)
    if ring.is_exact:
        assert got.coeffs() == want
    else:
        assert got.coeffs() == [c % (1 << ring.k) for c in want]


@st.composite
def unit_series(draw):
    ring = draw(rings)
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=4, max_size=24))
    if ring.is_exact:
        coeffs[0] = draw(st.sampled_from([1, -1]))
    else:
        coeffs[0] = draw(st.integers(0, 40)) * 2 + 1
    return series(0, coeffs + [0] * 100, ring)


@given(unit_series(), st.integers(-3, 3), st.integers(-3, 3))
def test_pow_additivity(a, e1, e2):
    lhs = a.pow(e1 + e2)
    rhs = a.pow(e1).mul(a.pow(e2))
    assert agree(lhs, rhs, through=100)


@given(coeff_lists, coeff_lists, st.integers(1, 8))
def test_mod2k_commutes_with_exact_arithmetic(ca, cb, k):
    pad = [0] * (100 - len(ca)) if len(ca) < 100 else []
    a_exact = series(0, ca + pad)
    b_exact = series(0, cb)
    ring = mod2k(k)
    a_mod = a_exact.to_ring(ring)
    b_mod = b_exact.to_ring(ring)
    exact_then_reduce = a_exact.mul(b_exact).to_ring(ring)
    reduce_then_mul = a_mod.mul(b_mod)
    assert exact_then_reduce.coeffs() == reduce_then_mul.coeffs()


@given(unit_series())
def test_inverse_two_sided_property(a):
    inv = a.inverse()
    one = LaurentSeries.one(a.ring, 10)
    assert agree(a.mul(inv), one, through=10)
    assert agree(inv.mul(a), one, through=10)


def test_kronecker_path_matches_schoolbook():
    # dense-by-dense products large enough to take the packed-integer path
    rng = np.random.default_rng(12345)
    a = [int(x) for x in rng.integers(-10**12, 10**12, size=700)]
    b = [int(x) for x in rng.integers(-10**12, 10**12, size=700)]
    got = series(0, a).mul(series(0, b)).coeffs()
    assert got == naive_mul(a, b, 700)


def test_exact_paths_agree_across_the_size_threshold():
    # products sized just below and above the schoolbook/Kronecker switch
    # must produce identical coefficients
    rng = np.random.default_rng(777)
    for n in (511, 512, 513, 520):
        a = [int(x) for x in rng.integers(-10**6, 10**6, size=n)]
        b = [int(x) for x in rng.integers(-10**6, 10**6, size=n)]
        assert series(0, a).mul(series(0, b)).coeffs() == naive_mul(a, b, n), n


def test_mod64_sparse_path_matches_dense():
    rng = np.random.default_rng(54321)
    dense = [int(x) for x in rng.integers(0, 2**63, size=400)]
    sparse = [0] * 400
    for i in (0, 3, 97, 211, 399):
        sparse[i] = int(rng.integers(1, 2**63))
    r = mod2k(64)
    got = series(0, sparse, r).mul(series(0, dense, r)).coeffs()
    want = [c % 2**64 for c in naive_mul(sparse, dense, 400)]
    assert got == want
