"""Eta quotients: expansion, the partition generating functions, and the
textual grammar."""

import pytest

from qcongruence.congruences import (enumerate_colored_overpartitions,
                                     enumerate_colored_partitions)
from qcongruence.eta import (EtaQuotient, colored_partition_gf, expand,
                             format_eta_quotient, overpartition_gf,
                             parse_eta_quotient)
from qcongruence.series import EXACT, agree, euler_factor, mod2k

from oracles import count_partitions, naive_overpartition


def test_expand_overpartition_quotient_against_enumeration():
    # oracle first: raw enumeration of 5-colored overpartitions
    expected = [enumerate_colored_overpartitions(5, n) for n in range(8)]
    assert expected == [1, 10, 60, 280, 1110, 3912, 12600, 37760]
    got = expand(EtaQuotient(2, {1: -10, 2: 5}), EXACT, 8)
    assert got.coeffs() == expected
    # and against the independent schoolbook expansion
    assert got.coeffs() == naive_overpartition(5, 8)


def test_expand_single_factor_is_euler_product():
    assert agree(expand(EtaQuotient(1, {1: 1}), EXACT, 30),
                 euler_factor(1, 1, 1, EXACT, 30))


def test_expand_witness_prefactor_shape():
    pre = EtaQuotient(8, {1: 79, 2: -38, 4: 36, 8: -72}, qshift=-17)
    s = expand(pre, EXACT, 10)
    assert s.offset == -17
    assert s.coefficient(-17) == 1


def test_expand_empty_quotient_is_qshift():
    s = expand(EtaQuotient(1, {}, qshift=3), EXACT, 8)
    assert s.offset == 3 and s.coefficient(3) == 1
    assert all(c == 0 for c in s.coeffs()[1:])


def test_expand_requires_room_past_qshift():
    with pytest.raises(Exception):
        expand(EtaQuotient(1, {1: 1}, qshift=5), EXACT, 5)


def test_expand_multiplicative_in_exponent_maps():
    left = EtaQuotient(8, {1: 2, 4: -1})
    right = EtaQuotient(8, {2: 3, 4: -2})
    union = EtaQuotient(8, {1: 2, 2: 3, 4: -3})
    T = 60
    assert agree(expand(union, EXACT, T),
                 expand(left, EXACT, T).mul(expand(right, EXACT, T)))


def test_overpartition_gf_base_case():
    assert overpartition_gf(1, EXACT, 8).coeffs() == [1, 2, 4, 8, 14, 24, 40, 64]


def test_overpartition_gf_constant_term():
    for t in (1, 2, 5, 13):
        assert overpartition_gf(t, EXACT, 3).coefficient(0) == 1


def test_overpartition_t5_mod128_example():
    gf = overpartition_gf(5, EXACT, 8)
    assert gf.coefficient(7) % 128 == 0


def test_overpartition_gf_is_power_of_base():
    T = 300
    base = overpartition_gf(1, EXACT, T)
    for t in (2, 5, 7, 11, 13):
        assert agree(overpartition_gf(t, EXACT, T), base.pow(t), through=T)


def test_overpartition_coefficients_positive_and_monotone_in_t():
    prev = None
    for t in (1, 2, 3, 5, 7):
        cs = overpartition_gf(t, EXACT, 40).coeffs()
        assert all(c > 0 for c in cs)
        if prev is not None:
            assert all(a >= b for a, b in zip(cs[1:], prev[1:]))
        prev = cs


def test_overpartition_mod_cache_agrees_with_exact():
    T = 300
    exact = overpartition_gf(7, EXACT, T)
    for k in (1, 3, 8, 64):
        got = overpartition_gf(7, mod2k(k), T)
        assert got.coeffs() == [c % (1 << k) for c in exact.coeffs()]


def test_colored_partition_gf_values():
    assert colored_partition_gf(1, EXACT, 10).coeffs() == \
        [count_partitions(n) for n in range(10)]
    assert colored_partition_gf(2, EXACT, 3).coefficient(2) == \
        enumerate_colored_partitions(2, 2) == 5
    for t in (1, 2, 5):
        assert colored_partition_gf(t, EXACT, 2).coefficient(0) == 1


def test_eta_quotient_validation():
    with pytest.raises(ValueError):
        EtaQuotient(4, {3: 1})      # 3 does not divide 4
    with pytest.raises(ValueError):
        EtaQuotient(0, {})
    with pytest.raises(ValueError):
        overpartition_gf(0, EXACT, 5)


def test_zero_exponents_dropped():
    assert EtaQuotient(6, {2: 0, 3: 1}).exponents == {3: 1}


# -- grammar -------------------------------------------------------------------


def test_parse_round_trip():
    eq = EtaQuotient(8, {1: 79, 2: -38, 4: 36, 8: -72}, qshift=-17)
    text = format_eta_quotient(eq)
    assert text == "q^-17 * f1^79 * f2^-38 * f4^36 * f8^-72"
    assert parse_eta_quotient(text) == eq


def test_parse_is_whitespace_insensitive():
    a = parse_eta_quotient("q^-1*f2^-4*f4^12*f8^-8")
    b = parse_eta_quotient("  q^-1 * f2^-4   *f4^12* f8^-8 ")
    assert a == b


def test_parse_default_exponent_and_accumulation():
    eq = parse_eta_quotient("f2 * f2^2 * q^1 * q^2")
    assert eq.exponents == {2: 3} and eq.qshift == 3


def test_parse_level_is_lcm():
    assert parse_eta_quotient("f4^1 * f6^-2").M == 12


def test_parse_errors_carry_position():
    with pytest.raises(ValueError, match="position"):
        parse_eta_quotient("f2^1 * g3^1")
    with pytest.raises(ValueError, match="position"):
        parse_eta_quotient("f2^1 ** f3^1")
    with pytest.raises(ValueError):
        parse_eta_quotient("   ")
