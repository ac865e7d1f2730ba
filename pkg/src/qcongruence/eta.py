"""Eta-quotient style products q^s * prod f_d^{r_d} and the partition
generating functions built from them.

f_d denotes the infinite product (q^d; q^d) = prod_{i>=1}(1 - q^{d*i}).
Quotients are stored without the q^{d/24} eta prefactor convention; explicit
powers of q go in ``qshift``, so all exponents stay integral.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .series import (InsufficientTruncation, LaurentSeries, Ring,
                     euler_factor, mod2k)


class EtaQuotient:
    """Level ``M``, map divisor -> exponent, and an explicit q-power shift."""

    __slots__ = ("M", "exponents", "qshift")

    def __init__(self, M: int, exponents: dict[int, int], qshift: int = 0):
        if M < 1:
            raise ValueError("level M must be positive")
        cleaned = {}
        for d, r in sorted(exponents.items()):
            if d < 1 or M % d != 0:
                raise ValueError(f"divisor {d} does not divide level {M}")
            if r != 0:
                cleaned[int(d)] = int(r)
        self.M = int(M)
        self.exponents = cleaned
        self.qshift = int(qshift)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EtaQuotient):
            return NotImplemented
        return (self.M == other.M and self.exponents == other.exponents
                and self.qshift == other.qshift)

    __hash__ = None

    def __repr__(self) -> str:
        return f"EtaQuotient(M={self.M}, exponents={self.exponents}, qshift={self.qshift})"

    def __str__(self) -> str:
        return format_eta_quotient(self)


_TOKEN_Q = re.compile(r"^q\^(-?\d+)$")
_TOKEN_F = re.compile(r"^f(\d+)(?:\^(-?\d+))?$")


def parse_eta_quotient(text: str, M: int | None = None) -> EtaQuotient:
    """Parse the textual grammar ``q^-17 * f1^79 * f2^-38`` (whitespace-free
    or not).  Omitted exponents default to 1; repeated divisors accumulate.

    The level defaults to the lcm of the divisors present.
    """
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty eta-quotient expression")
    qshift = 0
    exponents: dict[int, int] = {}
    pos = 0
    for piece in compact.split("*"):
        if not piece:
            raise ValueError(f"empty factor at position {pos} in {text!r}")
        mq = _TOKEN_Q.match(piece)
        mf = _TOKEN_F.match(piece)
        if mq:
            qshift += int(mq.group(1))
        elif mf:
            d = int(mf.group(1))
            if d < 1:
                raise ValueError(f"divisor must be positive in {piece!r} "
                                 f"at position {pos} in {text!r}")
            e = int(mf.group(2)) if mf.group(2) is not None else 1
            exponents[d] = exponents.get(d, 0) + e
        else:
            raise ValueError(f"unrecognized factor {piece!r} at position {pos} "
                             f"in {text!r} (expected q^INT or fD^INT)")
        pos += len(piece) + 1
    if M is None:
        M = 1
        for d in exponents:
            M = math.lcm(M, d)
    return EtaQuotient(M, exponents, qshift)


def format_eta_quotient(eq: EtaQuotient) -> str:
    parts = []
    if eq.qshift != 0:
        parts.append(f"q^{eq.qshift}")
    for d, r in sorted(eq.exponents.items()):
        parts.append(f"f{d}^{r}")
    if not parts:
        return "f1^0"
    return " * ".join(parts)


def expand(eq: EtaQuotient, ring: Ring, T: int) -> LaurentSeries:
    """Expand q^qshift * prod f_d^{r_d} with truncation T (exclusive).

    Factors are multiplied in increasing divisor order; every f_d has
    valuation 0 and unit leading coefficient, so the result's offset is
    exactly the q-shift.
    """
    if T <= eq.qshift:
        raise InsufficientTruncation(
            f"T={T} must exceed the q-shift {eq.qshift}")
    n = T - eq.qshift
    acc = None
    for d, r in sorted(eq.exponents.items()):
        factor = euler_factor(d, d, r, ring, n)
        acc = factor if acc is None else acc.mul(factor)
    if acc is None:
        acc = LaurentSeries.one(ring, n)
    return acc.shift(eq.qshift)


# Shared mod-2^64 coefficient cache for the overpartition generating
# functions: reducing a Z/2^64 expansion mod 2^k equals expanding in Z/2^k
# directly, so one expansion per (t, truncation bucket) serves every k <= 64.
_MOD64_CACHE: dict[tuple[int, int], np.ndarray] = {}
_CACHE_LIMIT = 32
_BUCKET = 4096


def _overpartition_mod64(t: int, T: int) -> np.ndarray:
    bucket = -(-T // _BUCKET) * _BUCKET
    key = (t, bucket)
    arr = _MOD64_CACHE.get(key)
    if arr is None:
        series = expand(overpartition_eta_quotient(t), mod2k(64), bucket)
        arr = series._coeffs
        if len(_MOD64_CACHE) >= _CACHE_LIMIT:
            _MOD64_CACHE.clear()
        _MOD64_CACHE[key] = arr
    return arr[:T]


def overpartition_eta_quotient(t: int) -> EtaQuotient:
    """The quotient f_2^t / f_1^{2t} generating t-colored overpartitions."""
    if t < 1:
        raise ValueError("color count t must be >= 1")
    return EtaQuotient(2, {1: -2 * t, 2: t})


def overpartition_gf(t: int, ring: Ring, T: int) -> LaurentSeries:
    """Generating function of t-colored overpartitions through q^(T-1)."""
    if t < 1:
        raise ValueError("color count t must be >= 1")
    if ring.is_exact:
        return expand(overpartition_eta_quotient(t), ring, T)
    return LaurentSeries(0, _overpartition_mod64(t, T), ring)


def colored_partition_gf(t: int, ring: Ring, T: int) -> LaurentSeries:
    """Generating function of t-colored partitions, 1 / f_1^t."""
    if t < 1:
        raise ValueError("color count t must be >= 1")
    return euler_factor(1, 1, -t, ring, T)
