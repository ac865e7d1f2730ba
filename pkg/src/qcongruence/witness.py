"""Witness certificates: prefactor * (product of extracted progressions) ==
polynomial(hauptmodul), plus the common-factor divisibility that yields a
congruence.

A certificate packages the output of a Ramanujan-Kolberg style search: an
eta-quotient prefactor, a hauptmodul eta-quotient t, and exact integer
polynomial coefficients.  Verification here is truncation-bounded
coefficient equality of both sides as Laurent series — explicitly "checked
through q^T", never "proved"; the modular-function argument that upgrades
the check to a proof is out of scope and the curve level N is carried as
data only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .dissect import Progression, extract
from .eta import EtaQuotient, expand, format_eta_quotient, parse_eta_quotient
from .series import EXACT, InsufficientTruncation, LaurentSeries, first_difference


@dataclass(frozen=True)
class WitnessCertificate:
    """One witness-identity record.

    ``r`` is the input eta-quotient (divisor -> exponent on divisors of M)
    whose expansion generates the sequence being dissected; ``pset`` is the
    full set of residues whose extracted streams multiply into the identity;
    ``poly`` lists exact coefficients from degree ``poly_min_degree`` up.
    """

    N: int
    M: int
    r: dict[int, int]
    m: int
    j: int
    pset: frozenset[int]
    prefactor: EtaQuotient
    hauptmodul: EtaQuotient
    poly: tuple[int, ...]
    poly_min_degree: int = 1
    claimed_common_factor: int = 1
    id: str = ""

    def __post_init__(self):
        if self.N < 1 or self.M < 1 or self.m < 1:
            raise ValueError("N, M, m must be positive")
        for d in self.r:
            if d < 1 or self.M % d != 0:
                raise ValueError(f"input divisor {d} does not divide M={self.M}")
        if self.j not in self.pset:
            raise ValueError(f"j={self.j} must belong to the residue set {set(self.pset)}")
        for jp in self.pset:
            if not 0 <= jp < self.m:
                raise ValueError(f"residue {jp} not in [0, {self.m})")
        if not self.poly:
            raise ValueError("certificate polynomial must be nonempty")
        if self.poly_min_degree not in (0, 1):
            raise ValueError("poly_min_degree must be 0 or 1")
        if self.claimed_common_factor < 1:
            raise ValueError("claimed common factor must be positive")
        for c in self.poly:
            if c % self.claimed_common_factor != 0:
                raise ValueError(
                    f"claimed common factor {self.claimed_common_factor} does not "
                    f"divide polynomial coefficient {c}")
        if not self.id:
            object.__setattr__(self, "id", f"M{self.M}-m{self.m}-j{self.j}")

    @property
    def degree(self) -> int:
        return self.poly_min_degree + len(self.poly) - 1


@dataclass(frozen=True)
class WitnessReport:
    certificate_id: str
    truncation: int
    identity_matched: bool
    first_mismatch: tuple[int, int, int] | None
    gcd_of_poly: int
    implied_modulus: int | None  # largest power of 2 dividing the gcd

    def __post_init__(self):
        if self.implied_modulus is not None and self.gcd_of_poly % self.implied_modulus:
            raise ValueError("implied modulus must divide the polynomial gcd")

    def summary(self) -> str:
        state = ("matched" if self.identity_matched
                 else f"MISMATCH at q^{self.first_mismatch[0]}: "
                      f"{self.first_mismatch[1]} != {self.first_mismatch[2]}")
        mod = ("undefined" if self.implied_modulus is None
               else str(self.implied_modulus))
        return (f"witness {self.certificate_id}: identity {state} "
                f"(checked through q^{self.truncation - 1}); "
                f"poly gcd {self.gcd_of_poly}, 2-power part {mod}")


def certificate_common_factor(c: WitnessCertificate) -> tuple[int, int | None]:
    """gcd of the polynomial coefficients and its 2-adic valuation.

    Degenerate all-zero polynomials report gcd 0 with valuation None rather
    than adopting an arbitrary convention.
    """
    if not c.poly:
        raise ValueError("certificate polynomial is empty")
    g = 0
    for coeff in c.poly:
        g = math.gcd(g, coeff)
    if g == 0:
        return 0, None
    return g, (g & -g).bit_length() - 1


def verify_witness(c: WitnessCertificate, T: int) -> WitnessReport:
    """Compare prefactor * prod_{j' in pset} extracted-stream against
    poly(hauptmodul), coefficient-wise over T Laurent coefficients starting
    at the lower of the two sides' lowest exponents."""
    if T < 1:
        raise InsufficientTruncation("need T >= 1 output coefficients")
    base = expand(EtaQuotient(c.M, c.r), EXACT, c.m * T + max(c.pset) + 1)
    lhs = expand(c.prefactor, EXACT, c.prefactor.qshift + T)
    for jp in sorted(c.pset):
        lhs = lhs.mul(extract(base, Progression(c.m, jp)).truncate(T))

    h = expand(c.hauptmodul, EXACT, c.hauptmodul.qshift + T)
    rhs = None
    power = LaurentSeries.one(EXACT, T) if c.poly_min_degree == 0 else h
    for i, coeff in enumerate(c.poly):
        term = power.scale(coeff)
        rhs = term if rhs is None else rhs.add(term)
        if i + 1 < len(c.poly):
            power = power.mul(h)

    lo = min(lhs.offset, rhs.offset)
    through = lo + T
    if min(lhs.trunc, rhs.trunc) < through:
        raise InsufficientTruncation(
            "internal truncation plan fell short of the comparison window")
    diff = first_difference(lhs, rhs, through=through)
    gcd, v2 = certificate_common_factor(c)
    return WitnessReport(
        certificate_id=c.id,
        truncation=through,
        identity_matched=diff is None,
        first_mismatch=diff,
        gcd_of_poly=gcd,
        implied_modulus=None if v2 is None else 1 << v2,
    )


# The shipped certificate for 5-colored overpartitions on 8n+7: every
# polynomial coefficient is divisible by 128, hence the mod-128 congruence.
_BUILTIN_POLY = (
    162177965096960,          # t^1
    12820855335682048,        # t^2
    181969724152741888,       # t^3
    911076328575336448,       # t^4
    2131168862538825728,      # t^5
    2711338639077408768,      # t^6
    2054802074125729792,      # t^7
    979900817664376832,       # t^8
    302871878945472512,       # t^9
    61243801104023552,        # t^10
    8026570602053632,         # t^11
    661947909931008,          # t^12
    32519056130048,           # t^13
    868870094848,             # t^14
    10846240768,              # t^15
    47761408,                 # t^16
    37760,                    # t^17
)


def builtin_certificate() -> WitnessCertificate:
    """The shipped 5-colored / 8n+7 / mod-128 witness certificate."""
    return WitnessCertificate(
        N=8,
        M=2,
        r={1: -10, 2: 5},
        m=8,
        j=7,
        pset=frozenset({7}),
        prefactor=EtaQuotient(8, {1: 79, 2: -38, 4: 36, 8: -72}, qshift=-17),
        hauptmodul=EtaQuotient(8, {2: -4, 4: 12, 8: -8}, qshift=-1),
        poly=_BUILTIN_POLY,
        poly_min_degree=1,
        claimed_common_factor=128,
        id="t5-8n+7-mod128",
    )


# -- line-oriented text format -------------------------------------------
#
#   id t5-8n+7-mod128
#   N 8
#   M 2
#   r 1:-10 2:5
#   m 8
#   j 7
#   P 7
#   AB 1
#   prefactor q^-17 * f1^79 * f2^-38 * f4^36 * f8^-72
#   hauptmodul q^-1 * f2^-4 * f4^12 * f8^-8
#   poly_min_degree 1
#   poly 162177965096960 12820855335682048 ... 37760
#   common_factor 128
#
# '#' starts a comment; blank lines are ignored; poly is lowest-degree-first
# exact decimals.  AB and poly_min_degree are optional (defaults "1").  Only
# AB = 1 is supported: the general per-g section is reserved but no data
# exercises it.


def format_certificate(c: WitnessCertificate) -> str:
    lines = [
        f"id {c.id}",
        f"N {c.N}",
        f"M {c.M}",
        "r " + " ".join(f"{d}:{e}" for d, e in sorted(c.r.items())),
        f"m {c.m}",
        f"j {c.j}",
        "P " + ",".join(str(x) for x in sorted(c.pset)),
        "AB 1",
        f"prefactor {format_eta_quotient(c.prefactor)}",
        f"hauptmodul {format_eta_quotient(c.hauptmodul)}",
        f"poly_min_degree {c.poly_min_degree}",
        "poly " + " ".join(str(x) for x in c.poly),
        f"common_factor {c.claimed_common_factor}",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> WitnessCertificate:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(" ")
        if not value.strip():
            raise ValueError(f"line {lineno}: field {key!r} has no value")
        if key in fields:
            raise ValueError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value.strip()

    required = ("N", "M", "r", "m", "j", "P", "prefactor", "hauptmodul",
                "poly", "common_factor")
    missing = [k for k in required if k not in fields]
    if missing:
        raise ValueError(f"certificate is missing fields: {', '.join(missing)}")
    if fields.get("AB", "1") != "1":
        raise ValueError("only AB = 1 certificates are supported; the per-g "
                         "section for larger AB sets is reserved but unimplemented")

    r = {}
    for pair in fields["r"].split():
        d, _, e = pair.partition(":")
        r[int(d)] = int(e)
    return WitnessCertificate(
        N=int(fields["N"]),
        M=int(fields["M"]),
        r=r,
        m=int(fields["m"]),
        j=int(fields["j"]),
        pset=frozenset(int(x) for x in fields["P"].split(",")),
        prefactor=parse_eta_quotient(fields["prefactor"]),
        hauptmodul=parse_eta_quotient(fields["hauptmodul"]),
        poly=tuple(int(x) for x in fields["poly"].split()),
        poly_min_degree=int(fields.get("poly_min_degree", "1")),
        claimed_common_factor=int(fields["common_factor"]),
        id=fields.get("id", ""),
    )


def load_certificate(path: str | Path) -> WitnessCertificate:
    return parse_certificate(Path(path).read_text())


def save_certificate(c: WitnessCertificate, path: str | Path) -> None:
    Path(path).write_text(format_certificate(c))


def builtin_certificate_text() -> str:
    """The shipped certificate file, as packaged."""
    return resources.files("qcongruence").joinpath(
        "data/builtin_certificate.txt").read_text()
