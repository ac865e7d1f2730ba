"""
Replaying a witness certificate
===============================

A witness certificate explains *why* a congruence holds: an eta-quotient
prefactor times the product of extracted progression streams equals a
polynomial in a hauptmodul eta-quotient, and every polynomial coefficient
shares a common factor.  Replaying the identity coefficient-by-coefficient
(here through 200 Laurent coefficients, exactly over Z) and taking the
2-power part of the gcd recovers the congruence modulus.
"""

from qcongruence import (WitnessCertificate, builtin_certificate,
                         certificate_common_factor, format_certificate,
                         verify_witness)

cert = builtin_certificate()
print("certificate file format:")
print(format_certificate(cert))

# The identity check: exact equality of both sides, including the negative
# exponents contributed by the q^-17 prefactor shift.
report = verify_witness(cert, 200)
print(report.summary())

# The gcd of the polynomial coefficients carries the congruence: its
# 2-power part is 128 (and 37760 / 128 = 295 is odd, so 128 is sharp).
gcd, v2 = certificate_common_factor(cert)
print(f"poly gcd = {gcd} = 2^{v2} * {gcd >> v2}")

# Tampering with a single coefficient is caught at the lowest exponent the
# perturbed term reaches: degree 17 times the hauptmodul valuation -1.
poly = list(cert.poly)
poly[-1] += 1
mutated = WitnessCertificate(
    N=cert.N, M=cert.M, r=cert.r, m=cert.m, j=cert.j, pset=cert.pset,
    prefactor=cert.prefactor, hauptmodul=cert.hauptmodul, poly=tuple(poly),
    claimed_common_factor=1, id="tampered")
print(verify_witness(mutated, 200).summary())
