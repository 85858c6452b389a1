#!/usr/bin/env python3
"""Reproduce the remainder tables that certify universal generator sets.

A generator set S is universal when Circ(n, S) is a nut graph for every
even n >= 2*max(S) + 2.  Certifying that takes finitely many exact
polynomial divisions: only cyclotomic polynomials of degree at most
2*max(S) can divide the cleared eigenvalue polynomial, and the totient
lower bound phi(b) >= sqrt(b/2) makes the list of candidate b finite.
"""

from circnut import (
    appendix_table,
    gap_set,
    is_universal,
    pstar,
    pstar_table,
    rosser_schoenfeld_bound,
    totient_bounded,
)

s3 = gap_set(3)
print(f"generator set {s3}, cleared eigenvalue polynomial:")
print(f"  {pstar(s3)}")
print(f"scan range: phi(b) <= 14 means b <= {rosser_schoenfeld_bound(14)};")
print(f"the {len(totient_bounded(14))} admissible b and their remainders:")
for b, remainder in pstar_table(s3):
    print(f"  {b:3d}: {remainder}")
print(f"no remainder vanishes, so {s3} is universal:",
      is_universal(s3).universal)

print()
print("per-residue table modulo 10 for the whole gap-set family")
print("({1,...,2t+1} minus t; row r covers every t = r mod 10):")
for r, remainder in appendix_table(10):
    marker = "   <- vanishes: t = 1 (mod 10) fails at orders divisible by 10" \
        if remainder.is_zero() else ""
    print(f"  {r}: {remainder}{marker}")
