"""Elementary number theory: factorization, totient, Moebius, divisor lists.

Everything here is exact integer arithmetic.  Factorization is plain trial
division over a cached prime table; inputs in this package never exceed a
few million, where trial division is both fast enough and trivially
correct.  The two bound functions at the bottom make the cyclotomic scans
finite: ``totient_bounded`` is the exhaustive, float-free enumeration that
all certification paths rely on, while ``rosser_schoenfeld_bound``
evaluates the classical analytic totient lower bound and exists for
diagnostics and cross-checks only.
"""

from __future__ import annotations

import math
from functools import lru_cache

gcd = math.gcd

# Euler-Mascheroni constant, used only inside rosser_schoenfeld_bound.
_EULER_GAMMA = 0.5772156649015329

_prime_table: list[int] = [2, 3, 5, 7, 11, 13]


def _primes_upto(limit: int) -> list[int]:
    """Primes <= limit, extending a shared table by sieving on demand."""
    global _prime_table
    if _prime_table[-1] < limit:
        top = max(limit, 2 * _prime_table[-1])
        sieve = bytearray([1]) * (top + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(top) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        _prime_table = [i for i in range(2, top + 1) if sieve[i]]
    return _prime_table


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.

    Each reported prime is certified by trial division: no prime up to its
    square root divides it.  The product of prime**exponent recovers n.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: list[tuple[int, int]] = []
    rest = n
    for p in _primes_upto(math.isqrt(n) + 1):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                e += 1
                rest //= p
            out.append((p, e))
    if rest > 1:
        out.append((rest, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending (first 1, last n)."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Euler's totient: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = n
    for p, _ in factorize(n):
        out //= p
        out *= p - 1
    return out


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is square-free, else (-1)**(#primes)."""
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    fact = factorize(n)
    if any(e > 1 for _, e in fact):
        return 0
    return -1 if len(fact) % 2 else 1


def rosser_schoenfeld_bound(max_phi: int) -> int:
    """Largest b >= 3 permitted by the analytic totient lower bound.

    The bound b / (e**gamma * log log b + 2.51 / log log b) < phi(b) holds
    for every b >= 3, so phi(b) <= max_phi forces
    b < max_phi * (e**gamma * log log b + 2.51 / log log b).  This scans
    every b in [3, 2 * max_phi**2] and returns the largest one satisfying
    that inequality.  The comparison runs in floating arithmetic with a
    relative tolerance of 1e-12, ties rounding toward acceptance (a larger,
    still-safe answer); the gap at the crossover is of order 0.1 for the
    sizes used here, far above the tolerance.

    Diagnostic only: certification paths use totient_bounded, which never
    touches floating arithmetic.
    """
    if max_phi < 2:
        raise ValueError("rosser_schoenfeld_bound requires max_phi >= 2")
    coeff = math.exp(_EULER_GAMMA)
    best = 3
    for b in range(3, 2 * max_phi * max_phi + 1):
        loglog = math.log(math.log(b))
        f = max_phi * (coeff * loglog + 2.51 / loglog)
        if b < f + 1e-12 * max(1.0, f):
            best = b
    return best


_phi_sieve: list[int] = []


def _phi_upto(limit: int) -> list[int]:
    """Totient table phi[0..limit], grown geometrically and cached.

    After each rebuild the table is checked against phi(b) >= sqrt(b/2)
    for every b >= 3, the inequality that makes the 2*D**2 scan bound in
    totient_bounded exhaustive.
    """
    global _phi_sieve
    if len(_phi_sieve) <= limit:
        top = max(limit, 2 * len(_phi_sieve), 16)
        phi = list(range(top + 1))
        for p in range(2, top + 1):
            if phi[p] == p:  # p prime
                for k in range(p, top + 1, p):
                    phi[k] -= phi[k] // p
        for b in range(3, top + 1):
            if 2 * phi[b] * phi[b] < b:
                raise AssertionError(f"phi({b}) below sqrt(b/2)")
        _phi_sieve = phi
    return _phi_sieve


@lru_cache(maxsize=None)
def _totient_bounded(max_phi: int) -> tuple[int, ...]:
    phi = _phi_upto(2 * max_phi * max_phi)
    return tuple(
        b for b in range(3, 2 * max_phi * max_phi + 1) if phi[b] <= max_phi
    )


def totient_bounded(max_phi: int) -> list[int]:
    """Every b >= 3 with euler_phi(b) <= max_phi, ascending and exhaustive.

    Exhaustiveness needs no analytic input: phi(b) >= sqrt(b/2) for all
    b >= 3 (asserted over the whole sieve), so any b with phi(b) <= max_phi
    satisfies b <= 2 * max_phi**2, and scanning that range with exact phi
    values is complete.
    """
    if max_phi < 1:
        raise ValueError("totient_bounded requires max_phi >= 1")
    return list(_totient_bounded(max_phi))
