"""Closed-form predicates for circulant nut graphs, cross-validated
elsewhere against both the cyclotomic route and the kernel oracle.

Naming note: the "gap set" for a parameter t is {1, ..., 2t+1} \\ {t}
(see circulant.gap_set); "consecutive" sets are runs {x, ..., x+2t-1}.
"""

from __future__ import annotations

from math import gcd

from .oracle import enumerate_balanced, oracle_is_nut


def vt_feasible(n: int, d: int) -> bool:
    """Order/degree feasibility for a vertex-transitive nut graph.

    Necessary only: either d = 0 (mod 4), n even and n >= d + 4, or
    d = 2 (mod 4), n = 0 (mod 4) and n >= d + 6.  It is not sufficient
    for circulants -- no_nut_at_minimal_order shows (4t+4, 4t) feasible
    pairs with no circulant witness for even t.
    """
    if d % 4 == 0:
        return n % 2 == 0 and n >= d + 4
    if d % 4 == 2:
        return n % 4 == 0 and n >= d + 6
    return False


def consecutive_is_nut(n: int, x: int, t: int) -> bool:
    """Nut criterion for the consecutive set {x, x+1, ..., x+2t-1}.

    Circ(n, {x..x+2t-1}) with even n >= 2x + 4t is a nut graph iff
    gcd(n/2, t) = gcd(n/2, 2x + 2t - 1) = 1.
    """
    if x < 1 or t < 1:
        raise ValueError("consecutive_is_nut requires x, t >= 1")
    if n % 2 or n < 2 * x + 4 * t:
        raise ValueError("consecutive_is_nut requires even n >= 2x + 4t")
    half = n // 2
    return gcd(half, t) == 1 and gcd(half, 2 * x + 2 * t - 1) == 1


def initial_segment_is_nut(n: int, d: int) -> bool:
    """Nut criterion for the initial segment {1, ..., d/2}, 4 | d.

    Circ(n, {1..d/2}) with even n >= d + 4 is a nut graph iff
    gcd(n, d/2 + 1) = 1 and gcd(n/2, d/4) = 1.  This is the x = 1 case of
    consecutive_is_nut, which is asserted on every call.
    """
    if d % 4:
        raise ValueError("initial_segment_is_nut requires 4 | d")
    if n % 2 or n < d + 4:
        raise ValueError("initial_segment_is_nut requires even n >= d + 4")
    value = gcd(n, d // 2 + 1) == 1 and gcd(n // 2, d // 4) == 1
    if value != consecutive_is_nut(n, 1, d // 4):
        raise AssertionError("initial segment disagrees with x=1 run")
    return value


def gap_set_obstruction(t: int, n: int) -> bool:
    """True when (t, n) hits a known failure of the gap set.

    Circ(n, gap_set(t)) is not a nut graph whenever t = 1 (mod 10) and
    5 | n, or t = 15 (mod 18) and 9 | n.
    """
    if t % 2 == 0 or t < 1:
        raise ValueError("gap_set_obstruction requires odd t")
    if n % 2 or n < 4 * t + 4:
        raise ValueError("gap_set_obstruction requires even n >= 4t + 4")
    return (t % 10 == 1 and n % 5 == 0) or (t % 18 == 15 and n % 9 == 0)


def gap_set_universal_t(t: int) -> bool:
    """True for the odd t >= 3 whose gap set is universal:
    t != 1 (mod 10) and t != 15 (mod 18)."""
    return t % 2 == 1 and t >= 3 and t % 10 != 1 and t % 18 != 15


def gap_exponents(t: int) -> tuple[int, ...]:
    """The eight exponents of the gap set's lacunary product polynomial."""
    return (
        4 * t + 3,
        3 * t + 2,
        3 * t + 1,
        2 * t + 2,
        2 * t + 1,
        t + 2,
        t + 1,
        0,
    )


def unique_residue_exponent(t: int, p: int) -> int | None:
    """Smallest of the eight gap exponents whose residue mod p is unique.

    Requires odd t >= 3 with t != 1 (mod 10) and a prime p >= 5.  Such an
    exponent always exists; None would be a counterexample and the tests
    treat it as a failure.
    """
    if t < 3 or t % 2 == 0 or t % 10 == 1:
        raise ValueError("requires odd t >= 3 with t != 1 (mod 10)")
    if p < 5 or any(p % q == 0 for q in range(2, p) if q * q <= p):
        raise ValueError("requires a prime p >= 5")
    exps = gap_exponents(t)
    counts: dict[int, int] = {}
    for e in exps:
        counts[e % p] = counts.get(e % p, 0) + 1
    unique = [e for e in exps if counts[e % p] == 1]
    return min(unique) if unique else None


def no_nut_at_minimal_order(t: int, *, allow_large: bool = False) -> bool:
    """Exhaustively confirm that no 4t-regular circulant nut graph of
    order 4t + 4 exists for even t.

    Every candidate generator set is a balanced 2t-subset of
    {1, ..., 2t+1} and is checked by the kernel oracle.  Enumeration grows
    combinatorially, so t > 6 requires allow_large=True.
    """
    if t % 2 or t < 2:
        raise ValueError("no_nut_at_minimal_order requires even t >= 2")
    if t > 6 and not allow_large:
        raise ValueError("t > 6 is guarded; pass allow_large=True")
    n = 4 * t + 4
    return not any(oracle_is_nut(n, s) for s in enumerate_balanced(n, t))
