"""Cyclotomic polynomials and the divisibility test behind every verdict.

cyclotomic(b) produces the minimal polynomial of the primitive b-th roots
of unity, monic with degree euler_phi(b), by a memoized recursion that
performs one exact monic division per level and keeps every intermediate
value in integers:

  * b not square-free:  Phi_b(y) = Phi_rad(b)(y**(b/rad(b)))
    (for p dividing m, Phi_{m*p}(y) = Phi_m(y**p));
  * b = 2*m, m odd > 1:  Phi_b(y) = Phi_m(-y);
  * b an odd prime:      Phi_b(y) = y**(b-1) + ... + y + 1;
  * b odd square-free composite with largest prime p, m = b/p:
    Phi_b(y) = Phi_m(y**p) / Phi_m(y), an exact division.

Each rule is the telescoped form of the divisor recursion
Phi_b(y) = (y**b - 1) / prod_{d | b, d < b} Phi_d(y); the plain divisor
product and the Moebius product form are kept in the test suite as
independent oracles.

The cache is a plain dict whose entries are fully built immutable values;
concurrent readers and concurrent fills of distinct keys are safe, and a
duplicated fill of the same key just stores an identical value.
"""

from __future__ import annotations

from .numtheory import factorize
from .polynomial import ZERO, IntPoly

_CACHE: dict[int, IntPoly] = {}
_AT_TWO: dict[int, int] = {}


def cyclotomic(b: int) -> IntPoly:
    """The b-th cyclotomic polynomial (monic, degree euler_phi(b))."""
    if b < 1:
        raise ValueError("cyclotomic requires b >= 1")
    poly = _CACHE.get(b)
    if poly is None:
        poly = _compute(b)
        _CACHE[b] = poly
    return poly


def _compute(b: int) -> IntPoly:
    if b == 1:
        return IntPoly([-1, 1])
    if b == 2:
        return IntPoly([1, 1])
    fact = factorize(b)
    radical = 1
    for p, _ in fact:
        radical *= p
    if radical != b:
        return cyclotomic(radical).inflate(b // radical)
    if b % 2 == 0:
        # Square-free even b = 2*m with m odd > 1; degree phi(m) is even,
        # so the substitution keeps the polynomial monic.
        return cyclotomic(b // 2).alternate()
    if len(fact) == 1:
        return IntPoly([1] * b)  # odd prime: 1 + y + ... + y**(b-1)
    p = fact[-1][0]
    m = b // p
    quo, rem = divmod(cyclotomic(m).inflate(p), cyclotomic(m))
    if not rem.is_zero():
        raise AssertionError(f"inexact cyclotomic division at b={b}")
    return quo


def _phi_at_two(b: int) -> int:
    value = _AT_TWO.get(b)
    if value is None:
        value = cyclotomic(b)(2)
        _AT_TWO[b] = value
    return value


def phi_divides(b: int, poly: IntPoly) -> bool:
    """True iff the b-th cyclotomic polynomial divides poly exactly.

    Folding exponents modulo b first is sound because Phi_b divides
    y**b - 1.  A positive answer always comes from a full exact division;
    most negatives are settled by the integer specialization y = 2: if
    Phi_b divides poly in Z[y] then Phi_b(2) divides poly(2) in Z, so a
    nonzero residue there refutes divisibility without dividing.
    """
    if b < 1:
        raise ValueError("phi_divides requires b >= 1")
    if poly.is_zero():
        return True
    phi_b = cyclotomic(b)
    if poly.degree < phi_b.degree:
        return False
    if poly(2) % _phi_at_two(b):
        return False
    folded = poly.reduce_cyclic(b)
    if folded.is_zero():
        return True
    if folded.degree < phi_b.degree:
        return False
    return divmod(folded, phi_b)[1].is_zero()
