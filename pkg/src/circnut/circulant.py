"""Circulant graphs: generator sets, eigenvalue polynomials, nut verdicts.

A circulant graph Circ(n, S) has vertices 0..n-1 and edges i <-> i +- s
(mod n) for each step s in the generator set S.  Its adjacency spectrum is
P(w**j) for j = 0..n-1, where w = exp(2*pi*i/n) and P is an integer
polynomial determined by S.  The graph is a nut graph exactly when 0 is an
eigenvalue of multiplicity one whose eigenvector has full support, which
for circulants happens iff n is even, S is balanced, and P(w**j) != 0 for
every j in 1..n/2-1.

Two polynomials carry the analysis:

  * rep_poly(S, n): the order-aware representative of degree < n; its
    value at w**j is exactly the eigenvalue lambda_j, including the
    half-order convention where a step s = n/2 contributes the single
    term y**(n/2).

  * pstar(S): the order-free form y**max(S) * P(y), of degree 2*max(S).
    For max(S) < n/2 it differs from rep_poly folded into degree < n only
    by a monomial factor, which never affects divisibility by a cyclotomic
    polynomial Phi_b with b >= 2.

A vanishing eigenvalue at some j in 1..n/2-1 is the same thing as a root
at a primitive b-th root of unity for some divisor b >= 3 of n (map j to
b = n/gcd(j, n); conversely j = n/b < n/2 realizes every divisor b >= 3),
and that in turn is the same as Phi_b dividing the representative
polynomial.  So the per-order check scans divisors of n instead of all j.

For order-free certification: if Phi_b divides pstar(S) for some b >= 3
then euler_phi(b) <= 2*max(S), so scanning b over
totient_bounded(2*max(S)) is exhaustive; any failing b kills infinitely
many even orders (all multiples of b), while a zero of pstar away from
the unit circle's roots of unity is irrelevant to circulant spectra.
Hence S is universal -- Circ(n, S) is a nut graph for every even
n >= 2*max(S) + 2 -- iff S is balanced and no scanned b divides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import cyclotomic, phi_divides
from .numtheory import divisors, euler_phi, totient_bounded
from .polynomial import IntPoly, Y_MINUS_1


@dataclass(frozen=True)
class GeneratorSet:
    """Strictly increasing positive step sizes defining a circulant graph."""

    elements: tuple[int, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("generator set must be nonempty")
        if any(not isinstance(s, int) or s < 1 for s in self.elements):
            raise ValueError("generators must be integers >= 1")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("generators must be strictly increasing")

    @classmethod
    def of(cls, items) -> "GeneratorSet":
        """Build from any iterable of distinct positive integers."""
        elems = sorted(items)
        return cls(tuple(elems))

    @property
    def top(self) -> int:
        return self.elements[-1]

    @property
    def odd_count(self) -> int:
        return sum(1 for s in self.elements if s % 2)

    @property
    def even_count(self) -> int:
        return len(self.elements) - self.odd_count

    @property
    def balanced(self) -> bool:
        """Equal numbers of odd and even steps (necessary for a nut)."""
        return self.odd_count == self.even_count

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, s) -> bool:
        return s in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.elements) + "}"


# NutVerdict reasons.
NUT = "Nut"
ODD_ORDER = "OddOrder"
HALF_ORDER_GENERATOR = "HalfOrderGenerator"
UNBALANCED_PARITY = "UnbalancedParity"
CYCLOTOMIC_WITNESS = "CyclotomicWitness"
GENERATOR_TOO_LARGE = "GeneratorTooLarge"


@dataclass(frozen=True)
class NutVerdict:
    """Decision for a fixed (n, S), with a re-checkable witness on failure.

    reason is one of the module constants; witness_b is set only for
    CyclotomicWitness and names a divisor b >= 3 of n whose cyclotomic
    polynomial divides the representative polynomial.
    """

    is_nut: bool
    reason: str
    witness_b: int | None = None

    def __post_init__(self):
        if self.is_nut != (self.reason == NUT):
            raise ValueError("is_nut must match reason")
        if (self.witness_b is not None) != (self.reason == CYCLOTOMIC_WITNESS):
            raise ValueError("witness_b accompanies CyclotomicWitness only")


@dataclass(frozen=True)
class UniversalityReport:
    """Outcome of the order-free scan certifying S over all admissible n."""

    universal: bool
    degree_bound: int
    scanned_b: tuple[int, ...]
    failing_b: tuple[int, ...]
    min_order: int


def pstar(s: GeneratorSet) -> IntPoly:
    """Cleared eigenvalue polynomial y**max(S) * P(y).

    Degree exactly 2*max(S), constant term 1, palindromic.
    """
    m = s.top
    coeffs = [0] * (2 * m + 1)
    for step in s:
        coeffs[m + step] += 1
        coeffs[m - step] += 1
    return IntPoly(coeffs)


def gap_set(t: int) -> GeneratorSet:
    """The 2t-element set {1, ..., 2t+1} with t removed."""
    if t < 2:
        raise ValueError("gap_set requires t >= 2")
    return GeneratorSet(tuple(s for s in range(1, 2 * t + 2) if s != t))


def q_poly(t: int) -> IntPoly:
    """(y - 1) * pstar(gap_set(t)), the eight-term lacunary polynomial
    y**(4t+3) - y**(3t+2) + y**(3t+1) - y**(2t+2) + y**(2t+1)
    - y**(t+2) + y**(t+1) - 1."""
    if t < 2:
        raise ValueError("q_poly requires t >= 2")
    poly = IntPoly.from_terms(
        [
            (4 * t + 3, 1),
            (3 * t + 2, -1),
            (3 * t + 1, 1),
            (2 * t + 2, -1),
            (2 * t + 1, 1),
            (t + 2, -1),
            (t + 1, 1),
            (0, -1),
        ]
    )
    if poly != Y_MINUS_1 * pstar(gap_set(t)):
        raise AssertionError(f"eight-term identity failed at t={t}")
    return poly


def rep_poly(s: GeneratorSet, n: int) -> IntPoly:
    """Order-n representative polynomial of degree < n.

    Evaluating it at w**j gives the eigenvalue lambda_j exactly: each step
    below n/2 contributes y**step + y**(n-step), a step equal to n/2
    contributes the single term y**(n/2).
    """
    if n < 2 or n % 2:
        raise ValueError("rep_poly requires an even order n >= 2")
    if 2 * s.top > n:
        raise ValueError("max generator exceeds n/2")
    coeffs = [0] * n
    half = n // 2
    for step in s:
        if step < half:
            coeffs[step] += 1
            coeffs[n - step] += 1
        else:
            coeffs[half] += 1
    return IntPoly(coeffs)


def is_nut(s: GeneratorSet, n: int) -> NutVerdict:
    """Decide whether Circ(n, S) is a nut graph, with a reason.

    Checks in order: generators fitting in n/2, even order, no half-order
    generator, parity balance, and finally -- for each divisor b >= 3 of n,
    ascending -- that the b-th cyclotomic polynomial does not divide the
    representative polynomial.  The first failing divisor is returned as
    the witness.
    """
    if n < 2:
        raise ValueError("is_nut requires n >= 2")
    if 2 * s.top > n:
        return NutVerdict(False, GENERATOR_TOO_LARGE)
    if n % 2:
        return NutVerdict(False, ODD_ORDER)
    if n // 2 in s:
        # The half-order eigenvalue is then odd, hence nonzero, and the
        # graph cannot have the required kernel.
        return NutVerdict(False, HALF_ORDER_GENERATOR)
    if not s.balanced:
        return NutVerdict(False, UNBALANCED_PARITY)
    rep = rep_poly(s, n)
    for b in divisors(n):
        if b >= 3 and phi_divides(b, rep):
            return NutVerdict(False, CYCLOTOMIC_WITNESS, witness_b=b)
    return NutVerdict(True, NUT)


def zero_multiplicity(s: GeneratorSet, n: int) -> int:
    """Exact multiplicity of eigenvalue 0 of the adjacency matrix.

    Eigenvalues come in conjugate classes indexed by divisors b of n, each
    class holding euler_phi(b) eigenvalues that vanish together; b = 1 is
    the degree P(1) > 0 and never contributes.
    """
    rep = rep_poly(s, n)
    return sum(
        euler_phi(b)
        for b in divisors(n)
        if b >= 2 and phi_divides(b, rep)
    )


def is_universal(s: GeneratorSet) -> UniversalityReport:
    """Certify S for every even order n >= 2*max(S) + 2 at once.

    Scans every b >= 3 with euler_phi(b) <= 2*max(S) (exhaustive for roots
    of pstar at roots of unity) and reports each b whose cyclotomic
    polynomial divides pstar(S).
    """
    degree_bound = 2 * s.top
    scanned = totient_bounded(degree_bound)
    p = pstar(s)
    failing = tuple(b for b in scanned if phi_divides(b, p))
    return UniversalityReport(
        universal=s.balanced and not failing,
        degree_bound=degree_bound,
        scanned_b=tuple(scanned),
        failing_b=failing,
        min_order=degree_bound + 2,
    )


def pstar_table(s: GeneratorSet) -> list[tuple[int, IntPoly]]:
    """Remainders of pstar(S) modulo Phi_b over the full scan range."""
    p = pstar(s)
    return [
        (b, divmod(p, cyclotomic(b))[1]) for b in totient_bounded(2 * s.top)
    ]


# The b values whose folded remainder tables certify the gap sets.
APPENDIX_B = (3, 5, 6, 7, 10, 14, 15, 21, 30, 42)


def _folded_q(residue: int, b: int) -> IntPoly:
    return IntPoly.from_terms(
        [
            ((4 * residue + 3) % b, 1),
            ((3 * residue + 2) % b, -1),
            ((3 * residue + 1) % b, 1),
            ((2 * residue + 2) % b, -1),
            ((2 * residue + 1) % b, 1),
            ((residue + 2) % b, -1),
            ((residue + 1) % b, 1),
            (0, -1),
        ]
    )


def appendix_table(b: int) -> list[tuple[int, IntPoly]]:
    """Per-residue remainder table of the folded eight-term polynomial.

    For each r in 0..b-1, fold the eight exponents
    {4t+3, 3t+2, 3t+1, 2t+2, 2t+1, t+2, t+1, 0} modulo b for any t with
    t = r (mod b) -- each exponent is linear in t, so only r matters; two
    representatives are still computed and compared -- then reduce modulo
    the b-th cyclotomic polynomial.  A zero row at residue r means the
    gap set for every t = r (mod b) fails at every order divisible by b.
    """
    if b < 3:
        raise ValueError("appendix_table requires b >= 3")
    phi_b = cyclotomic(b)
    rows = []
    for r in range(b):
        folded = _folded_q(r, b)
        if folded != _folded_q(r + b, b):
            raise AssertionError("fold depends on the representative")
        rows.append((r, divmod(folded, phi_b)[1]))
    return rows
