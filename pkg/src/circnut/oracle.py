"""Independent ground truth: exact adjacency matrices and kernel bases.

This module never touches the polynomial machinery.  It builds the 0/1
adjacency matrix of a circulant graph, computes the exact kernel of any
square integer matrix by fraction-free elimination (Bareiss pivoting on
the active row pair, with row swaps) followed by exact rational back
substitution, and decides nut-ness straight from the definition: nullity
one and a kernel vector with no zero entries.

Kernel vectors are normalized to integer entries with content 1 and a
positive last nonzero entry, so outputs are byte-stable.

Exact elimination is cubic with coefficient growth, so orders are capped
at 512 by default; set the environment variable CIRCNUT_ORACLE_CAP to
raise the cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .circulant import GeneratorSet

ORACLE_CAP_ENV = "CIRCNUT_ORACLE_CAP"
_DEFAULT_CAP = 512


def _order_cap() -> int:
    return int(os.environ.get(ORACLE_CAP_ENV, _DEFAULT_CAP))


def check_order_cap(n: int) -> None:
    """Reject orders beyond the exact-elimination cap (env-overridable)."""
    cap = _order_cap()
    if n > cap:
        raise ValueError(
            f"order {n} exceeds the oracle cap {cap}; "
            f"set {ORACLE_CAP_ENV} to override"
        )


@dataclass(frozen=True)
class KernelResult:
    """Exact kernel of an integer matrix.

    basis holds content-1 integer vectors (one per free column, ascending)
    that are re-multiplied against the matrix on construction.
    full_support is True only when nullity == 1 and the single basis
    vector has no zero entry.
    """

    nullity: int
    basis: tuple[tuple[int, ...], ...]
    full_support: bool


def adjacency(n: int, s: GeneratorSet) -> list[list[int]]:
    """Symmetric 0/1 circulant adjacency matrix with zero diagonal.

    A step equal to n/2 joins i to the single vertex i + n/2, so it adds
    one to each row sum; every smaller step adds two.
    """
    if n < 2:
        raise ValueError("adjacency requires n >= 2")
    if 2 * s.top > n:
        raise ValueError("max generator exceeds n/2")
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        row = mat[i]
        for step in s:
            row[(i + step) % n] = 1
            row[(i - step) % n] = 1
    return mat


def kernel(matrix: list[list[int]]) -> KernelResult:
    """Exact rational kernel basis of a square integer matrix.

    Forward pass: fraction-free elimination; every update
    (pivot*a[i][j] - a[i][c]*a[r][j]) / previous_pivot is an exact integer
    division (each entry stays a minor of the input, so row swaps are
    harmless), and the division is checked.  Backward pass: one rational
    back substitution per free column, then integer normalization.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("kernel requires a square matrix")
    mat = [list(row) for row in matrix]
    prev = 1
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, n) if mat[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        row_r = mat[r]
        for i in range(r + 1, n):
            row_i = mat[i]
            f = row_i[c]
            for j in range(c, n):
                q, rem = divmod(piv * row_i[j] - f * row_r[j], prev)
                if rem:
                    raise AssertionError("inexact fraction-free step")
                row_i[j] = q
        pivot_cols.append(c)
        prev = piv
        r += 1
        if r == n:
            break
    rank = r
    free_cols = [c for c in range(n) if c not in pivot_cols]

    basis: list[tuple[int, ...]] = []
    for fc in free_cols:
        vec: list[Fraction] = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            pc = pivot_cols[i]
            acc = Fraction(0)
            for j in range(pc + 1, n):
                if vec[j]:
                    acc += mat[i][j] * vec[j]
            vec[pc] = -acc / mat[i][pc]
        basis.append(_normalize(vec))

    for vec in basis:
        for row in matrix:
            if sum(a * v for a, v in zip(row, vec)):
                raise AssertionError("kernel vector fails re-multiplication")

    nullity = n - rank
    full = nullity == 1 and all(v != 0 for v in basis[0])
    return KernelResult(nullity=nullity, basis=tuple(basis), full_support=full)


def _normalize(vec: list[Fraction]) -> tuple[int, ...]:
    """Clear denominators, divide by content, make last nonzero entry > 0."""
    lcm = 1
    for v in vec:
        d = v.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(v * lcm) for v in vec]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    last = next((v for v in reversed(ints) if v), 0)
    if last < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def oracle_is_nut(n: int, s: GeneratorSet) -> bool:
    """Nut-ness straight from the definition, via the exact kernel."""
    check_order_cap(n)
    result = kernel(adjacency(n, s))
    return result.nullity == 1 and result.full_support


def enumerate_balanced(n: int, t: int) -> list[GeneratorSet]:
    """All 2t-element subsets of {1..n/2-1} with t odd and t even members.

    Emitted in lexicographic order of the sorted element tuples.
    """
    if n < 2 or n % 2:
        raise ValueError("enumerate_balanced requires an even order")
    if t < 1:
        raise ValueError("enumerate_balanced requires t >= 1")
    half = n // 2
    odds = [s for s in range(1, half) if s % 2]
    evens = [s for s in range(1, half) if s % 2 == 0]
    sets = [
        tuple(sorted(o + e))
        for o in combinations(odds, t)
        for e in combinations(evens, t)
    ]
    return [GeneratorSet(elems) for elems in sorted(sets)]
