#!/usr/bin/env python3
"""Walk through fixed-order nut verdicts for a few circulant graphs.

The verdict machinery never touches floating point: a graph fails either
for a structural reason (odd order, a half-order step, unbalanced parity)
or because a specific cyclotomic polynomial divides its eigenvalue
polynomial, and that divisor is reported so the verdict can be re-checked.
"""

from circnut import GeneratorSet, cyclotomic, is_nut, rep_poly, zero_multiplicity

cases = [
    ([1, 2, 3, 4], 14),   # the smallest 8-regular circulant nut graph
    ([1, 2, 3, 4], 16),   # same set two vertices later: not a nut
    ([1, 2, 4, 5, 6, 7], 16),
    ([1, 3, 4, 5], 20),   # three odd steps, one even: parity rules it out
    ([1, 2], 4),          # the step 2 equals n/2
    ([1, 2], 7),          # odd order
]

for elements, n in cases:
    s = GeneratorSet.of(elements)
    verdict = is_nut(s, n)
    line = f"Circ({n}, {s})  ->  {verdict.reason}"
    if verdict.witness_b is not None:
        line += f" (b = {verdict.witness_b})"
    if n % 2 == 0 and 2 * s.top <= n:
        line += f"   eigenvalue-0 multiplicity: {zero_multiplicity(s, n)}"
    print(line)

print()
s, n = GeneratorSet.of([1, 2, 3, 4]), 16
b = is_nut(s, n).witness_b
print(f"re-checking the witness for Circ({n}, {s}):")
print(f"  representative polynomial: {rep_poly(s, n)}")
print(f"  cyclotomic divisor {b}:    {cyclotomic(b)}")
print(f"  remainder:                 {divmod(rep_poly(s, n), cyclotomic(b))[1]}")
