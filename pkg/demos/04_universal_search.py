#!/usr/bin/env python3
"""Search for universal generator sets among near-consecutive families.

Odd t: remove one odd element p from {1, ..., 2t+1} (smallest p wins).
Even t: remove an opposite-parity pair {q, r} from {1, ..., 2t+2}.
The congruence test t != 1 (mod 10), t != 15 (mod 18) tells in advance
when the plain gap set (p = t) is universal.
"""

from circnut import find_pt, find_qt_rt, gap_set_universal_t, scan_range

print("odd t: smallest universal removal from {1,...,2t+1}")
for t in range(3, 22, 2):
    candidate = find_pt(t)
    tag = "gap set certified directly" if gap_set_universal_t(t) \
        else "congruence obstruction; replacement needed"
    print(f"  t={t:2d}: remove {candidate.removed[0]:2d}   ({tag})")

print()
print("even t: first universal pair removed from {1,...,2t+2}")
for t in (4, 6, 8, 10):
    candidate = find_qt_rt(t, "first")[0]
    q, r = candidate.removed
    print(f"  t={t:2d}: remove {{{q},{r}}}, nut for every even n >= "
          f"{candidate.report.min_order}")

print()
print("combined sweep, one record per t:")
for record in scan_range(3, 12):
    c = record.candidate
    print(f"  t={record.t:2d} applicable={str(record.applicable):5s} "
          f"removed={c.removed} min_order={c.report.min_order}")
