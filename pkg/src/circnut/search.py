"""Search for universal generator sets derived from near-consecutive runs.

For odd t the candidates are {1, ..., 2t+1} minus one odd element p (the
removal must be odd to keep the set balanced); p is scanned ascending and
the smallest universal removal wins, so gap_set(t) itself corresponds to
p = t.  For even t the candidates are {1, ..., 2t+2} minus a pair {q, r}
of opposite parity, scanned in lexicographic (q, r) order.

scan_range packages one record per t.  parallel_width only controls the
number of worker threads; records are merged in ascending t and the
output is byte-identical for every width (the cyclotomic cache is the
only shared state, and it stores immutable values keyed by b).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .circulant import (
    GeneratorSet,
    UniversalityReport,
    gap_set,
    is_universal,
)
from .theory import gap_set_universal_t


@dataclass(frozen=True)
class UniversalCandidate:
    """A certified universal set described by what was removed."""

    t: int
    removed: tuple[int, ...]
    generators: GeneratorSet
    report: UniversalityReport

    def __post_init__(self):
        if not self.generators.balanced:
            raise AssertionError("candidate set must be balanced")


def find_pt(t: int) -> UniversalCandidate | None:
    """Smallest odd removal p making {1..2t+1} minus {p} universal.

    Scans p = 1, 3, ..., 2t+1 ascending; None means no removal works,
    which no known t exhibits.
    """
    if t < 3 or t % 2 == 0:
        raise ValueError("find_pt requires odd t >= 3")
    base = range(1, 2 * t + 2)
    for p in range(1, 2 * t + 2, 2):
        s = GeneratorSet(tuple(x for x in base if x != p))
        report = is_universal(s)
        if report.universal:
            return UniversalCandidate(t, (p,), s, report)
    return None


def find_qt_rt(t: int, mode: str = "first") -> list[UniversalCandidate]:
    """Opposite-parity removals {q, r} making {1..2t+2} minus them universal.

    Pairs are scanned in lexicographic (q, r) order with q < r; mode
    "first" stops at the first hit, "all" exhausts every pair.
    """
    if t < 4 or t % 2:
        raise ValueError("find_qt_rt requires even t >= 4")
    if mode not in ("first", "all"):
        raise ValueError("mode must be 'first' or 'all'")
    base = range(1, 2 * t + 3)
    found: list[UniversalCandidate] = []
    for q in range(1, 2 * t + 2):
        for r in range(q + 1, 2 * t + 3):
            if (q + r) % 2 == 0:
                continue
            s = GeneratorSet(tuple(x for x in base if x != q and x != r))
            report = is_universal(s)
            if report.universal:
                found.append(UniversalCandidate(t, (q, r), s, report))
                if mode == "first":
                    return found
    return found


@dataclass(frozen=True)
class ScanRecord:
    """Per-t summary: whether the gap set is known-universal for t, and
    the certified candidate found (None if the search came up empty)."""

    t: int
    applicable: bool
    candidate: UniversalCandidate | None


def _scan_one(t: int) -> ScanRecord:
    applicable = gap_set_universal_t(t)
    if t % 2:
        if applicable:
            s = gap_set(t)
            report = is_universal(s)
            if report.universal:
                return ScanRecord(
                    t, True, UniversalCandidate(t, (t,), s, report)
                )
        return ScanRecord(t, applicable, find_pt(t))
    return ScanRecord(t, False, next(iter(find_qt_rt(t, "first")), None))


def scan_range(
    t_lo: int, t_hi: int, parallel_width: int = 1
) -> list[ScanRecord]:
    """One ScanRecord per t in [t_lo, t_hi], ascending."""
    if not 3 <= t_lo <= t_hi:
        raise ValueError("scan_range requires 3 <= t_lo <= t_hi")
    if parallel_width < 1:
        raise ValueError("parallel_width must be >= 1")
    ts = range(t_lo, t_hi + 1)
    if parallel_width == 1:
        return [_scan_one(t) for t in ts]
    with ThreadPoolExecutor(max_workers=parallel_width) as pool:
        return list(pool.map(_scan_one, ts))
