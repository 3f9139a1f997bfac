"""
Exact counts of partitions by chess count.
"""

import logging
from functools import lru_cache

from .models import BWPair, CensusRow

logger = logging.getLogger(__name__)

CENSUS_HEADER = ("n", "b", "w", "count_all", "count_distinct")


@lru_cache(maxsize=None)
def _count(max_part: int, parity: int, rem_b: int, rem_w: int, distinct: bool) -> int:
    """
    Number of partitions with parts at most max_part whose rows, starting at a
    row of the given parity, use exactly rem_b black and rem_w white squares.
    """
    if rem_b == 0 and rem_w == 0:
        return 1
    total = 0
    for part in range(1, min(max_part, rem_b + rem_w) + 1):
        high, low = (part + 1) // 2, part // 2
        db, dw = (high, low) if parity == 0 else (low, high)
        if db > rem_b or dw > rem_w:
            continue
        next_bound = part - 1 if distinct else part
        total += _count(next_bound, 1 - parity, rem_b - db, rem_w - dw, distinct)
    return total


def clear_counts() -> None:
    """Drop the memoized counts; they otherwise live as long as the process."""
    _count.cache_clear()


def count_by_bw(n: int) -> dict[BWPair, tuple[int, int]]:
    """
    Count partitions of n, and distinct-parts partitions of n, per chess count.

    Args:
        n (int): The weight

    Returns:
        dict[BWPair, tuple[int, int]]: (count_all, count_distinct) keyed by
        (b, w) in increasing b; pairs no partition reaches are omitted
    """
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    counts = {}
    for b in range(n + 1):
        w = n - b
        count_all = _count(n, 0, b, w, False)
        if count_all:
            counts[BWPair(b=b, w=w)] = (count_all, _count(n, 0, b, w, True))
    return counts


def census(max_weight: int) -> list[CensusRow]:
    """
    Return one row per reachable (n, b, w) with n <= max_weight, sorted by (n, b).

    The memoized counts are dropped once the rows are built.
    """
    if max_weight < 0:
        raise ValueError(f"max_weight must be nonnegative, got {max_weight}")
    rows = []
    for n in range(max_weight + 1):
        for pair, (count_all, count_distinct) in count_by_bw(n).items():
            rows.append(CensusRow(n=n, b=pair.b, w=pair.w, count_all=count_all, count_distinct=count_distinct))
    clear_counts()
    logger.info("census up to weight %d has %d rows", max_weight, len(rows))
    return rows


def format_census_tsv(rows: list[CensusRow]) -> str:
    """Render census rows as tab-separated text with a header and LF endings."""
    lines = ["\t".join(CENSUS_HEADER)]
    for row in sorted(rows, key=lambda r: (r.n, r.b, r.w)):
        lines.append("\t".join(str(getattr(row, field)) for field in CENSUS_HEADER))
    return "\n".join(lines) + "\n"
