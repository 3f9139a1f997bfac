"""
Partitions, their conjugates and chess colouring counts.

Rows of the Ferrers graph are numbered from 0 at the bottom (the row of the
largest part) and columns from 0 at the left. The square in row r and column
c is black when r + c is even, so the bottom-left square is always black.
"""

import re
from typing import Iterable, Iterator, Optional

from sympy.utilities.iterables import partitions as sympy_partitions

from .errors import InvalidPartitionError, require
from .models import Cell, ChessCount, Partition


def make_partition(parts: Iterable[int]) -> Partition:
    """
    Validate a raw sequence of integers as a partition.

    Args:
        parts (Iterable[int]): Candidate parts, largest first

    Returns:
        Partition: The validated partition

    Raises:
        InvalidPartitionError: If an entry is below 1 or the order increases
    """
    return Partition(parts)


def parse_parts(text: str) -> Partition:
    """
    Parse parts written as "6,6,4,1" or "6 6 4 1" into a Partition.

    An empty or blank string is the empty partition. An empty item in the
    comma form, as in "3,,1" or "3,1,", is rejected.
    """
    text = text.strip()
    if not text:
        return Partition()
    tokens = re.split(r"\s*,\s*|\s+", text)
    if "" in tokens:
        raise InvalidPartitionError(f"empty item in parts {text!r}")
    try:
        parts = [int(t) for t in tokens]
    except ValueError:
        raise InvalidPartitionError(f"parts must be integers, got {text!r}")
    return make_partition(parts)


def weight(la: Partition) -> int:
    return sum(la.parts)


def conjugate(la: Partition) -> Partition:
    """Return the partition whose i-th part is #{j : la_j >= i}."""
    if not la.parts:
        return Partition()
    return Partition(sum(1 for part in la.parts if part >= i) for i in range(1, la.part(1) + 1))


def is_distinct(la: Partition) -> bool:
    return len(set(la.parts)) == len(la.parts)


def cells(la: Partition) -> Iterator[Cell]:
    """Yield every cell of the Ferrers graph, bottom row first, left to right."""
    for row, part in enumerate(la.parts):
        for col in range(part):
            yield Cell(row=row, col=col)


def chess_count_by_cells(la: Partition) -> ChessCount:
    """Count black and white squares by walking every cell."""
    b = w = 0
    for cell in cells(la):
        if cell.is_black:
            b += 1
        else:
            w += 1
    return ChessCount(b=b, w=w)


def chess_count_closed_form(la: Partition) -> ChessCount:
    """
    Count black and white squares row by row.

    Row i starts black when i is even, so it contributes ceil(part/2) black
    squares for even i and floor(part/2) for odd i; white takes the rest.
    """
    b = w = 0
    for row, part in enumerate(la.parts):
        high, low = (part + 1) // 2, part // 2
        if row % 2 == 0:
            b, w = b + high, w + low
        else:
            b, w = b + low, w + high
    return ChessCount(b=b, w=w)


def chess_count(la: Partition) -> ChessCount:
    """
    Return (b(la), w(la)), computed by the cell walk and the closed form.

    Raises:
        InvariantViolation: If the two computations disagree
    """
    walked = chess_count_by_cells(la)
    closed = chess_count_closed_form(la)
    require(
        walked == closed,
        f"chess count of {la.get_summary()}: cell walk gives {walked.get_summary()}, "
        f"closed form gives {closed.get_summary()}",
    )
    return walked


def signed_sum(la: Partition) -> int:
    """
    Sum the +1/-1 chessboard labels of the top-justified array.

    The first row holds la_1 boxes and the top-left box is labelled +1, so
    row i (from the top, 0-indexed) column c is labelled (-1)^(i+c).
    """
    total = 0
    for row, part in enumerate(la.parts):
        for col in range(part):
            total += 1 if (row + col) % 2 == 0 else -1
    return total


def staircase(m: int) -> Partition:
    """Return (m, m-1, ..., 2, 1); m = 0 gives the empty partition."""
    if m < 0:
        raise InvalidPartitionError(f"staircase size must be nonnegative, got {m}")
    return Partition(range(m, 0, -1))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """
    Yield every partition of n exactly once.

    The order is decreasing-first-part lexicographic: (n), (n-1, 1),
    (n-2, 2), (n-2, 1, 1), ... as produced by sympy's generator.
    """
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return
    for multiplicities in sympy_partitions(n):
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        yield Partition(parts)


def partitions_bounded(n: int, max_part: Optional[int] = None, distinct: bool = False) -> Iterator[Partition]:
    """
    Yield partitions of n with every part at most max_part.

    Args:
        n (int): The weight
        max_part (int, optional): Upper bound on parts; None means n
        distinct (bool): Restrict to partitions in distinct parts

    Returns:
        Iterator[Partition]: Partitions in decreasing-first-part lexicographic order
    """
    if max_part is None:
        max_part = n
    for parts in _bounded(n, max_part, distinct):
        yield Partition(parts)


def _bounded(n: int, bound: int, distinct: bool) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        # first is the largest part, so the rest are bounded by it
        rest_bound = first - 1 if distinct else first
        for rest in _bounded(n - first, rest_bound, distinct):
            yield (first,) + rest


def enumerate_distinct(n: int) -> Iterator[Partition]:
    """Yield every partition of n into distinct parts exactly once."""
    if n < 0:
        return
    yield from partitions_bounded(n, distinct=True)
