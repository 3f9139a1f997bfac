"""
Castelnuovo functions and their relation to partitions.

A Castelnuovo function is stored as its generating polynomial: coefficient m
is s(m). The diagonal map sends a partition to the function counting its
cells on each diagonal row + col = m. The star map removes one square from
the top of each of the two rightmost columns. Iterating it until it stops
leaves a zero, a one or a full staircase 1 + 2t + ... + (u+1)t^u.
"""

import logging
import re
from typing import Iterable, Iterator

from .errors import InvalidPolynomialError, NegativeCoefficientError, require
from .models import (
    CastelnuovoPoly,
    ChessCount,
    CoeffPoly,
    Partition,
    ReductionResult,
    Terminal,
    castelnuovo_sigma,
)
from .partition import is_distinct, partitions_bounded

logger = logging.getLogger(__name__)


def make_poly(coeffs: Iterable[int]) -> CoeffPoly:
    """Build a CoeffPoly from raw coefficients, trimming trailing zeros."""
    return CoeffPoly(coeffs)


def parse_coeffs(text: str) -> CastelnuovoPoly:
    """Parse coefficients written as "1,2,3,4,4,4,1" into a Castelnuovo function."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    try:
        coeffs = [int(t) for t in tokens]
    except ValueError:
        raise InvalidPolynomialError(f"coefficients must be integers, got {text!r}")
    return CastelnuovoPoly(coeffs)


def is_castelnuovo(f: CoeffPoly) -> bool:
    """Return True iff f has the shape 1, 2, ..., sigma followed by a nonincreasing tail."""
    return castelnuovo_sigma(f.coeffs) is not None


def sigma(s: CastelnuovoPoly) -> int:
    return s.sigma


def full_staircase(u: int) -> CastelnuovoPoly:
    """Return 1 + 2t + 3t^2 + ... + (u+1)t^u."""
    return CastelnuovoPoly(range(1, u + 2))


def is_full_staircase(f: CoeffPoly) -> bool:
    return not f.is_zero() and f.coeffs == tuple(range(1, len(f) + 1))


def from_partition(la: Partition) -> CastelnuovoPoly:
    """
    Count the cells of la on every diagonal.

    s(m) = #{j : j <= m+1 and m+2-j <= la_j}; row j-1 meets diagonal m at
    column m+1-j when that column exists.
    """
    counts = [0] * (la.part(1) + la.length - 1 if la.length else 0)
    for row, part in enumerate(la.parts):
        for col in range(part):
            counts[row + col] += 1
    s = CastelnuovoPoly(counts)
    require(s.weight == sum(la.parts), f"s_la of {la.get_summary()} changed the weight")
    require(
        all(coeff <= m + 1 for m, coeff in enumerate(s.coeffs)),
        f"s_la of {la.get_summary()} exceeds m+1 on some diagonal",
    )
    return s


def bw(s: CoeffPoly) -> ChessCount:
    """Sum even-index coefficients into b and odd-index coefficients into w."""
    return ChessCount(b=sum(s.coeffs[0::2]), w=sum(s.coeffs[1::2]))


def star(f: CoeffPoly) -> CoeffPoly:
    """
    Subtract t^(d-1) + t^d from f when f is nonzero of degree d > 0.

    Zero and constant polynomials are returned unchanged.

    Raises:
        NegativeCoefficientError: If a top coefficient is already zero
    """
    d = f.degree
    if d <= 0:
        return f
    coeffs = list(f.coeffs)
    coeffs[d - 1] -= 1
    coeffs[d] -= 1
    if coeffs[d - 1] < 0:
        raise NegativeCoefficientError(f"star of {list(f.coeffs)} makes the coefficient of t^{d - 1} negative")
    return CoeffPoly(coeffs)


def reduce_classify(s: CastelnuovoPoly, keep_trace: bool = False) -> ReductionResult:
    """
    Apply star while it changes s and keeps it a Castelnuovo function.

    Args:
        s (CastelnuovoPoly): Starting function
        keep_trace (bool): Record every intermediate polynomial

    Returns:
        ReductionResult: Step count and the terminal reached. A fixed point
        gives zero or one; leaving the Castelnuovo set gives staircase(u).
    """
    current = s
    steps = 0
    trace = [s] if keep_trace else None
    while True:
        following = star(current)
        if following == current:
            terminal = Terminal(kind="zero") if current.is_zero() else Terminal(kind="one")
            require(current.coeffs in ((), (1,)), f"star fixed point {list(current.coeffs)} is neither 0 nor 1")
            break
        if not is_castelnuovo(following):
            require(
                is_full_staircase(current),
                f"star left the Castelnuovo set from {list(current.coeffs)}, which is not a full staircase",
            )
            terminal = Terminal(kind="staircase", u=current.degree)
            break
        current = CastelnuovoPoly(following.coeffs)
        steps += 1
        if trace is not None:
            trace.append(current)
    require(
        s.weight - current.weight == 2 * steps,
        f"reduction of {list(s.coeffs)} took {steps} steps but lost {s.weight - current.weight} squares",
    )
    logger.debug("reduced %s in %d steps to %s", list(s.coeffs), steps, terminal.get_summary())
    return ReductionResult(steps=steps, terminal=terminal, trace=tuple(trace) if trace is not None else None)


def terminal_bw(t: Terminal) -> ChessCount:
    """
    Return the chess count of a terminal polynomial.

    For staircase(u): ((u+2)^2/4, u(u+2)/4) when u is even and
    ((u+1)^2/4, (u+1)(u+3)/4) when u is odd.
    """
    if t.kind == "zero":
        return ChessCount(b=0, w=0)
    if t.kind == "one":
        return ChessCount(b=1, w=0)
    u = t.u
    if u % 2 == 0:
        b, w = (u + 2) ** 2, u * (u + 2)
    else:
        b, w = (u + 1) ** 2, (u + 1) * (u + 3)
    require(b % 4 == 0 and w % 4 == 0, f"staircase u={u} has a non-integral chess count")
    return ChessCount(b=b // 4, w=w // 4)


def to_distinct_partition(s: CastelnuovoPoly) -> Partition:
    """
    Invert the diagonal map on partitions in distinct parts.

    Part j is #{m : s(m) >= j}. Row j-1 of a distinct-parts diagram, shifted
    j-1 places right, covers exactly the diagonals m with s(m) >= j.
    """
    top = max(s.coeffs, default=0)
    la = Partition(sum(1 for coeff in s.coeffs if coeff >= j) for j in range(1, top + 1))
    require(is_distinct(la), f"inverse of {list(s.coeffs)} has a repeated part")
    require(sum(la.parts) == s.weight, f"inverse of {list(s.coeffs)} changed the weight")
    return la


def enumerate_castelnuovo(n: int) -> Iterator[CastelnuovoPoly]:
    """
    Yield every Castelnuovo function of weight n exactly once.

    A function is a staircase 1..sigma followed by a partition of the
    remaining weight with parts at most sigma; sigma is recovered uniquely
    because the tail never reaches sigma + 1.
    """
    if n < 0:
        return
    if n == 0:
        yield CastelnuovoPoly()
        return
    sig = 1
    while sig * (sig + 1) // 2 <= n:
        rest = n - sig * (sig + 1) // 2
        for tail in partitions_bounded(rest, max_part=sig):
            yield CastelnuovoPoly(tuple(range(1, sig + 1)) + tail.parts)
        sig += 1
