"""
Which (b, w) pairs occur as chess counts, and how to build a witness.

A pair occurs iff (b - w)^2 <= b. Every such pair is
((k+1)^2 + l, k(k+1) + l) or (k^2 + l, k(k+1) + l) with k, l >= 0, and
l = b - (b - w)^2 in both forms. In signed coordinates n = b + w, c = b - w
the condition reads: n and c have the same parity and c(2c - 1) <= n.
"""

import logging
from typing import Optional

from .castelnuovo import bw, is_castelnuovo, to_distinct_partition
from .errors import NotRealizableError, require
from .models import (
    BWPair,
    CastelnuovoPoly,
    NCPair,
    Partition,
    ReductionResult,
    ThmBForm,
    WitnessDecomposition,
)
from .partition import chess_count, is_distinct, signed_sum, staircase

logger = logging.getLogger(__name__)


def is_realizable_bw(p: BWPair) -> bool:
    return (p.b - p.w) ** 2 <= p.b


def slack(p: BWPair) -> int:
    """Return b - (b - w)^2, the l of both parameterized forms."""
    return p.b - (p.b - p.w) ** 2


def thmB_decompose(p: BWPair) -> Optional[ThmBForm]:
    """
    Write a realizable pair in one of the two parameterized forms.

    The sign of c = b - w picks the form: form_plus forces c = k + 1 >= 1,
    form_minus forces c = -k <= 0.

    Returns:
        Optional[ThmBForm]: None when (b - w)^2 > b
    """
    if not is_realizable_bw(p):
        return None
    c = p.b - p.w
    if c >= 1:
        return ThmBForm(case="form_plus", k=c - 1, l=p.b - c * c)
    return ThmBForm(case="form_minus", k=-c, l=p.b - c * c)


def thmB_compose(f: ThmBForm) -> BWPair:
    """Evaluate a parameterized form to its (b, w) pair."""
    if f.case == "form_plus":
        p = BWPair(b=(f.k + 1) ** 2 + f.l, w=f.k * (f.k + 1) + f.l)
    else:
        p = BWPair(b=f.k**2 + f.l, w=f.k * (f.k + 1) + f.l)
    require(slack(p) == f.l, f"{f.get_summary()} evaluates to {p.get_summary()} with the wrong slack")
    return p


def thmB_from_reduction(r: ReductionResult) -> ThmBForm:
    """
    Read the parameterized form off a reduction result.

    A zero terminal leaves (l, l), a one leaves (l+1, l), and staircase(u)
    leaves form_plus with k = u/2 for even u or form_minus with k = (u+1)/2
    for odd u, where l is the number of steps.
    """
    t = r.terminal
    if t.kind == "zero":
        return ThmBForm(case="form_minus", k=0, l=r.steps)
    if t.kind == "one":
        return ThmBForm(case="form_plus", k=0, l=r.steps)
    if t.u % 2 == 0:
        return ThmBForm(case="form_plus", k=t.u // 2, l=r.steps)
    return ThmBForm(case="form_minus", k=(t.u + 1) // 2, l=r.steps)


def _require_realizable(p: BWPair) -> None:
    if not is_realizable_bw(p):
        raise NotRealizableError(f"(b, w) = ({p.b}, {p.w}) is not realizable: (b - w)^2 = {(p.b - p.w) ** 2} > {p.b}")


def witness_decompose(p: BWPair) -> WitnessDecomposition:
    """
    Split a realizable pair into an odd/even staircase part and a remainder.

    l is the largest j with j^2 <= b and j(j+1) <= w. Case 1 keeps
    b = l^2 + b', w = l(l+1) + w' with b' < 2l+1 and w' <= b'. Case 2 takes
    one more odd column, b = (l+1)^2 + b', w = l(l+1) + w' with w' < 2l+2 and
    b' <= w'.

    Raises:
        NotRealizableError: If (b - w)^2 > b
    """
    _require_realizable(p)
    l = 0
    while (l + 1) ** 2 <= p.b and (l + 1) * (l + 2) <= p.w:
        l += 1
    w_rem = p.w - l * (l + 1)
    if p.b - l * l < 2 * l + 1:
        b_rem = p.b - l * l
        require(w_rem <= b_rem, f"case 1 for ({p.b}, {p.w}) has w' = {w_rem} > b' = {b_rem}")
        result = WitnessDecomposition(l=l, case="case1", b_rem=b_rem, w_rem=w_rem)
    else:
        b_rem = p.b - (l + 1) ** 2
        require(w_rem < 2 * l + 2, f"case 2 for ({p.b}, {p.w}) has w' = {w_rem} >= 2l+2")
        require(b_rem <= w_rem, f"case 2 for ({p.b}, {p.w}) has b' = {b_rem} > w' = {w_rem}")
        result = WitnessDecomposition(l=l, case="case2", b_rem=b_rem, w_rem=w_rem)
    logger.debug("decomposed (%d, %d) as %s", p.b, p.w, result)
    return result


def witness_castelnuovo(p: BWPair) -> CastelnuovoPoly:
    """
    Build a Castelnuovo function with chess count exactly (b, w).

    Case 1: 1 + 2t + ... + 2l t^(2l-1) + b' t^(2l) + w' t^(2l+1).
    Case 2: 1 + 2t + ... + (2l+1) t^(2l) + w' t^(2l+1) + b' t^(2l+2).

    Raises:
        NotRealizableError: If (b - w)^2 > b
    """
    _require_realizable(p)
    if p.b == 0:
        return CastelnuovoPoly()
    dec = witness_decompose(p)
    if dec.case == "case1":
        coeffs = list(range(1, 2 * dec.l + 1)) + [dec.b_rem, dec.w_rem]
    else:
        coeffs = list(range(1, 2 * dec.l + 2)) + [dec.w_rem, dec.b_rem]
    s = CastelnuovoPoly(coeffs)
    require(is_castelnuovo(s), f"witness {coeffs} for ({p.b}, {p.w}) is not a Castelnuovo function")
    require(bw(s) == p, f"witness {coeffs} has chess count {bw(s).get_summary()}, wanted ({p.b}, {p.w})")
    return s


def witness_partition(p: BWPair) -> Partition:
    """
    Build a partition in distinct parts with chess count exactly (b, w).

    Raises:
        NotRealizableError: If (b - w)^2 > b
    """
    la = to_distinct_partition(witness_castelnuovo(p))
    require(is_distinct(la), f"witness {la.get_summary()} has a repeated part")
    require(sum(la.parts) == p.b + p.w, f"witness {la.get_summary()} has the wrong weight")
    require(chess_count(la) == p, f"witness {la.get_summary()} has chess count {chess_count(la).get_summary()}")
    return la


def bw_from_nc(q: NCPair) -> Optional[BWPair]:
    """Return ((n+c)/2, (n-c)/2), or None when that is not a pair of naturals."""
    if (q.n + q.c) % 2 != 0:
        return None
    b, w = (q.n + q.c) // 2, (q.n - q.c) // 2
    if b < 0 or w < 0:
        return None
    return BWPair(b=b, w=w)


def nc_from_bw(p: BWPair) -> NCPair:
    return NCPair(n=p.b + p.w, c=p.b - p.w)


def is_realizable_nc(q: NCPair) -> bool:
    return (q.n - q.c) % 2 == 0 and q.c * (2 * q.c - 1) <= q.n


def nc_slack(q: NCPair) -> Optional[int]:
    """Return l with n = c(2c - 1) + 2l, or None when q is not realizable."""
    if not is_realizable_nc(q):
        return None
    return (q.n - q.c * (2 * q.c - 1)) // 2


def nc_form(q: NCPair) -> Optional[ThmBForm]:
    """
    Write a realizable (n, c) as (2k^2 + k + 2l, -k) or (2k^2 + 3k + 1 + 2l, k + 1).

    The first shape is form_minus and the second form_plus, with the same
    k and l as the decomposition of the matching (b, w).
    """
    l = nc_slack(q)
    if l is None:
        return None
    if q.c >= 1:
        form = ThmBForm(case="form_plus", k=q.c - 1, l=l)
    else:
        form = ThmBForm(case="form_minus", k=-q.c, l=l)
    require(nc_from_bw(thmB_compose(form)) == q, f"{form.get_summary()} does not evaluate to {q.get_summary()}")
    return form


def equality_staircase(c: int) -> tuple[int, Partition]:
    """
    Return the staircase whose labels sum to c and whose weight is c(2c - 1).

    m = 2c - 1 for c >= 1 and m = -2c for c <= 0.
    """
    m = 2 * c - 1 if c >= 1 else -2 * c
    la = staircase(m)
    require(signed_sum(la) == c, f"staircase({m}) has label sum {signed_sum(la)}, wanted {c}")
    require(sum(la.parts) == c * (2 * c - 1), f"staircase({m}) does not have weight c(2c-1) = {c * (2 * c - 1)}")
    return m, la
