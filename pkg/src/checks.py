from abc import ABC, abstractmethod
from collections import Counter
from typing import Iterable, Iterator, Optional

from pydantic import BaseModel

from .castelnuovo import (
    bw,
    enumerate_castelnuovo,
    from_partition,
    is_castelnuovo,
    is_full_staircase,
    reduce_classify,
    star,
    terminal_bw,
    to_distinct_partition,
)
from .characterize import (
    bw_from_nc,
    equality_staircase,
    is_realizable_bw,
    is_realizable_nc,
    nc_from_bw,
    nc_slack,
    slack,
    thmB_compose,
    thmB_decompose,
    thmB_from_reduction,
    witness_castelnuovo,
    witness_decompose,
    witness_partition,
)
from .counting import count_by_bw
from .errors import ChessFerrersError, UnknownCheckError
from .models import BWPair, CoeffPoly, Counterexample, NCPair, Partition, ThmBForm
from .partition import (
    chess_count,
    chess_count_by_cells,
    chess_count_closed_form,
    conjugate,
    enumerate_distinct,
    enumerate_partitions,
    is_distinct,
    signed_sum,
    weight,
)


class WeightContext:
    """
    Everything the checks need about one weight n, computed once.
    """

    def __init__(self, n: int):
        self.n = n
        self.partitions = list(enumerate_partitions(n))
        self.distinct = list(enumerate_distinct(n))
        # the cell walk never raises; the chess_count check compares it to the closed form
        self.counts = {la: chess_count_by_cells(la) for la in self.partitions}
        self.castelnuovo = list(enumerate_castelnuovo(n))

    def realizable_pairs(self) -> list[BWPair]:
        pairs = (BWPair(b=b, w=self.n - b) for b in range(self.n + 1))
        return [p for p in pairs if is_realizable_bw(p)]

    def get_summary(self) -> str:
        return (
            f"weight {self.n}: {len(self.partitions)} partitions, "
            f"{len(self.distinct)} in distinct parts, {len(self.castelnuovo)} Castelnuovo functions"
        )


def describe(subject) -> str:
    if isinstance(subject, Partition):
        return subject.get_summary()
    if isinstance(subject, CoeffPoly):
        return str(list(subject.coeffs))
    if isinstance(subject, WeightContext):
        return f"weight {subject.n}"
    if isinstance(subject, BaseModel) and hasattr(subject, "get_summary"):
        return subject.get_summary()
    return str(subject)


def _pairs(values: Iterable[BWPair]) -> str:
    return "{" + ", ".join(f"({p.b},{p.w})" for p in sorted(values, key=lambda p: (p.b, p.w))) + "}"


class TheoremCheck(ABC):
    """
    Base class for one exhaustive check at a single weight.
    """

    name = ""
    description = ""

    def items(self, ctx: WeightContext) -> Iterable:
        """Subjects checked one at a time; a whole-weight check has the context as its only subject."""
        return (ctx,)

    @abstractmethod
    def check_item(self, ctx: WeightContext, item) -> Iterator[Counterexample]:
        raise NotImplementedError("Subclasses must implement this method")

    def run(self, ctx: WeightContext) -> list[Counterexample]:
        """
        Check every subject of the weight.

        An error raised while checking a subject is recorded as a
        counterexample for that subject instead of aborting the check.

        Returns:
            list[Counterexample]: Every failure found, in subject order
        """
        found = []
        for item in self.items(ctx):
            try:
                found.extend(self.check_item(ctx, item))
            except (ChessFerrersError, ValueError) as e:
                found.append(self.failure(ctx, item, "no error", f"{type(e).__name__}: {e}"))
        return found

    def failure(self, ctx: WeightContext, subject, expected, actual) -> Counterexample:
        return Counterexample(
            check=self.name,
            weight=ctx.n,
            subject=describe(subject),
            expected=describe(expected),
            actual=describe(actual),
        )


class PartitionCheck(TheoremCheck):
    """Base class for checks run on every partition of the weight."""

    def items(self, ctx: WeightContext) -> Iterable:
        return ctx.partitions


class PolynomialCheck(TheoremCheck):
    """Base class for checks run on every Castelnuovo function of the weight."""

    def items(self, ctx: WeightContext) -> Iterable:
        return ctx.castelnuovo


class PairCheck(TheoremCheck):
    """Base class for checks run on every realizable (b, w) with b + w = n."""

    def items(self, ctx: WeightContext) -> Iterable:
        return ctx.realizable_pairs()


class ConjugationCheck(PartitionCheck):
    name = "conjugation"
    description = "conjugation is a weight- and colour-preserving involution"

    def check_item(self, ctx, la):
        conj = conjugate(la)
        if conjugate(conj) != la:
            yield self.failure(ctx, la, la, conjugate(conj))
        if weight(conj) != ctx.n:
            yield self.failure(ctx, la, f"weight {ctx.n}", f"weight {weight(conj)}")
        if chess_count_by_cells(conj) != ctx.counts[la]:
            yield self.failure(ctx, la, ctx.counts[la], chess_count_by_cells(conj))


class ChessCountCheck(PartitionCheck):
    name = "chess_count"
    description = "cell walk and closed form agree and b + w is the weight"

    def check_item(self, ctx, la):
        walked, closed = ctx.counts[la], chess_count_closed_form(la)
        if walked != closed:
            yield self.failure(ctx, la, walked, closed)
        if walked.b + walked.w != ctx.n:
            yield self.failure(ctx, la, f"b + w = {ctx.n}", f"b + w = {walked.b + walked.w}")


class SignedSumCheck(PartitionCheck):
    name = "signed_sum"
    description = "the +1/-1 label sum equals b - w"

    def check_item(self, ctx, la):
        count = ctx.counts[la]
        if signed_sum(la) != count.b - count.w:
            yield self.failure(ctx, la, count.b - count.w, signed_sum(la))


class TheoremACheck(TheoremCheck):
    name = "theorem_a"
    description = "reached (b, w) are exactly those with (b - w)^2 <= b, also for distinct parts"

    def check_item(self, ctx, item):
        expected = set(ctx.realizable_pairs())
        achieved_all = set(ctx.counts.values())
        achieved_distinct = {ctx.counts[la] for la in ctx.distinct}
        for label, achieved in (("all partitions", achieved_all), ("distinct parts", achieved_distinct)):
            if achieved != expected:
                yield self.failure(ctx, f"weight {ctx.n}, {label}", _pairs(expected), _pairs(achieved))


def forms_of_weight(n: int) -> list[ThmBForm]:
    """Every parameterized form whose pair has b + w = n."""
    forms = []
    k = 0
    # form_plus has weight (k+1)(2k+1) + 2l, form_minus has k(2k+1) + 2l
    while k * (2 * k + 1) <= n:
        base_minus = k * (2 * k + 1)
        if (n - base_minus) % 2 == 0:
            forms.append(ThmBForm(case="form_minus", k=k, l=(n - base_minus) // 2))
        base_plus = (k + 1) * (2 * k + 1)
        if base_plus <= n and (n - base_plus) % 2 == 0:
            forms.append(ThmBForm(case="form_plus", k=k, l=(n - base_plus) // 2))
        k += 1
    return forms


class TheoremBCheck(TheoremCheck):
    name = "theorem_b"
    description = "reached (b, w) are the union of both parameterized families; decompose then compose is the identity"

    def items(self, ctx):
        return [ctx] + ctx.realizable_pairs()

    def check_item(self, ctx, item):
        if isinstance(item, WeightContext):
            family = {thmB_compose(f) for f in forms_of_weight(ctx.n)}
            achieved = set(ctx.counts.values())
            if family != achieved:
                yield self.failure(ctx, item, _pairs(family), _pairs(achieved))
            return
        form = thmB_decompose(item)
        if form is None:
            yield self.failure(ctx, item, "a parameterized form", "none")
        elif thmB_compose(form) != item:
            yield self.failure(ctx, item, item, thmB_compose(form))


class CastelnuovoAgreementCheck(PartitionCheck):
    name = "castelnuovo_agreement"
    description = "the diagonal map keeps the weight and the chess count"

    def check_item(self, ctx, la):
        s = from_partition(la)
        if s.weight != ctx.n:
            yield self.failure(ctx, la, f"weight {ctx.n}", f"weight {s.weight}")
        if bw(s) != ctx.counts[la]:
            yield self.failure(ctx, la, ctx.counts[la], bw(s))


class SurjectivityCheck(TheoremCheck):
    name = "surjectivity"
    description = "the diagonal map reaches every Castelnuovo function of the weight"

    def check_item(self, ctx, item):
        image = {from_partition(la) for la in ctx.partitions}
        expected = set(ctx.castelnuovo)
        for missing in sorted(expected - image, key=lambda s: s.coeffs):
            yield self.failure(ctx, missing, "in the image", "not reached")
        for extra in sorted(image - expected, key=lambda s: s.coeffs):
            yield self.failure(ctx, extra, "not a Castelnuovo function of this weight", "reached")
        if len(ctx.castelnuovo) != len(ctx.distinct):
            yield self.failure(ctx, item, f"{len(ctx.distinct)} functions", f"{len(ctx.castelnuovo)} functions")


class BijectionCheck(TheoremCheck):
    name = "bijection"
    description = "the diagonal map and its inverse are mutually inverse on distinct parts"

    def items(self, ctx):
        return ctx.distinct + ctx.castelnuovo

    def check_item(self, ctx, item):
        if isinstance(item, Partition):
            back = to_distinct_partition(from_partition(item))
            if back != item:
                yield self.failure(ctx, item, item, back)
        else:
            back = from_partition(to_distinct_partition(item))
            if back != item:
                yield self.failure(ctx, item, item, back)


class StarExitCheck(PolynomialCheck):
    name = "star_exit"
    description = "star leaves the Castelnuovo set exactly on full staircases"

    def check_item(self, ctx, s):
        following = star(s)
        if s.degree <= 0:
            if following != s:
                yield self.failure(ctx, s, s, following)
            return
        if following.weight != s.weight - 2:
            yield self.failure(ctx, s, f"weight {s.weight - 2}", f"weight {following.weight}")
        left = not is_castelnuovo(following)
        if left != is_full_staircase(s):
            expected = "leaves the set" if is_full_staircase(s) else "stays in the set"
            yield self.failure(ctx, s, expected, "leaves the set" if left else "stays in the set")


class ReductionStepsCheck(PartitionCheck):
    name = "reduction_steps"
    description = "steps = b - (b - w)^2 and the terminal accounts for the rest"

    def check_item(self, ctx, la):
        count = ctx.counts[la]
        result = reduce_classify(from_partition(la))
        if result.steps != slack(count):
            yield self.failure(ctx, la, f"{slack(count)} steps", f"{result.steps} steps")
        rest = terminal_bw(result.terminal)
        if (rest.b + result.steps, rest.w + result.steps) != (count.b, count.w):
            yield self.failure(ctx, la, count, f"terminal {rest.get_summary()} plus {result.steps}")
        if thmB_from_reduction(result) != thmB_decompose(count):
            yield self.failure(ctx, la, thmB_decompose(count), thmB_from_reduction(result))


class WitnessCheck(PairCheck):
    name = "witness"
    description = "the constructed witness is a distinct-parts partition with the requested count"

    def check_item(self, ctx, p):
        dec = witness_decompose(p)
        s = witness_castelnuovo(p)
        la = witness_partition(p)
        if not is_castelnuovo(s):
            yield self.failure(ctx, p, "a Castelnuovo function", s)
        if not is_distinct(la) or weight(la) != ctx.n or chess_count(la) != p:
            yield self.failure(ctx, p, f"distinct parts of weight {ctx.n} with {p.get_summary()}", la)
        if dec.case == "case1":
            ok = p.b == dec.l**2 + dec.b_rem and dec.b_rem < 2 * dec.l + 1 and dec.w_rem <= dec.b_rem
        else:
            ok = p.b == (dec.l + 1) ** 2 + dec.b_rem and dec.w_rem < 2 * dec.l + 2 and dec.b_rem <= dec.w_rem
        if not ok or p.w != dec.l * (dec.l + 1) + dec.w_rem:
            yield self.failure(ctx, p, "a valid decomposition", dec)
        steps = reduce_classify(s).steps
        if not (thmB_decompose(p).l == slack(p) == steps):
            yield self.failure(ctx, p, f"l = {slack(p)}", f"form l = {thmB_decompose(p).l}, steps = {steps}")


class Problem10Check(TheoremCheck):
    name = "problem10"
    description = "(n, c) is reached iff n, c share parity and c(2c - 1) <= n"

    def items(self, ctx):
        return [ctx] + ctx.partitions

    def check_item(self, ctx, item):
        n = ctx.n
        if isinstance(item, Partition):
            c = signed_sum(item)
            gap = n - c * (2 * c - 1)
            if gap < 0 or gap % 2 != 0:
                yield self.failure(ctx, item, "n - c(2c-1) even and nonnegative", gap)
            q = nc_from_bw(ctx.counts[item])
            if nc_slack(q) != gap // 2:
                yield self.failure(ctx, item, gap // 2, nc_slack(q))
            return
        reached = {count.b - count.w for count in ctx.counts.values()}
        predicted = {c for c in range(-n, n + 1) if is_realizable_nc(NCPair(n=n, c=c))}
        if reached != predicted:
            yield self.failure(ctx, item, sorted(predicted), sorted(reached))
        bound = max(8, n)
        for c in range(-bound, bound + 1):
            q = NCPair(n=n, c=c)
            pair = bw_from_nc(q)
            via_bw = pair is not None and is_realizable_bw(pair)
            if is_realizable_nc(q) != via_bw:
                yield self.failure(ctx, q, via_bw, is_realizable_nc(q))


class EqualityStaircaseCheck(TheoremCheck):
    name = "equality_staircase"
    description = "n = c(2c - 1) holds exactly for staircases"

    def items(self, ctx):
        solutions = [c for c in range(-ctx.n, ctx.n + 1) if c * (2 * c - 1) == ctx.n]
        return ctx.partitions + solutions

    def check_item(self, ctx, item):
        if isinstance(item, Partition):
            c = signed_sum(item)
            equal = ctx.n == c * (2 * c - 1)
            is_stair = item.parts == tuple(range(item.length, 0, -1))
            if equal != is_stair:
                yield self.failure(ctx, item, f"staircase: {equal}", f"staircase: {is_stair}")
            return
        m, la = equality_staircase(item)
        if weight(la) != ctx.n or signed_sum(la) != item:
            yield self.failure(ctx, f"c = {item}", f"weight {ctx.n}, sum {item}", f"{la.get_summary()} (m = {m})")


class CountByBwCheck(TheoremCheck):
    name = "count_by_bw"
    description = "the counting recursion matches direct tallies"

    def check_item(self, ctx, item):
        tally_all = Counter(ctx.counts.values())
        tally_distinct = Counter(ctx.counts[la] for la in ctx.distinct)
        brute = {p: (tally_all[p], tally_distinct[p]) for p in tally_all}
        dp = count_by_bw(ctx.n)
        for p in sorted(set(brute) | set(dp), key=lambda p: (p.b, p.w)):
            if brute.get(p) != dp.get(p):
                yield self.failure(ctx, p, brute.get(p), dp.get(p))
        if sum(a for a, _ in dp.values()) != len(ctx.partitions):
            yield self.failure(ctx, item, f"{len(ctx.partitions)} partitions", sum(a for a, _ in dp.values()))
        if sum(d for _, d in dp.values()) != len(ctx.distinct):
            yield self.failure(ctx, item, f"{len(ctx.distinct)} distinct", sum(d for _, d in dp.values()))
        if set(dp) != set(ctx.realizable_pairs()):
            yield self.failure(ctx, item, _pairs(ctx.realizable_pairs()), _pairs(dp))


CHECKS: dict[str, type[TheoremCheck]] = {
    check.name: check
    for check in (
        ConjugationCheck,
        ChessCountCheck,
        SignedSumCheck,
        TheoremACheck,
        TheoremBCheck,
        CastelnuovoAgreementCheck,
        SurjectivityCheck,
        BijectionCheck,
        StarExitCheck,
        ReductionStepsCheck,
        WitnessCheck,
        Problem10Check,
        EqualityStaircaseCheck,
        CountByBwCheck,
    )
}


def resolve_checks(names: Optional[Iterable[str]] = None) -> tuple[str, ...]:
    """
    Validate check names, keeping registry order; None selects every check.

    Raises:
        UnknownCheckError: If a name is not registered
    """
    if names is None:
        return tuple(CHECKS)
    wanted = {name.strip() for name in names if name.strip()}
    unknown = sorted(wanted - set(CHECKS))
    if unknown:
        raise UnknownCheckError(f"unknown checks: {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    if not wanted:
        raise UnknownCheckError("no checks selected")
    return tuple(name for name in CHECKS if name in wanted)
