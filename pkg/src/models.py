from typing import Iterable, Iterator, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InvalidPartitionError, InvalidPolynomialError


def _as_int(value, error: type[ValueError], what: str) -> int:
    # bool is an int subclass; True as a part is almost certainly a bug upstream
    if isinstance(value, bool) or not isinstance(value, int):
        raise error(f"{what} must be an integer, got {value!r}")
    return value


class Partition:
    """
    A nonincreasing finite sequence of positive integers.

    Parts are 1-indexed in the usual way (part(1) is the largest). In the
    Ferrers graph, row i (counted from 0 at the bottom) holds part(i + 1)
    unit squares.
    """

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(_as_int(p, InvalidPartitionError, "part") for p in parts)
        for index, part in enumerate(parts, start=1):
            if part < 1:
                raise InvalidPartitionError(f"part {index} is {part}; parts must be at least 1")
        for index in range(1, len(parts)):
            if parts[index - 1] < parts[index]:
                raise InvalidPartitionError(
                    f"parts must be nonincreasing: part {index} = {parts[index - 1]} "
                    f"< part {index + 1} = {parts[index]}"
                )
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def length(self) -> int:
        return len(self._parts)

    def part(self, i: int) -> int:
        """Return part i (1-indexed), or 0 outside 1..length."""
        if 1 <= i <= len(self._parts):
            return self._parts[i - 1]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(("Partition", self._parts))

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    def get_summary(self) -> str:
        return "(" + ",".join(str(p) for p in self._parts) + ")"


class CoeffPoly:
    """
    A polynomial with nonnegative integer coefficients, index = degree.

    Trailing zeros are trimmed on construction, so the empty coefficient
    tuple is the zero polynomial. The zero polynomial has degree -1.
    """

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = [_as_int(c, InvalidPolynomialError, "coefficient") for c in coeffs]
        for degree, coeff in enumerate(coeffs):
            if coeff < 0:
                raise InvalidPolynomialError(f"coefficient of t^{degree} is {coeff}; must be nonnegative")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def weight(self) -> int:
        return sum(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, m: int) -> int:
        if 0 <= m < len(self._coeffs):
            return self._coeffs[m]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("CoeffPoly", self._coeffs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._coeffs)!r})"

    def get_summary(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for degree, coeff in enumerate(self._coeffs):
            if coeff == 0:
                continue
            if degree == 0:
                terms.append(str(coeff))
            else:
                power = "t" if degree == 1 else f"t^{degree}"
                terms.append(power if coeff == 1 else f"{coeff}{power}")
        return " + ".join(terms)


def castelnuovo_sigma(coeffs: tuple[int, ...]) -> Optional[int]:
    """
    Return the staircase length sigma of a trimmed coefficient tuple, or None
    if the tuple does not have the Castelnuovo shape.

    The shape is s(0)=1, ..., s(sigma-1)=sigma followed by a nonincreasing
    tail bounded by sigma. The zero polynomial has sigma = 0.
    """
    sigma = 0
    while sigma < len(coeffs) and coeffs[sigma] == sigma + 1:
        sigma += 1
    previous = sigma
    for coeff in coeffs[sigma:]:
        if coeff > previous:
            return None
        previous = coeff
    # a nonempty tail after an empty staircase means s(0) != 1
    if sigma == 0 and coeffs:
        return None
    return sigma


class CastelnuovoPoly(CoeffPoly):
    """A CoeffPoly whose coefficients form a Castelnuovo function."""

    def __init__(self, coeffs: Iterable[int] = ()):
        super().__init__(coeffs)
        sigma = castelnuovo_sigma(self._coeffs)
        if sigma is None:
            raise InvalidPolynomialError(f"{list(self._coeffs)} is not a Castelnuovo function")
        self._sigma = sigma

    @property
    def sigma(self) -> int:
        return self._sigma


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class Cell(_Record):
    row: int = Field(ge=0, description="Row index, 0 is the bottom row holding the largest part")
    col: int = Field(ge=0, description="Column index, 0 is the leftmost column")

    @property
    def is_black(self) -> bool:
        return (self.row + self.col) % 2 == 0


class ChessCount(_Record):
    b: int = Field(ge=0, description="Number of black unit squares")
    w: int = Field(ge=0, description="Number of white unit squares")

    @property
    def weight(self) -> int:
        return self.b + self.w

    def get_summary(self) -> str:
        return f"b = {self.b}, w = {self.w}"


# A requested (b, w) pair has exactly the shape of an observed chess count.
BWPair = ChessCount


class NCPair(_Record):
    n: int = Field(ge=0, description="Weight b + w")
    c: int = Field(description="Signed label sum b - w")

    def get_summary(self) -> str:
        return f"n = {self.n}, c = {self.c}"


TerminalKind = Literal["zero", "one", "staircase"]


class Terminal(_Record):
    kind: TerminalKind = Field(description="How repeated star application stops")
    u: Optional[int] = Field(default=None, gt=0, description="Staircase degree, present iff kind is staircase")

    @model_validator(mode="after")
    def _u_iff_staircase(self):
        if (self.kind == "staircase") != (self.u is not None):
            raise ValueError("u must be given exactly when kind is 'staircase'")
        return self

    def get_summary(self) -> str:
        if self.kind == "staircase":
            return f"staircase u={self.u}"
        return self.kind


class ReductionResult(_Record):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    steps: int = Field(ge=0, description="Number of star applications before stopping")
    terminal: Terminal
    trace: Optional[tuple[CastelnuovoPoly, ...]] = Field(
        default=None, description="Every intermediate polynomial, input first, when requested"
    )


FormCase = Literal["form_plus", "form_minus"]


class ThmBForm(_Record):
    case: FormCase = Field(description="form_plus: ((k+1)^2+l, k(k+1)+l); form_minus: (k^2+l, k(k+1)+l)")
    k: int = Field(ge=0)
    l: int = Field(ge=0)

    def get_summary(self) -> str:
        return f"{self.case}(k={self.k}, l={self.l})"


WitnessCase = Literal["case1", "case2"]


class WitnessDecomposition(_Record):
    l: int = Field(ge=0, description="Largest j with j^2 <= b and j(j+1) <= w")
    case: WitnessCase
    b_rem: int = Field(ge=0, description="Black squares beyond the staircase part")
    w_rem: int = Field(ge=0, description="White squares beyond the staircase part")


RenderStyle = Literal["ferrers", "castelnuovo", "problem10"]
RenderFormat = Literal["ascii", "svg"]


class RenderSpec(_Record):
    style: RenderStyle = "ferrers"
    format: RenderFormat = "ascii"
    cell_size: int = Field(default=20, gt=0, description="SVG pixels per unit square")
    show_labels: bool = Field(default=True, description="Draw +1/-1 labels in problem10 style")

    @model_validator(mode="after")
    def _svg_cell_size(self):
        if self.format == "svg" and self.cell_size < 4:
            raise ValueError(f"cell_size must be at least 4 for svg, got {self.cell_size}")
        return self


class Counterexample(_Record):
    check: str
    weight: int = Field(ge=0, description="Weight being checked when the failure was found")
    subject: str = Field(description="Offending partition, polynomial or pair")
    expected: str
    actual: str


class VerificationReport(_Record):
    max_weight: int = Field(ge=0)
    checks_run: tuple[str, ...]
    passed: bool = Field(serialization_alias="pass")
    counterexamples: tuple[Counterexample, ...] = ()
    counterexample_cap: int = Field(ge=1, description="Maximum counterexamples kept per check")
    dropped: int = Field(default=0, ge=0, description="Counterexamples found beyond the cap")
    elapsed: float = Field(ge=0, description="Wall-clock seconds")

    @model_validator(mode="after")
    def _pass_iff_clean(self):
        if self.passed != (not self.counterexamples and self.dropped == 0):
            raise ValueError("passed must hold exactly when no counterexample was found")
        return self

    def get_summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}: {len(self.checks_run)} checks up to weight {self.max_weight} "
            f"in {self.elapsed:.2f}s, {len(self.counterexamples) + self.dropped} counterexamples"
        )


class CensusRow(_Record):
    n: int = Field(ge=0)
    b: int = Field(ge=0)
    w: int = Field(ge=0)
    count_all: int = Field(ge=0, description="Partitions of n with chess count (b, w)")
    count_distinct: int = Field(ge=0, description="Distinct-parts partitions of n with chess count (b, w)")

    @model_validator(mode="after")
    def _consistent(self):
        if self.b + self.w != self.n:
            raise ValueError("b + w must equal n")
        if self.count_distinct > self.count_all:
            raise ValueError("count_distinct cannot exceed count_all")
        return self


class ReductionSummary(_Record):
    steps: int = Field(ge=0)
    terminal: TerminalKind
    u: Optional[int] = None


class AnalyzeRecord(_Record):
    parts: tuple[int, ...]
    weight: int = Field(ge=0)
    distinct: bool
    conjugate: tuple[int, ...]
    b: int = Field(ge=0)
    w: int = Field(ge=0)
    c: int
    castelnuovo: tuple[int, ...]
    reduction: ReductionSummary
    thm_b: ThmBForm
    nc: NCPair

    @model_validator(mode="after")
    def _consistent(self):
        if self.b + self.w != self.weight or self.c != self.b - self.w:
            raise ValueError("b + w must equal weight and c must equal b - w")
        if self.thm_b.l != self.b - (self.b - self.w) ** 2:
            raise ValueError("thm_b.l must equal b - (b - w)^2")
        return self


class WitnessRecord(_Record):
    parts: tuple[int, ...]
    castelnuovo: tuple[int, ...]
    b: int = Field(ge=0)
    w: int = Field(ge=0)
    n: int = Field(ge=0)
    c: int
    decomposition: WitnessDecomposition
