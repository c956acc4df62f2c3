"""Exhaustive generation of the path classes and the counting sequences
they are claimed to follow.

Generation is lexicographic with U before F before D.  The counters are
computed independently of the generators (convolution and recurrence
formulas), so comparing the two is a genuine cross-check rather than one
piece of code agreeing with itself.
"""
from __future__ import annotations

from dataclasses import astuple, dataclass
from enum import Enum
from typing import ClassVar, Iterator, Union

from .paths import (
    DyckPath,
    MotzkinPath,
    PeakParityClass,
    PeakParityError,
    Step,
    classify,
    stats,
)


class ClaimViolation(PeakParityError):
    """An exhaustively generated count disagrees with its counting formula."""

    def __init__(self, n: int, column: str, expected: int, actual: int):
        self.n = n
        self.column = column
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"counting claim failed at n={n}: {column} expected {expected}, got {actual}"
        )


class PathClass(Enum):
    """Enumerable path families; n means semilength for Dyck, length for Motzkin."""

    ALL_DYCK = "all-dyck"
    DYCK_ALL_ODD = "dyck-all-odd"
    DYCK_ALL_EVEN = "dyck-all-even"
    DYCK_MIXED = "dyck-mixed"
    ALL_MOTZKIN = "all-motzkin"
    MOTZKIN_START_FLAT = "motzkin-start-flat"
    MOTZKIN_NO_GROUND_FLAT = "motzkin-no-ground-flat"


_LEX_RANK = {Step.UP: 0, Step.FLAT: 1, Step.DOWN: 2}


def lex_key(path: Union[DyckPath, MotzkinPath]) -> tuple[int, ...]:
    """Sort key realizing the U before F before D generation order."""
    return tuple(_LEX_RANK[s] for s in path.steps)


def _balanced(total: int, allow_flat: bool) -> Iterator[tuple[Step, ...]]:
    """All nonnegative balanced step sequences of the given length, in lex order."""
    buf: list[Step] = []

    def extend(level: int, remaining: int) -> Iterator[tuple[Step, ...]]:
        if remaining == 0:
            if level == 0:
                yield tuple(buf)
            return
        if remaining - 1 >= level + 1:
            buf.append(Step.UP)
            yield from extend(level + 1, remaining - 1)
            buf.pop()
        if allow_flat and remaining - 1 >= level:
            buf.append(Step.FLAT)
            yield from extend(level, remaining - 1)
            buf.pop()
        if level > 0:
            buf.append(Step.DOWN)
            yield from extend(level - 1, remaining - 1)
            buf.pop()

    return extend(0, total)


_DYCK_FILTER = {
    PathClass.ALL_DYCK: None,
    PathClass.DYCK_ALL_ODD: PeakParityClass.ALL_ODD,
    PathClass.DYCK_ALL_EVEN: PeakParityClass.ALL_EVEN,
    PathClass.DYCK_MIXED: PeakParityClass.MIXED,
}


def _generate_dyck(wanted: PeakParityClass | None, n: int) -> Iterator[DyckPath]:
    for steps in _balanced(2 * n, allow_flat=False):
        p = DyckPath(steps)
        if wanted is None or classify(p) is wanted:
            yield p


def _generate_motzkin(path_class: PathClass, n: int) -> Iterator[MotzkinPath]:
    for steps in _balanced(n, allow_flat=True):
        if path_class is PathClass.MOTZKIN_START_FLAT:
            if not steps or steps[0] is not Step.FLAT:
                continue
        m = MotzkinPath(steps)
        if path_class is PathClass.MOTZKIN_NO_GROUND_FLAT and stats(m).ground_flats:
            continue
        yield m


def generate(path_class: PathClass, n: int) -> Iterator[Union[DyckPath, MotzkinPath]]:
    """Every path of the class at size n, in lex order with U < F < D."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if path_class in _DYCK_FILTER:
        return _generate_dyck(_DYCK_FILTER[path_class], n)
    return _generate_motzkin(path_class, n)


_CATALAN: list[int] = [1]
_MOTZKIN: list[int] = [1]


def catalan(n: int) -> int:
    """Number of Dyck paths of semilength n, by the convolution recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_CATALAN) <= n:
        m = len(_CATALAN)
        _CATALAN.append(sum(_CATALAN[i] * _CATALAN[m - 1 - i] for i in range(m)))
    return _CATALAN[n]


def motzkin(n: int) -> int:
    """Number of Motzkin paths of length n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_MOTZKIN) <= n:
        m = len(_MOTZKIN)
        _MOTZKIN.append(
            _MOTZKIN[m - 1] + sum(_MOTZKIN[k] * _MOTZKIN[m - 2 - k] for k in range(m - 1))
        )
    return _MOTZKIN[n]


def riordan(n: int) -> int:
    """Number of Motzkin paths of length n with no ground-level flat step."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = 1
    for m in range(1, n + 1):
        r = motzkin(m - 1) - r
    return r


@dataclass(frozen=True)
class CountRow:
    """Observed class sizes at one semilength next to their claimed formulas."""

    n: int
    catalan: int
    odd_count: int
    motzkin_prev: int
    even_count: int
    riordan: int
    mixed_count: int


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]

    columns: ClassVar[tuple[str, ...]] = (
        "n",
        "catalan",
        "odd_count",
        "motzkin_prev",
        "even_count",
        "riordan",
        "mixed_count",
    )

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns)]
        for row in self.rows:
            lines.append("\t".join(str(v) for v in astuple(row)))
        return "\n".join(lines) + "\n"


def count_table(max_n: int) -> CountTable:
    """Exhaustive class counts for semilengths 1 through max_n.

    Every row is checked against the counting formulas on the way out;
    a mismatch raises ClaimViolation rather than returning bad data.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        odd = even = mixed = total = 0
        for p in generate(PathClass.ALL_DYCK, n):
            total += 1
            c = classify(p)
            if c is PeakParityClass.ALL_ODD:
                odd += 1
            elif c is PeakParityClass.ALL_EVEN:
                even += 1
            else:
                mixed += 1
        row = CountRow(
            n=n,
            catalan=catalan(n),
            odd_count=odd,
            motzkin_prev=motzkin(n - 1),
            even_count=even,
            riordan=riordan(n),
            mixed_count=mixed,
        )
        if total != row.catalan:
            raise ClaimViolation(n, "catalan", row.catalan, total)
        if odd != row.motzkin_prev:
            raise ClaimViolation(n, "motzkin_prev", row.motzkin_prev, odd)
        if even != row.riordan:
            raise ClaimViolation(n, "riordan", row.riordan, even)
        rows.append(row)
    return CountTable(tuple(rows))
