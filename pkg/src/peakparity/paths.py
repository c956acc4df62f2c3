"""Lattice path value types and the peak-parity analysis built on them.

A Dyck path is a balanced sequence of up and down steps that never dips
below its starting level.  A Motzkin path additionally allows flat steps.
Both are represented as immutable step tuples.  The functions here parse
and render the one-letter text form (U, D, F), classify Dyck paths by the
parities of their peak heights, decompose paths at returns to ground
level, and collect the step statistics that the bijection maps preserve.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union


class PeakParityError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidCharacter(PeakParityError):
    """A character outside the step alphabet was found while parsing."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"invalid step character {char!r} at position {position}")


class ContainsFlat(PeakParityError):
    """A flat step appeared where only up and down steps are allowed."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"flat step at position {position} is not allowed here")


class UnbalancedPath(PeakParityError):
    """The steps do not return to the starting level."""

    def __init__(self, level: int):
        self.level = level
        super().__init__(f"path ends at level {level}, expected 0")


class BelowGround(PeakParityError):
    """A step took the path below its starting level."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"path drops below ground at position {position}")


class NotInImage(PeakParityError):
    """The path cannot be produced by the map whose inverse was requested."""


class Step(Enum):
    """One lattice step; the enum value is its text form."""

    UP = "U"
    DOWN = "D"
    FLAT = "F"

    @property
    def delta(self) -> int:
        """Level change contributed by this step."""
        return _DELTAS[self]

    def __repr__(self) -> str:
        return f"Step.{self.name}"


_DELTAS = {Step.UP: 1, Step.DOWN: -1, Step.FLAT: 0}


def parse_steps(text: str) -> tuple[Step, ...]:
    """Turn a string of U, D, F characters into a step tuple.

    Raises InvalidCharacter at the first offending position.
    """
    steps = []
    for i, ch in enumerate(text):
        try:
            steps.append(Step(ch))
        except ValueError:
            raise InvalidCharacter(i, ch) from None
    return tuple(steps)


def render_steps(steps: Iterable[Step]) -> str:
    """Inverse of parse_steps."""
    return "".join(s.value for s in steps)


class PeakParityClass(Enum):
    """Which parities occur among a Dyck path's peak heights."""

    ALL_ODD = "all-odd"
    ALL_EVEN = "all-even"
    MIXED = "mixed"


@dataclass(frozen=True)
class DyckPath:
    """Balanced up/down sequence that never goes below its starting level.

    Validation happens at construction, so every instance in circulation
    is a well-formed path.  The empty path is allowed.
    """

    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        level = 0
        for i, step in enumerate(self.steps):
            if step is Step.FLAT:
                raise ContainsFlat(i)
            level += step.delta
            if level < 0:
                raise BelowGround(i)
        if level != 0:
            raise UnbalancedPath(level)

    @classmethod
    def from_text(cls, text: str) -> "DyckPath":
        return cls(parse_steps(text))

    @property
    def semilength(self) -> int:
        """Number of up steps, half the step count."""
        return len(self.steps) // 2

    def render(self) -> str:
        return render_steps(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"DyckPath({self.render()!r})"


@dataclass(frozen=True)
class MotzkinPath:
    """Balanced up/down/flat sequence that never goes below its start."""

    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        level = 0
        for i, step in enumerate(self.steps):
            level += step.delta
            if level < 0:
                raise BelowGround(i)
        if level != 0:
            raise UnbalancedPath(level)

    @classmethod
    def from_text(cls, text: str) -> "MotzkinPath":
        return cls(parse_steps(text))

    @property
    def length(self) -> int:
        return len(self.steps)

    def render(self) -> str:
        return render_steps(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MotzkinPath({self.render()!r})"


Path = Union[DyckPath, MotzkinPath]


def validate_dyck(steps: Iterable[Step]) -> DyckPath:
    """Construct a DyckPath, surfacing the first violation found."""
    return DyckPath(tuple(steps))


def validate_motzkin(steps: Iterable[Step]) -> MotzkinPath:
    """Construct a MotzkinPath, surfacing the first violation found."""
    return MotzkinPath(tuple(steps))


def peaks(p: DyckPath) -> list[tuple[int, int]]:
    """(position, height) of every up step immediately followed by a down step.

    The position is the index of the up step and the height is the level
    reached by it.  The empty path has no literal peak; by convention it
    reports a single peak of height 0 at position -1, which makes the
    empty path classify as all-even.
    """
    if not p.steps:
        return [(-1, 0)]
    found = []
    level = 0
    last = len(p.steps) - 1
    for i, step in enumerate(p.steps):
        level += step.delta
        if step is Step.UP and i < last and p.steps[i + 1] is Step.DOWN:
            found.append((i, level))
    return found


def classify(p: DyckPath) -> PeakParityClass:
    """Sort a Dyck path by the parities occurring among its peak heights."""
    heights = [h for _, h in peaks(p)]
    if all(h % 2 == 1 for h in heights):
        return PeakParityClass.ALL_ODD
    if all(h % 2 == 0 for h in heights):
        return PeakParityClass.ALL_EVEN
    return PeakParityClass.MIXED


def decompose(p: DyckPath) -> tuple[DyckPath, ...]:
    """Interior of each return-to-ground factor, in order.

    Every nonempty Dyck path factors uniquely as U P1 D U P2 D ... U Pk D
    where each cut is a return to ground level; the Pi are returned.  The
    empty path yields the empty tuple.
    """
    parts = []
    level = 0
    start = 0
    for i, step in enumerate(p.steps):
        level += step.delta
        if level == 0:
            parts.append(DyckPath(p.steps[start + 1 : i]))
            start = i + 1
    return tuple(parts)


@dataclass(frozen=True)
class PathStats:
    """Step statistics preserved or transported by the maps.

    peaks counts literal up-down factors, so the empty path has 0 here
    even though classify treats it through the height-0 convention.
    """

    peaks: int
    ground_returns: int
    ground_flats: int
    u_count: int
    f_count: int
    uu_count: int
    fu_count: int

    @property
    def ground_downs(self) -> int:
        """Down steps that land on ground level."""
        return self.ground_returns

    @property
    def peak_image(self) -> int:
        """(#U - #UU) + (#F - #FU), the peak count transported to an image path."""
        return (self.u_count - self.uu_count) + (self.f_count - self.fu_count)

    def as_dict(self) -> dict[str, int]:
        return {
            "peaks": self.peaks,
            "ground_returns": self.ground_returns,
            "ground_flats": self.ground_flats,
            "ground_downs": self.ground_downs,
            "u_count": self.u_count,
            "f_count": self.f_count,
            "uu_count": self.uu_count,
            "fu_count": self.fu_count,
            "peak_image": self.peak_image,
        }


def stats(path: Path) -> PathStats:
    """One scan collecting every statistic for a Dyck or Motzkin path."""
    steps = path.steps
    n_peaks = returns = gflats = u = f = uu = fu = 0
    level = 0
    last = len(steps) - 1
    for i, step in enumerate(steps):
        nxt = steps[i + 1] if i < last else None
        if step is Step.UP:
            u += 1
            if nxt is Step.UP:
                uu += 1
            elif nxt is Step.DOWN:
                n_peaks += 1
        elif step is Step.FLAT:
            f += 1
            if nxt is Step.UP:
                fu += 1
            if level == 0:
                gflats += 1
        level += step.delta
        if step is Step.DOWN and level == 0:
            returns += 1
    return PathStats(n_peaks, returns, gflats, u, f, uu, fu)


def split_at_ground_flats(m: MotzkinPath) -> tuple[MotzkinPath, ...]:
    """Cut before every ground-level flat step.

    Defined on paths that start with a ground-level flat, so every
    segment begins with one.  Raises NotInImage otherwise.  The empty
    path splits into no segments.
    """
    if not m.steps:
        return ()
    if m.steps[0] is not Step.FLAT:
        raise NotInImage("path does not start with a ground-level flat step")
    cuts = []
    level = 0
    for i, step in enumerate(m.steps):
        if step is Step.FLAT and level == 0:
            cuts.append(i)
        level += step.delta
    cuts.append(len(m.steps))
    return tuple(MotzkinPath(m.steps[a:b]) for a, b in zip(cuts, cuts[1:]))


def split_at_ground_downs(m: MotzkinPath) -> tuple[MotzkinPath, ...]:
    """Cut after every down step landing on ground level.

    Defined on paths with no ground-level flat step; each segment is then
    a single arch.  Raises NotInImage if a ground-level flat is present.
    """
    segments = []
    level = 0
    start = 0
    for i, step in enumerate(m.steps):
        if step is Step.FLAT and level == 0:
            raise NotInImage(f"flat step at ground level at position {i}")
        level += step.delta
        if step is Step.DOWN and level == 0:
            segments.append(MotzkinPath(m.steps[start : i + 1]))
            start = i + 1
    return tuple(segments)
