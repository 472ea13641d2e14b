"""
Dyck Paths

Bijection between strip link patterns and Dyck paths, and the two tile
statistics read off the region under a path: the signed tile sum and the
number of Dyck ribbons.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate

from app.combinatorics.patterns import DEFECT, BoundaryKind, LinkPattern, match_word
from app.core.errors import NotDyckPresentableError, UsageError


class Step(str, Enum):
    UP = "U"
    DOWN = "D"


@dataclass(frozen=True)
class DyckPath:
    """Up/Down path from height 0, ending at height L mod 2."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise UsageError("empty Dyck path")
        heights = self.heights
        if min(heights) < 0:
            raise UsageError("path dips below zero")
        if heights[-1] != self.end_height:
            raise UsageError(f"path ends at height {heights[-1]}, expected {self.end_height}")

    @classmethod
    def parse(cls, word: str) -> "DyckPath":
        """Build a path from a string such as "UUDD"."""
        return cls(tuple(Step(letter) for letter in word.strip().upper()))

    @property
    def size(self) -> int:
        return len(self.steps)

    @property
    def end_height(self) -> int:
        return self.size % 2

    @property
    def heights(self) -> list[int]:
        """Heights h_0 .. h_L."""
        return [0, *accumulate(1 if step is Step.UP else -1 for step in self.steps)]

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)


def is_dyck_presentable(pattern: LinkPattern) -> bool:
    """True unless the defect sits under a chord."""
    return not pattern.is_defect_nested()


def to_dyck(pattern: LinkPattern) -> DyckPath:
    """Openings and the defect become Up steps, closings become Down steps."""
    if not is_dyck_presentable(pattern):
        raise NotDyckPresentableError(f"pattern {pattern} has an enclosed defect")
    steps = []
    for site in range(1, pattern.size + 1):
        partner = pattern.partner(site)
        steps.append(Step.UP if partner == DEFECT or partner > site else Step.DOWN)
    return DyckPath(tuple(steps))


def from_dyck(path: DyckPath, kind: BoundaryKind | None = None) -> LinkPattern:
    """
    Inverse of to_dyck.

    Down steps close the most recent open Up step; the Up step left open on an
    odd path is the defect.
    """
    if kind is None:
        kind = BoundaryKind.REFLECTING_ODD if path.size % 2 else BoundaryKind.REFLECTING_EVEN
    partner = match_word(tuple(step.value for step in path.steps))
    return LinkPattern(kind, tuple(DEFECT if p is None else p + 1 for p in partner))


def signed_tile_sum(path: DyckPath) -> int:
    """
    Signed count of complete tiles under the path, rows alternating +1, -1, ...

    Row y (y >= 1) has a complete tile centred at column x whenever x + y is
    odd and h_x >= y + 1.
    """
    heights = path.heights
    total = 0
    for x in range(1, path.size):
        for y in range(1, heights[x]):
            if (x + y) % 2:
                total += 1 if y % 2 else -1
    return total


def signed_tile_sum_by_columns(path: DyckPath) -> int:
    """Same sum, grouped by columns: +1 for tiles on even sites, -1 on odd ones."""
    heights = path.heights
    even = sum(heights[x] // 2 for x in range(2, path.size, 2))
    odd = sum((heights[x] - 1) // 2 for x in range(1, path.size, 2))
    return even - odd


def dyck_ribbons(path: DyckPath) -> int:
    """
    Number of ribbons removed when peeling the region under the path.

    Each peel removes the top tile of every column (half tiles of row 0
    included); a ribbon is a maximal run of adjacent columns that still had a
    tile. Peeling lowers the boundary by two until nothing is left.
    """
    heights = path.heights[1:]
    ribbons = 0
    while any(h >= 1 for h in heights):
        inside = False
        for h in heights:
            if h >= 1 and not inside:
                ribbons += 1
            inside = h >= 1
        heights = [h - 2 for h in heights]
    return ribbons
