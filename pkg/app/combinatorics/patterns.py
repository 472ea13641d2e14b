"""
Link Patterns

Planar pairings of L boundary sites for periodic (cylinder) and reflecting
(strip) boundaries. Sites are 1-indexed; an odd number of sites leaves exactly
one defect, stored as DEFECT in the pairing.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import comb

from app.core.errors import ParityMismatchError, UsageError

DEFECT = 0


class BoundaryKind(str, Enum):
    """Boundary condition and parity of the system size."""

    PERIODIC_EVEN = "periodic-even"
    PERIODIC_ODD = "periodic-odd"
    REFLECTING_EVEN = "reflecting-even"
    REFLECTING_ODD = "reflecting-odd"

    @property
    def periodic(self) -> bool:
        return self in (BoundaryKind.PERIODIC_EVEN, BoundaryKind.PERIODIC_ODD)

    @property
    def odd(self) -> bool:
        return self in (BoundaryKind.PERIODIC_ODD, BoundaryKind.REFLECTING_ODD)

    def half_size(self, size: int) -> int:
        """Return n for L = 2n or L = 2n + 1, validating parity."""
        if size < 2:
            raise UsageError(f"system size must be at least 2, got {size}")
        if size % 2 != int(self.odd):
            raise ParityMismatchError(f"{self.value} requires {'odd' if self.odd else 'even'} L, got {size}")
        return size // 2

    def size_for(self, n: int) -> int:
        """Return L for half size n."""
        if n < 1:
            raise UsageError(f"n must be positive, got {n}")
        return 2 * n + 1 if self.odd else 2 * n


@dataclass(frozen=True)
class LinkPattern:
    """
    A planar pairing of boundary sites.

    pairing[i - 1] is the partner of site i, or DEFECT for the unpaired site.
    Periodic patterns are stored in the strip presentation; a chord passing
    the defect line of a periodic odd pattern is not a crossing.
    """

    kind: BoundaryKind
    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        size = len(self.pairing)
        self.kind.half_size(size)

        defects = [i for i in range(1, size + 1) if self.pairing[i - 1] == DEFECT]
        if len(defects) != size % 2:
            raise UsageError(f"expected {size % 2} defect sites, found {len(defects)}")
        for i in range(1, size + 1):
            j = self.pairing[i - 1]
            if j == DEFECT:
                continue
            if not 1 <= j <= size or j == i or self.pairing[j - 1] != i:
                raise UsageError(f"pairing is not an involution at site {i}")

        chords = self.chords
        for a, b in chords:
            for c, d in chords:
                if a < c < b < d:
                    raise UsageError(f"chords ({a},{b}) and ({c},{d}) cross")
        if self.kind is BoundaryKind.REFLECTING_ODD and self.is_defect_nested():
            raise UsageError("defect of a reflecting pattern is enclosed by a chord")

    @property
    def size(self) -> int:
        return len(self.pairing)

    @property
    def n(self) -> int:
        return self.size // 2

    @cached_property
    def chords(self) -> tuple[tuple[int, int], ...]:
        """Pairs (i, j) with i < j, ordered by opening site."""
        return tuple(
            (i, j) for i, j in enumerate(self.pairing, start=1) if j != DEFECT and i < j
        )

    @property
    def defect(self) -> int | None:
        for i, j in enumerate(self.pairing, start=1):
            if j == DEFECT:
                return i
        return None

    def partner(self, site: int) -> int:
        return self.pairing[site - 1]

    def is_defect_nested(self) -> bool:
        """True if some chord encloses the defect in the strip presentation."""
        d = self.defect
        if d is None:
            return False
        return any(a < d < b for a, b in self.chords)

    @classmethod
    def trusted(cls, kind: BoundaryKind, pairing: tuple[int, ...]) -> "LinkPattern":
        """Construct without validation; the caller guarantees a planar pairing."""
        pattern = object.__new__(cls)
        object.__setattr__(pattern, "kind", kind)
        object.__setattr__(pattern, "pairing", pairing)
        return pattern

    @classmethod
    def from_pairs(
        cls, kind: BoundaryKind, size: int, pairs: list[tuple[int, int]]
    ) -> "LinkPattern":
        """Build a pattern from a list of 1-indexed site pairs."""
        pairing = [DEFECT] * size
        for i, j in pairs:
            pairing[i - 1] = j
            pairing[j - 1] = i
        return cls(kind, tuple(pairing))

    def __str__(self) -> str:
        body = " ".join(f"({a},{b})" for a, b in self.chords)
        if self.defect is not None:
            body += f" |{self.defect}"
        return body


def reference_pattern(kind: BoundaryKind, size: int) -> LinkPattern:
    """The small-arc state pairing (2i - 1, 2i), defect at site L when L is odd."""
    n = kind.half_size(size)
    return LinkPattern.from_pairs(kind, size, [(2 * i - 1, 2 * i) for i in range(1, n + 1)])


def dyck_words(length: int, end_height: int) -> list[tuple[str, ...]]:
    """
    All nonnegative Up/Down words of a given length ending at end_height.

    Words are generated in lexicographic order with "U" before "D".
    """
    words: list[tuple[str, ...]] = []
    word: list[str] = []

    def grow(height: int) -> None:
        remaining = length - len(word) - 1
        if remaining < 0:
            if height == end_height:
                words.append(tuple(word))
            return
        if height + 1 - end_height <= remaining:
            word.append("U")
            grow(height + 1)
            word.pop()
        if height > 0 and abs(height - 1 - end_height) <= remaining:
            word.append("D")
            grow(height - 1)
            word.pop()

    grow(0)
    return words


def match_word(word: tuple[str, ...]) -> list[int | None]:
    """Partner positions (0-indexed) of a bracket word; None marks the unmatched Up."""
    stack: list[int] = []
    partner: list[int | None] = [None] * len(word)
    for position, step in enumerate(word):
        if step == "U":
            stack.append(position)
        else:
            opener = stack.pop()
            partner[opener] = position
            partner[position] = opener
    return partner


def enumerate_link_patterns(kind: BoundaryKind, size: int) -> list[LinkPattern]:
    """
    Enumerate every link pattern of a boundary kind exactly once.

    Reflecting and periodic even patterns come in lexicographic Dyck order
    (Up < Down). Periodic odd patterns are grouped by defect site and, within a
    group, ordered by the Dyck word of the remaining sites read cyclically
    from the site after the defect.

    Args:
        kind: Boundary kind.
        size: Number of sites L.

    Returns:
        List of link patterns.
    """
    kind.half_size(size)

    if kind is not BoundaryKind.PERIODIC_ODD:
        patterns = []
        for word in dyck_words(size, size % 2):
            partner = match_word(word)
            pairing = tuple(DEFECT if p is None else p + 1 for p in partner)
            patterns.append(LinkPattern(kind, pairing))
        return patterns

    words = dyck_words(size - 1, 0)
    patterns = []
    for defect in range(1, size + 1):
        cyclic = [(defect + offset - 1) % size + 1 for offset in range(1, size)]
        for word in words:
            pairing = [DEFECT] * size
            for position, other in enumerate(match_word(word)):
                pairing[cyclic[position] - 1] = cyclic[other]
            patterns.append(LinkPattern(kind, tuple(pairing)))
    return patterns


def count_link_patterns(kind: BoundaryKind, size: int) -> int:
    """Number of link patterns by the ballot-number formula."""
    n = kind.half_size(size)
    if kind is BoundaryKind.PERIODIC_ODD:
        return comb(size, n)
    # paths of length L from height 0 to L mod 2 that stay nonnegative
    return comb(size, n) - comb(size, n - 1)
