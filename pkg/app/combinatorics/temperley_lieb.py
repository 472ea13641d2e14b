"""
Temperley-Lieb Action

Generator action e_i on link patterns at loop weight 1, boundary loop counts
against the small-arc reference state, and the lattice symmetries.
"""

from app.combinatorics.patterns import DEFECT, BoundaryKind, LinkPattern
from app.core.errors import UsageError


def generator_sites(kind: BoundaryKind, size: int) -> list[int]:
    """Indices i of the generators e_i: 1..L on the cylinder, 1..L-1 on the strip."""
    return list(range(1, size + 1 if kind.periodic else size))


def apply_ei(pattern: LinkPattern, i: int) -> tuple[LinkPattern, int]:
    """
    Apply e_i to a link pattern.

    e_i joins sites i and i + 1 (sites L and 1 for i = L on the cylinder) and
    connects their former partners. A defect on either site moves to the
    partner of the other one.

    Args:
        pattern: Link pattern to act on.
        i: Generator index.

    Returns:
        Image pattern and the number of closed loops removed (0 or 1).
    """
    size = pattern.size
    last = size if pattern.kind.periodic else size - 1
    if not 1 <= i <= last:
        raise UsageError(f"generator index {i} out of range 1..{last} for {pattern.kind.value}")

    j = i % size + 1
    a = pattern.partner(i)
    b = pattern.partner(j)
    if a == j:
        return pattern, 1

    pairing = list(pattern.pairing)
    pairing[i - 1] = j
    pairing[j - 1] = i
    if a == DEFECT:
        pairing[b - 1] = DEFECT
    elif b == DEFECT:
        pairing[a - 1] = DEFECT
    else:
        pairing[a - 1] = b
        pairing[b - 1] = a
    return LinkPattern.trusted(pattern.kind, tuple(pairing)), 0


def _reference_partner(site: int, size: int) -> int:
    if size % 2 and site == size:
        return DEFECT
    return site + 1 if site % 2 else site - 1


def boundary_loops(pattern: LinkPattern) -> int:
    """
    Closed loops formed by gluing a pattern to the small-arc reference state.

    Traces the union of both matchings; the open path joining the two defects
    of an odd system is not a loop.
    """
    size = pattern.size
    seen = [False] * (size + 1)

    # The open strand starts at the pattern's defect and ends at site L.
    start = pattern.defect
    if start is not None:
        site, use_reference = start, True
        while site != DEFECT and not seen[site]:
            seen[site] = True
            site = _reference_partner(site, size) if use_reference else pattern.partner(site)
            use_reference = not use_reference

    loops = 0
    for first in range(1, size + 1):
        if seen[first]:
            continue
        loops += 1
        site, use_reference = first, True
        while not seen[site]:
            seen[site] = True
            site = _reference_partner(site, size) if use_reference else pattern.partner(site)
            use_reference = not use_reference
    return loops


def loops_right_openings(pattern: LinkPattern) -> int:
    """Odd sites whose partner lies to their right; the defect never counts."""
    return sum(
        1
        for site in range(1, pattern.size + 1, 2)
        if pattern.partner(site) != DEFECT and pattern.partner(site) > site
    )


def rotate(pattern: LinkPattern, shift: int = 1) -> LinkPattern:
    """Rotate a periodic pattern so that site i moves to site i + shift."""
    if not pattern.kind.periodic:
        raise UsageError("rotation is defined for periodic patterns only")
    size = pattern.size
    pairing = [DEFECT] * size
    for site in range(1, size + 1):
        partner = pattern.partner(site)
        target = (site - 1 + shift) % size + 1
        pairing[target - 1] = DEFECT if partner == DEFECT else (partner - 1 + shift) % size + 1
    return LinkPattern.trusted(pattern.kind, tuple(pairing))


def reflect(pattern: LinkPattern) -> LinkPattern:
    """Mirror a pattern, sending site i to L + 1 - i."""
    size = pattern.size
    pairing = [DEFECT] * size
    for site in range(1, size + 1):
        partner = pattern.partner(site)
        pairing[size - site] = DEFECT if partner == DEFECT else size + 1 - partner
    return LinkPattern.trusted(pattern.kind, tuple(pairing))
