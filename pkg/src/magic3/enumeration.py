"""Enumerate all magic squares for a given magic parameter s, two ways.

`enumerate_families` expands the two affine families over every lattice
solution of 4 + i + 3j + k = s and 5 + i + 3j + 2k = s and all eight
symmetries.  `brute_force` is the independent oracle: it sweeps the two free
cells (a1, a2), fills the rest of the grid from the line-sum equations, and
keeps grids whose entries are nonnegative and pairwise distinct.  `reconcile`
runs both plus the two counting devices and insists all four agree.

Output orders are deterministic: family expansion is lexicographic by
(family, i, j, k, symmetry index), brute force by (a1, a2).  Both
enumerators stream, since counts grow quadratically in s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    ELEMENTS,
    MagicSquare,
    MagicSquareError,
    Square,
    permutation,
    validate,
)
from .decompose import Decomposition, Family, base_grid
from .series import CountReport, count_closed, expand, magic_gf


class MismatchError(MagicSquareError):
    """Two counting or enumeration routes disagreed; never fires on a sound build."""

    def __init__(self, message: str, square: tuple[int, ...] | None = None) -> None:
        super().__init__(message)
        self.square = square


@dataclass(frozen=True, slots=True)
class EnumerationResult:
    """All magic squares with magic sum 3s, in a deterministic order."""

    s: int
    squares: tuple[MagicSquare, ...]
    source: str


# Permutation applied by construct() for each recorded symmetry, in symmetry
# index order: construct uses the inverse element.
_INVERSE_PERMS = tuple(permutation(g.inverse) for g in ELEMENTS)


def _family_solutions(s: int) -> Iterator[tuple[Family, int, int, int]]:
    """Lattice solutions (family, i, j, k) in lexicographic order."""
    for family in Family:
        budget = s - family.base_s
        for i in range(budget + 1):
            rest = budget - i
            for j in range(rest // 3 + 1):
                k, leftover = divmod(rest - 3 * j, family.k_step)
                if leftover == 0:
                    yield family, i, j, k


def iter_decompositions(s: int) -> Iterator[Decomposition]:
    """Every decomposition with magic parameter s, in output order."""
    for family, i, j, k in _family_solutions(s):
        for g in ELEMENTS:
            yield Decomposition(family=family, i=i, j=j, k=k, symmetry=g)


def iter_family_grids(s: int) -> Iterator[tuple[int, ...]]:
    """Raw row-major grids of the family expansion, in output order."""
    for family, i, j, k in _family_solutions(s):
        base = base_grid(family, i, j, k)
        for perm in _INVERSE_PERMS:
            yield tuple(base[p] for p in perm)


def iter_family_squares(s: int) -> Iterator[MagicSquare]:
    """Certified squares of the family expansion.

    Family grids satisfy the magic conditions by construction (the
    reconciliation suite checks this against the brute-force oracle), so the
    certificate is attached without a per-square revalidation.
    """
    m = 3 * s
    for grid in iter_family_grids(s):
        yield MagicSquare(square=Square(grid), magic_sum=m, s=s)


def enumerate_families(s: int) -> EnumerationResult:
    """All magic squares with magic sum 3s via the two-family expansion."""
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    return EnumerationResult(s=s, squares=tuple(iter_family_squares(s)), source="families")


def iter_brute_grids(s: int) -> Iterator[tuple[int, ...]]:
    """Brute-force sweep over (a1, a2); every other cell is forced by line sums.

    With magic sum m = 3s the center is forced to s, and the remaining cells
    follow from the row, column, and diagonal equations.  Grids with a
    negative forced entry or a repeated value are dropped.
    """
    for a1 in range(2 * s + 1):
        c3 = 2 * s - a1
        for a2 in range(2 * s + 1):
            a3 = 3 * s - a1 - a2
            c1 = a1 + a2 - s
            b1 = 4 * s - 2 * a1 - a2
            b3 = 2 * s - b1
            c2 = 2 * s - a2
            if a3 < 0 or c1 < 0 or b1 < 0 or b3 < 0:
                continue
            grid = (a1, a2, a3, b1, s, b3, c1, c2, c3)
            if len(set(grid)) == 9:
                yield grid


def iter_brute_squares(s: int) -> Iterator[MagicSquare]:
    """Certified brute-force squares; each one passes full validation."""
    for grid in iter_brute_grids(s):
        yield validate(Square(grid))


def brute_force(s: int) -> EnumerationResult:
    """All magic squares with magic sum 3s by the independent oracle."""
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    return EnumerationResult(s=s, squares=tuple(iter_brute_squares(s)), source="brute_force")


def count_families(s: int) -> int:
    """Number of squares produced by the family expansion at parameter s."""
    return sum(1 for _ in iter_family_grids(s))


def reconcile(s: int, include_brute: bool = True) -> CountReport:
    """Count magic squares four ways and insist on exact agreement.

    Raises MismatchError, carrying the first differing square when the two
    enumerated sets differ, on any disagreement.
    """
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    closed = count_closed(s)
    series_count = expand(magic_gf(), s + 1)[s]
    family_grids = list(iter_family_grids(s))
    family_set = set(family_grids)
    if len(family_set) != len(family_grids):
        seen: set[tuple[int, ...]] = set()
        for grid in family_grids:
            if grid in seen:
                raise MismatchError(
                    f"family expansion repeated a square at s={s}", square=grid
                )
            seen.add(grid)
    brute: int | None = None
    if include_brute:
        brute_set = set(iter_brute_grids(s))
        brute = len(brute_set)
        if family_set != brute_set:
            diff = min(family_set.symmetric_difference(brute_set))
            side = "families" if diff in family_set else "brute force"
            raise MismatchError(
                f"square sets differ at s={s}; first difference comes from {side}",
                square=diff,
            )
    counts = {closed, series_count, len(family_grids)}
    if brute is not None:
        counts.add(brute)
    if len(counts) != 1:
        raise MismatchError(
            f"counts disagree at s={s}: closed={closed} series={series_count} "
            f"families={len(family_grids)} brute={brute}"
        )
    return CountReport(
        s=s,
        closed_form=closed,
        series=series_count,
        families=len(family_grids),
        brute=brute,
    )
