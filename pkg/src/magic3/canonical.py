"""Canonical form of a magic square and its coordinate systems.

Every magic square has exactly one dihedral image whose corners satisfy
c3 < c1 < a3 < a1 (corners are pairwise distinct because all entries are).
Subtracting the minimum entry times ONES then puts a zero into the grid.
The result is a *reduced* magic square, which is forced into a rigid shape:
its top-center entry is 0, its bottom-center entry is 2s, and the whole grid
is determined by the pair (r, s) where r = c3 and s = b2:

        2s-r   0     s+r
        2r     s     2s-2r
        s-r    2s    r

Reduced squares are equivalently parametrized by coordinates (alpha, beta)
with alpha = s - 2r - 2 and beta = r - 1: the grid equals
SEED_F1 + alpha * GEN1 + beta * GEN2, and the pairs with alpha >= -1,
beta >= 0, beta != alpha + 1 are exactly the reduced magic squares.  The
excluded diagonal beta = alpha + 1 always produces repeated entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DihedralElement,
    MagicSquare,
    MagicSquareError,
    Square,
    apply,
    validate,
)


class NotReducedError(MagicSquareError):
    """The grid is not a reduced magic square."""


class IllegalCoordinatesError(MagicSquareError):
    """Coordinates outside alpha >= -1, beta >= 0, or on the excluded diagonal."""


@dataclass(frozen=True, slots=True)
class ReducedMagicSquare:
    """A magic square in reduced form, with r = c3 and s = b2."""

    square: MagicSquare
    r: int
    s: int

    @property
    def entries(self) -> tuple[int, ...]:
        return self.square.entries


@dataclass(frozen=True, slots=True)
class ReducedCoordinates:
    """Affine coordinates of a reduced grid over (GEN1, GEN2) relative to SEED_F1.

    The constructor enforces alpha >= -1 and beta >= 0.  It does not exclude
    beta = alpha + 1, so the coordinate maps stay total on legal (r, s)
    pairs; materializing a square from such coordinates is what fails.
    """

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < -1:
            raise IllegalCoordinatesError(f"alpha must be >= -1, got {self.alpha}")
        if self.beta < 0:
            raise IllegalCoordinatesError(f"beta must be >= 0, got {self.beta}")


def is_canonical(x: Square) -> bool:
    """True when the corner ordering c3 < c1 < a3 < a1 holds."""
    e = x.entries
    return e[8] < e[6] < e[2] < e[0]


def canonical_symmetry(m: MagicSquare) -> DihedralElement:
    """The unique dihedral element whose image of m has ordered corners.

    Exactly two elements send the smallest corner to the c3 cell and they
    disagree on the c1/a3 order, so exactly one image is canonical.  A
    multiple or empty match would mean corrupted input or a group-table bug.
    """
    matches = [g for g in DihedralElement if is_canonical(apply(g, m.square))]
    assert len(matches) == 1, f"expected one canonical image, found {len(matches)}"
    return matches[0]


def as_reduced(m: MagicSquare) -> ReducedMagicSquare:
    """Certify a magic square as reduced, or raise NotReducedError."""
    e = m.entries
    if 0 not in e:
        raise NotReducedError("no entry equals 0")
    if not is_canonical(m.square):
        raise NotReducedError(
            f"corners ({e[8]}, {e[6]}, {e[2]}, {e[0]}) are not strictly increasing"
        )
    s = m.s
    r = e[8]
    # Consequences of the two checks above for a valid magic square.
    assert e[1] == 0, "the zero of a reduced magic square sits at a2"
    assert e[7] == 2 * s, "c2 = 2s in a reduced magic square"
    assert r >= 1, "c3 >= 1 in a reduced magic square"
    assert e == _grid_from_rs(r, s), "grid is determined by (r, s)"
    return ReducedMagicSquare(square=m, r=r, s=s)


def reduce(m: MagicSquare) -> tuple[ReducedMagicSquare, int, DihedralElement]:
    """Reduce to canonical form; returns (reduced, i, g) with i the minimum entry.

    The symmetry g is applied first and i * ONES subtracted second (the two
    commute, but a fixed order keeps g reproducible).  The inverse transform
    apply(g.inverse, reduced + i * ONES) recovers the input exactly.
    """
    g = canonical_symmetry(m)
    oriented = apply(g, m.square)
    shift = min(oriented.entries)
    translated = Square(tuple(value - shift for value in oriented.entries))
    return as_reduced(validate(translated)), shift, g


def _grid_from_rs(r: int, s: int) -> tuple[int, ...]:
    return (2 * s - r, 0, s + r, 2 * r, s, 2 * s - 2 * r, s - r, 2 * s, r)


def reduced_from_rs(r: int, s: int) -> ReducedMagicSquare:
    """Build the reduced magic square with c3 = r and b2 = s.

    Raises NotReducedError when the grid has a negative entry, repeated
    entries, or unordered corners for this (r, s).
    """
    try:
        magic = validate(Square(_grid_from_rs(r, s)))
    except MagicSquareError as exc:
        raise NotReducedError(f"(r={r}, s={s}) is not a reduced magic square: {exc}") from exc
    return as_reduced(magic)


def rs_to_alpha_beta(r: int, s: int) -> ReducedCoordinates:
    """Map (r, s) to (alpha, beta) = (s - 2r - 2, r - 1).

    Raises IllegalCoordinatesError when the image leaves alpha >= -1,
    beta >= 0 (that is, when r < 1 or s < 2r + 1).
    """
    return ReducedCoordinates(alpha=s - 2 * r - 2, beta=r - 1)


def alpha_beta_to_rs(coords: ReducedCoordinates) -> tuple[int, int]:
    """Inverse coordinate map: r = beta + 1, s = alpha + 2 * beta + 4."""
    return coords.beta + 1, coords.alpha + 2 * coords.beta + 4


def reduced_from_coordinates(coords: ReducedCoordinates) -> ReducedMagicSquare:
    """Materialize the reduced square SEED_F1 + alpha * GEN1 + beta * GEN2.

    Raises IllegalCoordinatesError on the excluded diagonal beta = alpha + 1,
    whose grid always carries repeated entries.
    """
    if coords.beta == coords.alpha + 1:
        raise IllegalCoordinatesError(
            f"beta = alpha + 1 = {coords.beta} never yields distinct entries"
        )
    r, s = alpha_beta_to_rs(coords)
    return reduced_from_rs(r, s)
