"""Unique two-family decomposition of magic squares.

Up to the dihedral symmetry recorded in the result, every magic square of
order three is exactly one of

    F1:  SEED_F1 + i * ONES + j * GEN3 + k * GEN1      (s = 4 + i + 3j + k)
    F2:  SEED_F2 + i * ONES + j * GEN3 + k * GEN2      (s = 5 + i + 3j + 2k)

with nonnegative integers i, j, k.  Carrying the symmetry makes the
decomposition a bijection on all magic squares, not only canonical ones:
`decompose` and `construct` invert each other exactly.

The bridge from reduced coordinates (alpha, beta) uses GEN3 = GEN1 + GEN2
and SEED_F1 + GEN2 = SEED_F2 + GEN1.  When alpha >= beta the square is
F1 with j = beta, k = alpha - beta; otherwise it is F2 with j = alpha + 1,
k = beta - alpha - 2.  The leftover case k = -1 is the excluded diagonal
beta = alpha + 1, which never validates as magic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .canonical import alpha_beta_to_rs, reduce, rs_to_alpha_beta
from .core import (
    GEN1,
    GEN2,
    GEN3,
    SEED_F1,
    SEED_F2,
    DihedralElement,
    MagicSquare,
    MagicSquareError,
    Square,
    apply,
    validate,
)


class InternalContradictionError(MagicSquareError):
    """The impossible k = -1 branch was reached; input bypassed validation."""


class Family(Enum):
    """The two affine families of magic squares."""

    F1 = "F1"
    F2 = "F2"

    @property
    def seed(self) -> Square:
        return SEED_F1 if self is Family.F1 else SEED_F2

    @property
    def generator(self) -> Square:
        return GEN1 if self is Family.F1 else GEN2

    @property
    def base_s(self) -> int:
        """Magic parameter of the family seed."""
        return 4 if self is Family.F1 else 5

    @property
    def k_step(self) -> int:
        """Contribution of k to the magic parameter."""
        return 1 if self is Family.F1 else 2


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Coordinates (family, i, j, k) plus the symmetry from reduction."""

    family: Family
    i: int
    j: int
    k: int
    symmetry: DihedralElement

    def __post_init__(self) -> None:
        for name in ("i", "j", "k"):
            value = getattr(self, name)
            if value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    @property
    def s(self) -> int:
        return self.family.base_s + self.i + 3 * self.j + self.family.k_step * self.k

    def to_json_obj(self) -> dict[str, object]:
        """The wire form used by the CLI, in fixed key order."""
        return {
            "family": self.family.value,
            "i": self.i,
            "j": self.j,
            "k": self.k,
            "symmetry": self.symmetry.tag,
        }


def base_grid(family: Family, i: int, j: int, k: int) -> tuple[int, ...]:
    """Row-major entries of seed + i * ONES + j * GEN3 + k * generator."""
    seed = family.seed.entries
    gen = family.generator.entries
    shared = GEN3.entries
    return tuple(se + i + j * sh + k * ge for se, sh, ge in zip(seed, shared, gen))


def construct(d: Decomposition) -> MagicSquare:
    """Build and certify the magic square of a decomposition.

    The inverse symmetry returns the canonical-orientation base grid to the
    orientation recorded by `decompose`, so construct(decompose(m)) == m.
    """
    base = Square(base_grid(d.family, d.i, d.j, d.k))
    return validate(apply(d.symmetry.inverse, base))


def decompose(m: MagicSquare) -> Decomposition:
    """Decompose a magic square; construct(decompose(m)) == m exactly."""
    reduced, i, g = reduce(m)
    coords = rs_to_alpha_beta(reduced.r, reduced.s)
    alpha, beta = coords.alpha, coords.beta
    if alpha >= beta:
        family, j, k = Family.F1, beta, alpha - beta
    else:
        family, j, k = Family.F2, alpha + 1, beta - alpha - 2
    if k < 0 or j < 0:
        raise InternalContradictionError(
            f"coordinates (alpha={alpha}, beta={beta}) from rs={alpha_beta_to_rs(coords)} "
            "reached the excluded diagonal; input cannot be a valid magic square"
        )
    return Decomposition(family=family, i=i, j=j, k=k, symmetry=g)
