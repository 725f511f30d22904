"""Counting magic squares: closed form and rational generating series.

The number of magic squares with magic sum 3s is the coefficient of t**s in

    8 * t**4 * (1 + 2t) / ((1 - t) * (1 - t**2) * (1 - t**3))

and equals the quasi-polynomial (6s**2 - 20s + 3 - 3*(-1)**s + 8*(s mod 3)) / 3.
The two devices are kept independent so they cross-check each other: the
series is expanded through an exact linear recurrence driven by the
denominator, and the closed form is evaluated in integer arithmetic with the
division by 3 asserted, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MagicSquareError


class DivisibilityError(MagicSquareError):
    """The tripled closed form was not divisible by 3 (must never fire)."""


@dataclass(frozen=True, slots=True)
class RationalSeries:
    """A rational power series num(t) / den(t) with den(0) = 1.

    The unit constant term makes the expansion recurrence integral, so all
    coefficients are exact integers.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")


@dataclass(frozen=True, slots=True)
class CountReport:
    """Per-s counts from every route; all present fields must agree."""

    s: int
    closed_form: int
    series: int
    families: int
    brute: int | None = None

    def __post_init__(self) -> None:
        counts = {self.closed_form, self.series, self.families}
        if self.brute is not None:
            counts.add(self.brute)
        if len(counts) != 1:
            raise ValueError(f"count report fields disagree: {self}")


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Exact product of two integer polynomials in coefficient form."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def expand(f: RationalSeries, n: int) -> list[int]:
    """First n power-series coefficients of f, by the division recurrence.

    c[m] = num[m] - sum(den[d] * c[m - d] for d >= 1), exact at every step.
    """
    num, den = f.numerator, f.denominator
    coeffs: list[int] = []
    for m in range(n):
        c = num[m] if m < len(num) else 0
        for d in range(1, min(m, len(den) - 1) + 1):
            c -= den[d] * coeffs[m - d]
        coeffs.append(c)
    return coeffs


# The denominator is always computed from its factored form (1-t)(1-t^2)(1-t^3)
# so the expanded coefficients cannot be mistranscribed.
_DENOMINATOR = poly_mul(poly_mul((1, -1), (1, 0, -1)), (1, 0, 0, -1))
_MAGIC_GF = RationalSeries(numerator=(0, 0, 0, 0, 8, 16), denominator=_DENOMINATOR)


def magic_gf() -> RationalSeries:
    """The generating series whose t**s coefficient counts magic sum 3s."""
    return _MAGIC_GF


def count_closed(s: int) -> int:
    """Closed-form count of magic squares with magic sum 3s.

    Evaluates (6s^2 - 20s + 3 - 3*(-1)^s + 8*(s mod 3)) / 3 in integer
    arithmetic; the parity term is a branch, never a floating-point power.
    """
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    parity = 1 if s % 2 == 0 else -1
    tripled = 6 * s * s - 20 * s + 3 - 3 * parity + 8 * (s % 3)
    if tripled % 3 != 0:
        raise DivisibilityError(f"3 does not divide {tripled} at s={s}")
    return tripled // 3
