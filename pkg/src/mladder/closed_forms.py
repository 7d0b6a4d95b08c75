"""Claimed closed forms for the generalized Moebius ladder family.

These are the published general formulas this package exists to check:
the M-polynomials of M_{m,n} and of its line graph, and six index
expressions for each.  Everything is implemented exactly as stated, with
no corrections, so the verify harness can compare each claim against
brute-force graph enumeration and report where they agree and where they
do not.  The subject labels used in reports are ``thm31``/``thm32`` for
the two M-polynomial forms and ``prop41``/``prop42`` for the index sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .mpoly import MPoly

Real = Union[Fraction, float]


class OutOfStatedRange(ValueError):
    """Parameters below the domain for which a closed form is stated."""


@dataclass(frozen=True)
class ClosedFormIndexSet:
    """The six index expressions of one claim set, evaluated at (m, n, alpha).

    Values are exactly the stated expressions: rational whenever alpha is an
    integer, double-precision floats otherwise.  No correction is applied
    even where a claim disagrees with graph enumeration.
    """

    m1: Fraction
    m2: Fraction
    mm2: Fraction
    r_alpha: Real
    rr_alpha: Real
    sdd: Fraction
    alpha: Real


def _check_range(m: int, n: int, min_n: int, label: str) -> None:
    if not (isinstance(m, int) and isinstance(n, int)):
        raise OutOfStatedRange(f"{label}: m and n must be integers, got ({m!r}, {n!r})")
    if m < 4 or n < min_n:
        raise OutOfStatedRange(f"{label} is stated for m >= 4, n >= {min_n}; got (m={m}, n={n})")


def _power(base: Fraction, alpha: Real) -> Real:
    # Exact for integer alpha, float otherwise.
    if isinstance(alpha, int) or (isinstance(alpha, float) and alpha.is_integer()):
        return base ** int(alpha)
    return float(base) ** alpha


def thm31_mpoly(m: int, n: int) -> MPoly:
    """Claimed M-polynomial of M_{m,n} (report subject ``thm31``).

    Stated for m >= 4, n >= 2:
    ``2(m-1) x^3 y^3 + 2(m-1) x^3 y^4 + (m-1)(2n-5) x^4 y^4``.
    At n = 2 the last coefficient is negative; the formula is returned
    as stated so the verifier can exhibit the discrepancy.
    """
    _check_range(m, n, 2, "thm31")
    return MPoly(
        {
            (3, 3): 2 * (m - 1),
            (3, 4): 2 * (m - 1),
            (4, 4): (m - 1) * (2 * n - 5),
        }
    )


def thm32_mpoly(m: int, n: int) -> MPoly:
    """Claimed M-polynomial of the line graph of M_{m,n} (subject ``thm32``).

    Stated for m, n >= 4:
    ``2(m-1) x^4 y^4 + 4(m-1) x^4 y^5 + 6(m-1) x^5 y^6 + 6(m-1)(n-3) x^6 y^6``.
    """
    _check_range(m, n, 4, "thm32")
    return MPoly(
        {
            (4, 4): 2 * (m - 1),
            (4, 5): 4 * (m - 1),
            (5, 6): 6 * (m - 1),
            (6, 6): 6 * (m - 1) * (n - 3),
        }
    )


def prop41_indices(m: int, n: int, alpha: Real = 1) -> ClosedFormIndexSet:
    """Claimed index expressions for M_{m,n} (report subject ``prop41``)."""
    _check_range(m, n, 2, "prop41")
    k = Fraction((m - 1) ** 2)
    m2 = 16 * (4 * n - 3) * (n - 1) * k
    mm2 = Fraction(1, 144) * (6 * n - 1) * (6 * n + 1) * k
    return ClosedFormIndexSet(
        m1=Fraction(16 * m * n - 20 * m - 16 * n + 14),
        m2=m2,
        mm2=mm2,
        r_alpha=_power(m2, alpha),
        rr_alpha=_power(mm2, alpha),
        sdd=Fraction(1, 72) * (48 * n * n - 42 * n + 1) * k,
        alpha=alpha,
    )


def prop42_indices(m: int, n: int, alpha: Real = 1) -> ClosedFormIndexSet:
    """Claimed index expressions for the line graph of M_{m,n} (subject ``prop42``)."""
    _check_range(m, n, 4, "prop42")
    k = Fraction((m - 1) ** 2)
    m2 = 72 * (9 * n - 11) * (2 * n - 3) * k
    mm2 = Fraction(1, 100) * (10 * n - 3) * (10 * n - 7) * k
    return ClosedFormIndexSet(
        m1=Fraction(2 * (36 * n - 49) * (m - 1)),
        m2=m2,
        mm2=mm2,
        r_alpha=_power(m2, alpha),
        rr_alpha=_power(mm2, alpha),
        sdd=Fraction(1, 72) * (48 * n * n - 42 * n + 1) * k,
        alpha=alpha,
    )
