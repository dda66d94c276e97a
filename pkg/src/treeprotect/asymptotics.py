"""Limit laws, 1/n corrections, and certified constants.

The protection number of the root (X) and of a uniform vertex (Y) both
converge in distribution as the tree size n grows.  With x = 4^k the
survival functions satisfy

    P(X_n >= k) = 9x/(x+2)^2 + corr_X(k)/n + smaller,
    P(Y_n >= k) = 3/(x+2)   + corr_Y(k)/n + smaller,

and the moments converge to constants

    E(X_n) -> c0,  V(X_n) -> c2,  E(Y_n) -> d0,  V(Y_n) -> d2,

with 1/n coefficients c1, c3, d1, d3.  All eight constants are sums over
k of the survival terms above (the second moments use (2k-1) weights),
evaluated here as exact rational partial sums plus proven geometric tail
bounds, so every printed digit is certified by a rational enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

__all__ = [
    "AsymptoticValue",
    "ConstantEnclosure",
    "CONSTANT_NAMES",
    "asym_P_X_ge",
    "asym_P_Y_ge",
    "limit_pmf_X",
    "limit_pmf_Y",
    "constant",
    "asym_moments_X",
    "asym_moments_Y",
]

X_ERROR_ORDER = "O(k^2 / (3^k n^(3/2)))"
Y_ERROR_ORDER = "O(k^2 / (3^k n^2))"

CONSTANT_NAMES = ("c0", "c1", "c2", "c3", "d0", "d1", "d2", "d3")


@dataclass(frozen=True)
class AsymptoticValue:
    """Leading term plus 1/n correction of a probability quantity."""

    leading: Fraction
    correction: Fraction
    error_order: str

    def __post_init__(self) -> None:
        if not 0 <= self.leading <= 1:
            raise ValueError("leading term of a probability must lie in [0, 1]")

    def at(self, n: int) -> Fraction:
        """The two-term approximation leading + correction/n."""
        if n < 1:
            raise ValueError("tree size must be positive")
        return self.leading + self.correction / n


def _survival_lead_X(k: int) -> Fraction:
    x = 4**k
    return Fraction(9 * x, (x + 2) ** 2)


def _survival_corr_X(k: int) -> Fraction:
    x = 4**k
    num = 9 * x * ((3 * k - 8) * x * x + 28 * x - (12 * k + 20))
    return Fraction(num, 2 * (x + 2) ** 4)


def _survival_lead_Y(k: int) -> Fraction:
    return Fraction(3, 4**k + 2)


def _survival_corr_Y(k: int) -> Fraction:
    x = 4**k
    num = (3 * k - 10) * x * x + (6 * k + 26) * x - 16
    return Fraction(num, 2 * (x + 2) ** 3)


def asym_P_X_ge(k: int) -> AsymptoticValue:
    """Asymptotic survival of the root protection number, k >= 1."""
    if k < 1:
        raise ValueError("survival asymptotics require k >= 1; level 0 is exactly 1")
    return AsymptoticValue(_survival_lead_X(k), _survival_corr_X(k), X_ERROR_ORDER)


def asym_P_Y_ge(k: int) -> AsymptoticValue:
    """Asymptotic survival of a uniform vertex's protection number, k >= 1."""
    if k < 1:
        raise ValueError("survival asymptotics require k >= 1; level 0 is exactly 1")
    return AsymptoticValue(_survival_lead_Y(k), _survival_corr_Y(k), Y_ERROR_ORDER)


def limit_pmf_X(k: int) -> AsymptoticValue:
    """Limit law of the root protection number with its 1/n correction.

    Both terms agree, in exact arithmetic, with consecutive differences of
    asym_P_X_ge (level 0 survival being exactly 1).
    """
    if k < 0:
        raise ValueError("protection level must be nonnegative")
    x = 4**k
    lead = Fraction(27 * x * (x * x - 1), (x + 2) ** 2 * (2 * x + 1) ** 2)
    num = (
        4 * (k - 3) * x**6
        + 36 * x**5
        - (45 * k - 72) * x**4
        - 80 * k * x**3
        - (45 * k + 72) * x**2
        - 36 * x
        + 4 * (k + 3)
    )
    corr = Fraction(81 * x * num, 2 * (x + 2) ** 4 * (2 * x + 1) ** 4)
    return AsymptoticValue(lead, corr, X_ERROR_ORDER)


def limit_pmf_Y(k: int) -> AsymptoticValue:
    """Limit law of a uniform vertex's protection number with 1/n correction.

    The correction is computed as the difference of the survival
    corrections of asym_P_Y_ge.  A closed displayed form exists but is
    twice this value for every k >= 1 and disagrees with finite-n data,
    so the difference form is authoritative here.
    """
    if k < 0:
        raise ValueError("protection level must be nonnegative")
    x = 4**k
    lead = Fraction(9 * x, (4 * x + 2) * (x + 2))
    # P(Y_n >= 0) = 1 and P(Y_n >= 1) = 1/2 hold exactly for n >= 2, so the
    # k = 0 correction is -corr_Y(1), which vanishes.
    upper = Fraction(0) if k == 0 else _survival_corr_Y(k)
    corr = upper - _survival_corr_Y(k + 1)
    return AsymptoticValue(lead, corr, Y_ERROR_ORDER)


@dataclass(frozen=True)
class ConstantEnclosure:
    """A constant pinned between exact rational bounds.

    `decimal` is the value truncated toward zero to `digits` fractional
    digits; both bounds share that truncation, so every printed digit is
    certified.
    """

    name: str
    lower: Fraction
    upper: Fraction
    digits: int
    decimal: str

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper


# Summand majorants, each proven for every k >= 1: |term(k)| <= A*(k+1)^p/4^k.
# Writing x = 4^k (so x >= 4, 28x <= 7x^2, constants <= x^2/16):
#   lead_X = 9x/(x+2)^2 <= 9/x
#   |corr_X| <= 9x*((3k+8) + 7 + (12k+20)/16)*x^2 / (2x^4) = (135k+585)/(8x)
#     and 135k+585 <= 360(k+1) for k >= 1, so A = 45, p = 1;
#   (2k-1)*lead_X <= 9(2k-1)/x <= 18(k+1)/x;
#   (2k-1)*|corr_X| <= (2k-1)(135k+585)/(8x) <= 40(k+1)^2/x, because
#     (2k-1)(135k+585) <= 320(k+1)^2 reduces to 50k^2 - 395k + 905 >= 0,
#     whose discriminant 395^2 - 4*50*905 = -24975 is negative;
#   lead_Y = 3/(x+2) <= 3/x
#   |corr_Y| <= ((3k+10) + (6k+26)/4 + 1)*x^2 / (2x^3) = (9k+35)/(4x)
#     and 9k+35 <= 24(k+1) for k >= 1, so A = 6, p = 1;
#   (2k-1)*lead_Y <= 3(2k-1)/x <= 6(k+1)/x;
#   (2k-1)*|corr_Y| <= (2k-1)(9k+35)/(4x) <= 24(k+1)^2/(4x) = 6(k+1)^2/x,
#     because (2k-1)(9k+35) <= 24(k+1)^2 reduces to 6k^2 - 13k + 59 >= 0
#     (discriminant 169 - 1416 < 0).
_TermFn = Callable[[int], Fraction]

_PRIMITIVE_SUMS: dict[str, tuple[_TermFn, int, int]] = {
    "c0": (_survival_lead_X, 9, 1),
    "c1": (_survival_corr_X, 45, 1),
    "x_weighted_lead": (lambda k: (2 * k - 1) * _survival_lead_X(k), 18, 1),
    "x_weighted_corr": (lambda k: (2 * k - 1) * _survival_corr_X(k), 40, 2),
    "d0": (_survival_lead_Y, 3, 1),
    "d1": (_survival_corr_Y, 6, 1),
    "y_weighted_lead": (lambda k: (2 * k - 1) * _survival_lead_Y(k), 6, 1),
    "y_weighted_corr": (lambda k: (2 * k - 1) * _survival_corr_Y(k), 6, 2),
}

_Interval = tuple[Fraction, Fraction]


def summand_bound(sum_name: str, k: int) -> Fraction:
    """The documented majorant A*(k+1)^p/4^k for one primitive sum."""
    _, a, p = _PRIMITIVE_SUMS[sum_name]
    return Fraction(a * (k + 1) ** p, 4**k)


def summand(sum_name: str, k: int) -> Fraction:
    """The k-th term of one primitive sum (for bound checking)."""
    term, _, _ = _PRIMITIVE_SUMS[sum_name]
    return term(k)


def _tail_bound(a: int, p: int, cutoff: int) -> Fraction:
    # consecutive majorant terms shrink by at least (3/2)^p/4 once k >= 1,
    # so the tail is a geometric series dominated by its first term
    q = Fraction(3, 8) if p == 1 else Fraction(9, 16)
    first = Fraction(a * (cutoff + 2) ** p, 4 ** (cutoff + 1))
    return first / (1 - q)


def _sum_interval(name: str, cutoff: int) -> _Interval:
    term, a, p = _PRIMITIVE_SUMS[name]
    partial = sum((term(k) for k in range(1, cutoff + 1)), start=Fraction(0))
    tail = _tail_bound(a, p, cutoff)
    return (partial - tail, partial + tail)


def _ivl_sub(a: _Interval, b: _Interval) -> _Interval:
    return (a[0] - b[1], a[1] - b[0])


def _ivl_mul(a: _Interval, b: _Interval) -> _Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def _ivl_scale(c: int, a: _Interval) -> _Interval:
    lo, hi = c * a[0], c * a[1]
    return (lo, hi) if lo <= hi else (hi, lo)


def _constant_interval(name: str, cutoff: int) -> _Interval:
    if name in ("c0", "c1", "d0", "d1"):
        return _sum_interval(name, cutoff)
    if name == "c2":
        mean = _sum_interval("c0", cutoff)
        return _ivl_sub(_sum_interval("x_weighted_lead", cutoff), _ivl_mul(mean, mean))
    if name == "c3":
        cross = _ivl_mul(_sum_interval("c0", cutoff), _sum_interval("c1", cutoff))
        return _ivl_sub(_sum_interval("x_weighted_corr", cutoff), _ivl_scale(2, cross))
    if name == "d2":
        mean = _sum_interval("d0", cutoff)
        return _ivl_sub(_sum_interval("y_weighted_lead", cutoff), _ivl_mul(mean, mean))
    if name == "d3":
        cross = _ivl_mul(_sum_interval("d0", cutoff), _sum_interval("d1", cutoff))
        return _ivl_sub(_sum_interval("y_weighted_corr", cutoff), _ivl_scale(2, cross))
    raise ValueError(f"unknown constant {name!r}")


def _truncated_decimal(lower: Fraction, upper: Fraction, digits: int) -> str | None:
    """Truncate toward zero, or None if the bounds disagree on any digit."""
    scale = 10**digits
    if lower >= 0:
        sign, lo, hi = "", lower, upper
    elif upper <= 0:
        sign, lo, hi = "-", -upper, -lower
    else:
        return None
    lo_scaled = math.floor(lo * scale)
    if lo_scaled != math.floor(hi * scale):
        return None
    whole, frac = divmod(lo_scaled, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


@lru_cache(maxsize=32)
def constant(name: str, digits: int) -> ConstantEnclosure:
    """Certified enclosure of one of c0..c3, d0..d3 to `digits` digits."""
    if name not in CONSTANT_NAMES:
        raise ValueError(f"unknown constant {name!r}; expected one of {CONSTANT_NAMES}")
    if not 1 <= digits <= 200:
        raise ValueError("digits must be between 1 and 200")
    # tail < 10^(-digits-2) at this cutoff; widen if truncation straddles
    cutoff = math.ceil((digits + 4) / math.log10(4)) + 16
    for attempt in range(5):
        lower, upper = _constant_interval(name, cutoff + 48 * attempt)
        if upper - lower < Fraction(1, 10**digits):
            decimal = _truncated_decimal(lower, upper, digits)
            if decimal is not None:
                return ConstantEnclosure(name, lower, upper, digits, decimal)
    raise ArithmeticError(f"enclosure for {name} would not settle at {digits} digits")


def asym_moments_X(n: int, digits: int = 30) -> tuple[Fraction, Fraction]:
    """Two-term approximations (c0 + c1/n, c2 + c3/n) of mean and variance."""
    if n < 1:
        raise ValueError("tree size must be positive")
    mean = constant("c0", digits).midpoint + constant("c1", digits).midpoint / n
    var = constant("c2", digits).midpoint + constant("c3", digits).midpoint / n
    return mean, var


def asym_moments_Y(n: int, digits: int = 30) -> tuple[Fraction, Fraction]:
    """Two-term approximations (d0 + d1/n, d2 + d3/n) of mean and variance."""
    if n < 1:
        raise ValueError("tree size must be positive")
    mean = constant("d0", digits).midpoint + constant("d1", digits).midpoint / n
    var = constant("d2", digits).midpoint + constant("d3", digits).midpoint / n
    return mean, var
