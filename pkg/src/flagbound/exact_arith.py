"""Exact rational and radical arithmetic.

Everything downstream (genus bounds, remainder envelopes, hypothesis
thresholds) is computed over Fraction, never floats.  This module adds the
three pieces the standard library lacks:

* a binomial with the n < k convention used by genus formulas,
* floor integer n-th roots (exactness flagged), and
* RadicalProduct, a positive number of the shape
  scalar * b1^(1/e1) * ... * bk^(1/ek), with an exact three-way comparison
  against integers.

Comparisons are decided by raising both sides to the lcm of the root orders,
which is exact but can explode; above a digit budget a directed-rounding
enclosure built from floor roots takes over and may return UNDECIDED.
"""

from __future__ import annotations

import decimal
import math
import os
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ValidationError

#: Exact comparison is attempted as long as the powered integers stay under
#: this many decimal digits.  Override per call or via FLAGBOUND_DIGIT_BUDGET.
DEFAULT_DIGIT_BUDGET = 10**6

#: Working precision (decimal digits) of the enclosure fallback.
FALLBACK_ENCLOSURE_DIGITS = 200

_LOG10_2 = math.log10(2)

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def digit_budget() -> int:
    """Active digit budget: FLAGBOUND_DIGIT_BUDGET env var or the default."""
    raw = os.environ.get("FLAGBOUND_DIGIT_BUDGET", "")
    if not raw:
        return DEFAULT_DIGIT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValidationError(f"FLAGBOUND_DIGIT_BUDGET is not an integer: {raw!r}") from exc
    if value < 1:
        raise ValidationError(f"FLAGBOUND_DIGIT_BUDGET must be positive, got {value}")
    return value


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 whenever n < k (including negative n).

    binomial(4, 2) == 6, binomial(1, 2) == 0, binomial(-1, 0) == 0.
    """
    if k < 0:
        raise ValidationError(f"binomial requires k >= 0, got k={k}")
    if n < k:
        return 0
    return math.comb(n, k)


def format_rational(value: Fraction | int) -> str:
    """Render as 'p/q', or just 'p' for integers.  Inverse of parse_rational."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p'.  Decimal points and exponents are rejected."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValidationError(f"not a rational in p/q form: {text!r}")
    num = int(match.group(1))
    den = match.group(2)
    return Fraction(num, int(den)) if den else Fraction(num)


def fraction_approx(value: Fraction, digits: int = 20) -> str:
    """Decimal rendering of a Fraction to `digits` significant digits.

    The result is an approximation; callers must label it as such.
    """
    if digits < 1:
        raise ValidationError(f"digits must be >= 1, got {digits}")
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator))


def integer_nth_root(x: int, n: int) -> tuple[int, bool]:
    """(floor(x**(1/n)), exact?) for x >= 0, n >= 1.  Pure integer Newton."""
    if n < 1:
        raise ValidationError(f"root order must be >= 1, got {n}")
    if x < 0:
        raise ValidationError(f"negative radicand: {x}")
    if n == 1 or x in (0, 1):
        return x, True
    if n == 2:
        r = math.isqrt(x)
        return r, r * r == x
    # Start above the true root, descend; Newton on integers converges to floor.
    r = 1 << -(-x.bit_length() // n)
    while True:
        t = ((n - 1) * r + x // r ** (n - 1)) // n
        if t >= r:
            break
        r = t
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r, r**n == x


class Comparison(Enum):
    """Outcome of an exact three-way comparison."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNDECIDED = "undecided"

    @property
    def decided(self) -> bool:
        return self is not Comparison.UNDECIDED


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValidationError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, value: Fraction | int) -> "RationalInterval":
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Fraction | int) -> bool:
        return self.lo <= value <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def expand(self, radius: Fraction | int) -> "RationalInterval":
        radius = Fraction(radius)
        if radius < 0:
            raise ValidationError(f"expansion radius must be >= 0, got {radius}")
        return RationalInterval(self.lo - radius, self.hi + radius)

    def affine_image(self, scale: Fraction | int, offset: Fraction | int) -> "RationalInterval":
        # Image under x -> scale*x + offset; monotone, so scale must be >= 0.
        scale = Fraction(scale)
        if scale < 0:
            raise ValidationError(f"affine scale must be >= 0, got {scale}")
        offset = Fraction(offset)
        return RationalInterval(scale * self.lo + offset, scale * self.hi + offset)

    def to_dict(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


@dataclass(frozen=True)
class RadicalProduct:
    """scalar * prod_j base_j^(1/root_j) with scalar > 0, base_j >= 1.

    factors is a tuple of (base, root) pairs.  root == 1 factors are plain
    integer multipliers; they are kept as written so thresholds render the
    way they were derived.
    """

    scalar: Fraction
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(self, "factors", tuple((int(b), int(e)) for b, e in self.factors))
        if self.scalar <= 0:
            raise ValidationError(f"radical scalar must be positive, got {self.scalar}")
        for base, root in self.factors:
            if base < 1:
                raise ValidationError(f"radical base must be >= 1, got {base}")
            if root < 1:
                raise ValidationError(f"root order must be >= 1, got {root}")

    @property
    def root_lcm(self) -> int:
        return math.lcm(1, *(root for _, root in self.factors))

    @property
    def is_rational(self) -> bool:
        """True when every factor has an integer value (cheap root check)."""
        return all(integer_nth_root(base, root)[1] for base, root in self.factors)

    def as_fraction(self) -> Fraction:
        """Exact value, only when is_rational."""
        value = self.scalar
        for base, root in self.factors:
            r, exact = integer_nth_root(base, root)
            if not exact:
                raise ValidationError(f"{base}^(1/{root}) is irrational")
            value *= r
        return value

    def enclosure(self, digits: int = FALLBACK_ENCLOSURE_DIGITS) -> RationalInterval:
        """Directed-rounding enclosure, relative width about 10**-digits."""
        if digits < 1:
            raise ValidationError(f"digits must be >= 1, got {digits}")
        scale = 10**digits
        lo_prod = hi_prod = 1
        for base, root in self.factors:
            # floor(scale * base^(1/root)) via an exact integer root
            r, exact = integer_nth_root(base * scale**root, root)
            lo_prod *= r
            hi_prod *= r if exact else r + 1
        denom = scale ** len(self.factors)
        return RationalInterval(
            self.scalar * Fraction(lo_prod, denom),
            self.scalar * Fraction(hi_prod, denom),
        )

    def approx(self, digits: int = 20) -> str:
        """Approximate decimal rendering to `digits` significant digits."""
        box = self.enclosure(digits + 10)
        return fraction_approx(box.midpoint, digits)

    def __str__(self) -> str:
        parts = [format_rational(self.scalar)]
        for base, root in self.factors:
            parts.append(str(base) if root == 1 else f"{base}^(1/{root})")
        return " * ".join(parts)


def _exact_digit_estimate(lhs: int, rhs: RadicalProduct) -> int:
    """Upper estimate of the decimal digits of the powered integers."""
    L = rhs.root_lcm
    p, q = rhs.scalar.numerator, rhs.scalar.denominator
    left_bits = L * (lhs.bit_length() + q.bit_length())
    right_bits = L * p.bit_length() + sum(
        (L // root) * base.bit_length() for base, root in rhs.factors
    )
    return int(max(left_bits, right_bits) * _LOG10_2) + 1


def compare_radical_exact(lhs: int, rhs: RadicalProduct) -> Comparison:
    """Decide lhs vs rhs by raising both sides to the lcm of the root orders.

    Always conclusive; may build enormous integers.  Both sides are positive,
    so x -> x^L preserves the order.
    """
    L = rhs.root_lcm
    p, q = rhs.scalar.numerator, rhs.scalar.denominator
    left = (lhs * q) ** L
    right = p**L
    for base, root in rhs.factors:
        right *= base ** (L // root)
    if left < right:
        return Comparison.LESS
    if left > right:
        return Comparison.GREATER
    return Comparison.EQUAL


def compare_radical_enclosure(
    lhs: int, rhs: RadicalProduct, digits: int = FALLBACK_ENCLOSURE_DIGITS
) -> Comparison:
    """Decide lhs vs rhs from a directed enclosure of rhs.

    Returns UNDECIDED when lhs falls inside a non-degenerate enclosure,
    which can only happen when lhs is within about 10**-digits of rhs.
    """
    box = rhs.enclosure(digits)
    if lhs < box.lo:
        return Comparison.LESS
    if lhs > box.hi:
        return Comparison.GREATER
    if box.is_point and lhs == box.lo:
        return Comparison.EQUAL
    return Comparison.UNDECIDED


def compare_radical(
    lhs: int,
    rhs: RadicalProduct,
    budget: int | None = None,
    fallback_digits: int = FALLBACK_ENCLOSURE_DIGITS,
) -> Comparison:
    """Exact three-way comparison of a positive integer with a radical product.

    The exact powering route runs whenever the powered integers fit the digit
    budget; only past the budget does the enclosure fallback run, and only
    the fallback can return UNDECIDED.
    """
    if not isinstance(lhs, int) or lhs < 1:
        raise ValidationError(f"lhs must be a positive integer, got {lhs!r}")
    if budget is None:
        budget = digit_budget()
    if _exact_digit_estimate(lhs, rhs) <= budget:
        return compare_radical_exact(lhs, rhs)
    return compare_radical_enclosure(lhs, rhs, fallback_digits)
