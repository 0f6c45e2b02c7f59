"""The two Euclidean divisions every bound in this package is built on.

For a curve of degree d with general hyperplane section of degree s:

    d - 1 = m*s + eps,        0 <= eps <= s - 1
    s - 1 = w*(r-2) + v,      0 <= v <= r - 3

Both are returned as DivisionForm records so downstream formulas can name
the pieces (m, eps, w, v) instead of re-dividing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError


class DividendLabel(Enum):
    DEGREE_D = "degree_d"
    DEGREE_S = "degree_s"


@dataclass(frozen=True)
class DivisionForm:
    """dividend - 1 == quotient * modulus + remainder, 0 <= remainder < modulus."""

    label: DividendLabel
    quotient: int
    remainder: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValidationError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.remainder < self.modulus:
            raise ValidationError(
                f"remainder {self.remainder} not in [0, {self.modulus - 1}]"
            )
        if self.quotient < 0:
            raise ValidationError(f"quotient must be >= 0, got {self.quotient}")

    @property
    def dividend(self) -> int:
        return self.quotient * self.modulus + self.remainder + 1


def split_m_epsilon(d: int, s: int) -> DivisionForm:
    """d - 1 = m*s + eps.  Requires d >= 1, s >= 1."""
    if d < 1:
        raise ValidationError(f"degree d must be >= 1, got {d}")
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    m, eps = divmod(d - 1, s)
    return DivisionForm(DividendLabel.DEGREE_D, m, eps, s)


def split_w_v(s: int, r: int) -> DivisionForm:
    """s - 1 = w*(r-2) + v.  Requires s >= 1, r >= 3."""
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    if r < 3:
        raise ValidationError(f"ambient dimension r must be >= 3, got {r}")
    w, v = divmod(s - 1, r - 2)
    return DivisionForm(DividendLabel.DEGREE_S, w, v, r - 2)
