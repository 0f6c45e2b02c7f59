"""Flag conditions: nested degree constraints (r; s_1, ..., s_l).

A curve in P^r satisfies the flag condition when for each i it lies on no
i-dimensional variety of degree below s_i.  Degrees are nonincreasing and
each s_i respects the minimal degree r - i + 1 of a nondegenerate
i-dimensional variety in P^r.

Interesting flags live in r >= 3; ambient dimension 2 is admitted because
peeling a maximal-length flag bottoms out at a single-degree condition on
plane curves, and the length cap l <= r - 1 allows nothing else there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class FlagCondition:
    r: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        if self.r < 2:
            raise ValidationError(f"ambient dimension r must be >= 2, got {self.r}")
        l = len(self.degrees)
        if not 1 <= l <= self.r - 1:
            raise ValidationError(
                f"flag length must be between 1 and r-1 = {self.r - 1}, got {l}"
            )
        for i, s_i in enumerate(self.degrees, start=1):
            floor = self.r - i + 1
            if s_i < floor:
                raise ValidationError(
                    f"s_{i} = {s_i} below the minimal degree {floor} of a "
                    f"nondegenerate {i}-dimensional variety in P^{self.r}"
                )
            if i >= 2 and self.degrees[i - 2] < s_i:
                raise ValidationError(
                    f"degrees must be nonincreasing: s_{i - 1} = "
                    f"{self.degrees[i - 2]} < s_{i} = {s_i}"
                )

    @property
    def length(self) -> int:
        return len(self.degrees)

    def peel(self) -> "FlagCondition":
        """Drop the outermost degree: (r-1; s_2, ..., s_l)."""
        if self.length < 2:
            raise ValidationError("cannot peel a single-degree flag")
        return FlagCondition(self.r - 1, self.degrees[1:])

    def __str__(self) -> str:
        return f"({self.r}; {', '.join(str(s) for s in self.degrees)})"
