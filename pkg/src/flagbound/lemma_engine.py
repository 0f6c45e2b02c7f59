"""The quadratic genus bound and its remainder decomposition.

For a curve of degree d whose general hyperplane section has degree s and
sectional genus pi, the bound has the shape

    d**2/(2s) + (d/(2s))*(2*pi - 2 - s) + R

where R splits into four named pieces computed from the section data:

    R = epsilon_term - point_sum_term + delta_sum_term + tail_term

      epsilon_term   = (1+eps)*(s+1-eps-2*pi) / (2s)
      point_sum_term = sum_{i>=1} (i-1)*(s - h0(i))
      delta_sum_term = sum_{i>=1} (i-1)*delta_i
      tail_term      = sum of the supplied tail deficiencies

The central identity, checked exactly by oracle_suite and the test grid:
the truncated deficiency sum sum_{i=1..m} (d - h1(i)) plus the tail equals
the quadratic bound evaluated at this R.  It holds algebraically whenever
the point profile saturates by step m and the deltas vanish past m; both
are enforced by LemmaInput.

Term-by-term estimate intervals and the aggregate envelope |R| <= s^3/(r-2)
are produced by term_estimate_intervals; the all-deltas-zero specialization
of R by acm_remainder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import _backend
from .errors import InconsistencyError, ValidationError
from .euclid_forms import DivisionForm, split_m_epsilon, split_w_v
from .exact_arith import RationalInterval, format_rational
from .hilbert_profiles import (
    DeltaSequence,
    HilbertProfile,
    sectional_genus,
)


def lemma_degree_threshold(r: int, s: int) -> tuple[int, str]:
    """(threshold, relation) of the degree hypothesis: d relation threshold.

    Ambient dimension 3 or 4: d >= s**2 + s*(r-4)**2; dimension >= 5:
    d > s**2 - s.
    """
    if r < 3:
        raise ValidationError(f"ambient dimension r must be >= 3, got {r}")
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    if r <= 4:
        return s * s + s * (r - 4) ** 2, ">="
    return s * s - s, ">"


def lemma_degree_satisfied(r: int, d: int, s: int) -> bool:
    threshold, relation = lemma_degree_threshold(r, s)
    return d >= threshold if relation == ">=" else d > threshold


@dataclass(frozen=True)
class LemmaInput:
    """Everything the bound needs about one curve.

    r: ambient dimension; d: curve degree; s: section degree;
    point_profile: Hilbert profile of the hyperplane-section points
    (stable value s); deltas: correction sequence, vanishing for
    i >= s - r + 2; tail: deficiencies d - h(i) for i = m+1, ..., m+w.

    The sectional genus pi is always derived from (point_profile, deltas),
    never taken as input, so the bundle cannot be internally inconsistent.

    allow_small_degree skips only the degree hypothesis; the structural
    requirements that make the truncated identity exact (profile saturation
    by step m, delta support within m) are always enforced.
    """

    r: int
    d: int
    s: int
    point_profile: HilbertProfile
    deltas: DeltaSequence = field(default_factory=DeltaSequence)
    tail: tuple[int, ...] = ()
    allow_small_degree: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", tuple(int(t) for t in self.tail))
        if self.r < 3:
            raise ValidationError(f"ambient dimension r must be >= 3, got {self.r}")
        if self.s < self.r - 1:
            raise ValidationError(
                f"section degree s={self.s} below the nondegeneracy floor r-1={self.r - 1}"
            )
        if self.d < 1:
            raise ValidationError(f"degree d must be >= 1, got {self.d}")
        if self.point_profile.stable != self.s:
            raise ValidationError(
                f"point profile stabilizes at {self.point_profile.stable}, expected s={self.s}"
            )
        support = self.deltas.support_max
        if support > self.s - self.r + 1:
            raise ValidationError(
                f"delta_{support} > 0 but deltas must vanish for i >= {self.s - self.r + 2}"
            )
        if not self.allow_small_degree and not lemma_degree_satisfied(self.r, self.d, self.s):
            threshold, relation = lemma_degree_threshold(self.r, self.s)
            raise ValidationError(
                f"degree hypothesis fails: need d {relation} {threshold}, got d={self.d}"
            )
        # Truncation window: everything the truncated sum sees must settle
        # by step m, or the closed form provably diverges from the sum.
        m = self.m_eps.quotient
        if self.point_profile.saturation_index > m:
            raise ValidationError(
                f"profile saturates at step {self.point_profile.saturation_index} > m={m}"
            )
        if support > m:
            raise ValidationError(f"delta support reaches {support} > m={m}")
        self._validate_tail(m)
        # Forces the InconsistencyError now if deltas overshoot the profile.
        self.pi

    def _validate_tail(self, m: int) -> None:
        w = self.w_v.quotient
        if len(self.tail) > w:
            raise ValidationError(f"tail has {len(self.tail)} entries, window allows {w}")
        previous = None
        for idx, t in enumerate(self.tail):
            if t < 0:
                raise ValidationError(f"tail entries must be >= 0, got {t}")
            if previous is not None and t > previous:
                raise ValidationError(
                    f"tail must be nonincreasing, rises {previous} -> {t} at position {idx}"
                )
            previous = t
        if self.tail:
            head_cap = self.m_eps.remainder + self.pi  # d - h(m) = eps + pi
            if self.tail[0] > head_cap:
                raise ValidationError(
                    f"tail head {self.tail[0]} exceeds the step-m deficiency {head_cap}"
                )
            if sum(self.tail) > w * head_cap:
                raise ValidationError(
                    f"tail total {sum(self.tail)} exceeds the cap {w}*{head_cap}"
                )

    @cached_property
    def m_eps(self) -> DivisionForm:
        """d - 1 = m*s + eps."""
        return split_m_epsilon(self.d, self.s)

    @cached_property
    def w_v(self) -> DivisionForm:
        """s - 1 = w*(r-2) + v."""
        return split_w_v(self.s, self.r)

    @property
    def m(self) -> int:
        return self.m_eps.quotient

    @property
    def eps(self) -> int:
        return self.m_eps.remainder

    @property
    def w(self) -> int:
        return self.w_v.quotient

    @property
    def v(self) -> int:
        return self.w_v.remainder

    @cached_property
    def pi(self) -> int:
        """Sectional genus, from the deficiency identity."""
        return sectional_genus(self.point_profile, self.deltas)

    def to_dict(self) -> dict:
        out = {
            "r": self.r,
            "d": self.d,
            "s": self.s,
            "pointProfile": self.point_profile.to_dict(),
            "deltas": list(self.deltas.values),
            "tail": list(self.tail),
        }
        if self.allow_small_degree:
            out["allowSmallDegree"] = True
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "LemmaInput":
        if not isinstance(data, dict):
            raise ValidationError(f"lemma input must be an object, got {type(data).__name__}")
        try:
            r = int(data["r"])
            d = int(data["d"])
            s = int(data["s"])
            profile = HilbertProfile.from_dict(data["pointProfile"])
            deltas = DeltaSequence(tuple(int(v) for v in data.get("deltas", ())))
            tail = tuple(int(v) for v in data.get("tail", ()))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed lemma input: {exc}") from exc
        return cls(
            r=r,
            d=d,
            s=s,
            point_profile=profile,
            deltas=deltas,
            tail=tail,
            allow_small_degree=bool(data.get("allowSmallDegree", False)),
        )


@dataclass(frozen=True)
class RemainderDecomposition:
    """The four signed pieces of R and their total."""

    epsilon_term: Fraction
    point_sum_term: Fraction
    delta_sum_term: Fraction
    tail_term: Fraction
    total: Fraction

    def to_dict(self) -> dict:
        return {
            "epsilonTerm": format_rational(self.epsilon_term),
            "pointSumTerm": format_rational(self.point_sum_term),
            "deltaSumTerm": format_rational(self.delta_sum_term),
            "tailTerm": format_rational(self.tail_term),
            "total": format_rational(self.total),
        }


def remainder_decomposition(inp: LemmaInput) -> RemainderDecomposition:
    """Assemble R piece by piece from validated input data."""
    s, eps, pi = inp.s, inp.eps, inp.pi
    epsilon_term = Fraction((1 + eps) * (s + 1 - eps - 2 * pi), 2 * s)
    point_sum = Fraction(
        sum((i - 1) * (s - h) for i, h in enumerate(inp.point_profile.values) if i >= 1)
    )
    delta_sum = Fraction(inp.deltas.weighted_total)
    tail_term = Fraction(sum(inp.tail))
    return RemainderDecomposition(
        epsilon_term=epsilon_term,
        point_sum_term=point_sum,
        delta_sum_term=delta_sum,
        tail_term=tail_term,
        total=epsilon_term - point_sum + delta_sum + tail_term,
    )


def quadratic_genus_bound(d: int, s: int, pi: int, remainder: Fraction | int = 0) -> Fraction:
    """d**2/(2s) + (d/(2s))*(2*pi - 2 - s) + remainder, exactly."""
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    if d < 1:
        raise ValidationError(f"degree d must be >= 1, got {d}")
    if pi < 0:
        raise ValidationError(f"sectional genus must be >= 0, got {pi}")
    return Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * pi - 2 - s) + Fraction(remainder)


def genus_from_lemma_input(inp: LemmaInput) -> int:
    """sum_{i=1..m} (d - h1(i)) plus the tail, by direct accumulation.

    h1 is the surface-level section count accumulated from the point
    profile and deltas.  Equals quadratic_genus_bound(d, s, pi, R.total)
    exactly; oracle_suite re-proves that on randomized inputs.
    """
    acc, last = _backend.truncated_section_sum(
        inp.d, inp.m, list(inp.point_profile.values), list(inp.deltas.values)
    )
    if last > inp.d:
        # Unreachable for validated inputs: d - h1(m) = eps + pi >= 0.
        raise InconsistencyError(
            f"section count h1({inp.m}) = {last} exceeds the degree {inp.d}"
        )
    return acc + sum(inp.tail)


@dataclass(frozen=True)
class RemainderEnvelope:
    """Term-by-term bounds on R's pieces and their signed aggregate."""

    r: int
    s: int
    epsilon_term: RationalInterval
    point_sum: RationalInterval
    delta_sum: RationalInterval
    tail: RationalInterval
    aggregate: RationalInterval
    envelope_radius: Fraction

    @property
    def within_envelope(self) -> bool:
        return RationalInterval(-self.envelope_radius, self.envelope_radius).contains_interval(
            self.aggregate
        )

    @property
    def tightness_ratio(self) -> Fraction:
        """How much of the envelope the aggregate uses (1 = touching)."""
        reach = max(self.aggregate.hi, -self.aggregate.lo)
        return reach / self.envelope_radius

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "epsilonTerm": self.epsilon_term.to_dict(),
            "pointSum": self.point_sum.to_dict(),
            "deltaSum": self.delta_sum.to_dict(),
            "tail": self.tail.to_dict(),
            "aggregate": self.aggregate.to_dict(),
            "envelope": format_rational(self.envelope_radius),
            "withinEnvelope": self.within_envelope,
            "tightnessRatio": format_rational(self.tightness_ratio),
        }


def term_estimate_intervals(r: int, s: int) -> RemainderEnvelope:
    """Closed intervals bounding each R piece, for r >= 4, s >= r-1.

    epsilon_term in [-s^2/(2(r-2)), (s+1)/2]; point_sum in
    [0, s^3/(3(r-2)^2)]; delta_sum in [0, s^2(s-1)/(2(r-2))]; tail in
    [0, s^3/(2(r-2)^2)].  The aggregate follows R's sign pattern
    (point_sum enters negatively) and stays within +-s^3/(r-2).
    """
    if r < 4:
        raise ValidationError(f"term estimates require r >= 4, got {r}")
    if s < r - 1:
        raise ValidationError(f"need s >= r-1 = {r - 1}, got {s}")
    rm2 = r - 2
    epsilon_term = RationalInterval(Fraction(-s * s, 2 * rm2), Fraction(s + 1, 2))
    point_sum = RationalInterval(0, Fraction(s**3, 3 * rm2 * rm2))
    delta_sum = RationalInterval(0, Fraction(s * s * (s - 1), 2 * rm2))
    tail = RationalInterval(0, Fraction(s**3, 2 * rm2 * rm2))
    aggregate = RationalInterval(
        epsilon_term.lo - point_sum.hi,
        epsilon_term.hi + delta_sum.hi + tail.hi,
    )
    return RemainderEnvelope(
        r=r,
        s=s,
        epsilon_term=epsilon_term,
        point_sum=point_sum,
        delta_sum=delta_sum,
        tail=tail,
        aggregate=aggregate,
        envelope_radius=Fraction(s**3, rm2),
    )


def acm_remainder(
    eps: int, s: int, pi: int, surface_genus: int, tail: tuple[int, ...] = ()
) -> Fraction:
    """R for a section with all deltas zero.

    surface_genus is the subtracted middle term; when the deltas of a full
    LemmaInput vanish it coincides with the weighted point sum, and this
    reproduces remainder_decomposition(...).total exactly.
    """
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    if not 0 <= eps <= s - 1:
        raise ValidationError(f"eps must satisfy 0 <= eps <= s-1, got eps={eps}, s={s}")
    if pi < 0:
        raise ValidationError(f"sectional genus must be >= 0, got {pi}")
    if surface_genus < 0:
        raise ValidationError(f"surface genus must be >= 0, got {surface_genus}")
    return (
        Fraction((1 + eps) * (s + 1 - eps - 2 * pi), 2 * s)
        - surface_genus
        + sum(int(t) for t in tail)
    )


def tail_cap(r: int, s: int, d: int, pi: int) -> int:
    """w * (eps + pi): the cap on the total tail deficiency past step m.

    eps + pi is the deficiency d - h(m) at the truncation step, and at most
    w further steps can carry deficiency.
    """
    if pi < 0:
        raise ValidationError(f"sectional genus must be >= 0, got {pi}")
    w = split_w_v(s, r).quotient
    eps = split_m_epsilon(d, s).remainder
    return w * (eps + pi)
