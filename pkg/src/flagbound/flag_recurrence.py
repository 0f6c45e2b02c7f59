"""Interval evaluation of the maximal genus under a flag condition.

G(r; s_1) is the Castelnuovo bound, a point.  For longer flags the
recursion

    G(r; s_1, ..., s_l) = s_1^2/(2 s_2)
                        + (s_1/(2 s_2)) * (2 G(r-1; s_2, ..., s_l) - 2 - s_2)
                        + R,    |R| <= s_2^3/(r-2)

is evaluated over exact rational intervals: the affine map has positive
slope s_1/s_2, so the inner interval maps monotonically, then widens by
the unknown-R radius.  Nothing tighter than the full +-s_2^3/(r-2) slab is
claimed at any level.

The closed corollary bound, its alternative form one degree up, the
dichotomy comparison between the two, and the speciality bound live here
as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .castelnuovo import castelnuovo_bound
from .errors import HypothesisFailureError, UndecidedComparisonError, ValidationError
from .exact_arith import RationalInterval, format_rational
from .flags import FlagCondition
from .hypothesis_checker import HypothesisReport, Verdict, check_corollary_degree, check_flag_separation
from .lemma_engine import quadratic_genus_bound

GenusInterval = RationalInterval


@dataclass(frozen=True)
class FlagGenusResult:
    """Genus interval plus the status of the separation hypotheses.

    The interval is computed unconditionally; hypotheses_verified records
    whether the separation checks certify it.  Single-degree flags have no
    separation hypotheses, so they verify vacuously with no report.
    """

    flag: FlagCondition
    interval: GenusInterval
    hypotheses_verified: bool
    report: HypothesisReport | None

    def to_dict(self) -> dict:
        return {
            "lo": format_rational(self.interval.lo),
            "hi": format_rational(self.interval.hi),
            "hypothesesVerified": self.hypotheses_verified,
        }


def _interval(flag: FlagCondition) -> GenusInterval:
    if flag.length == 1:
        return GenusInterval.point(castelnuovo_bound(flag.r, flag.degrees[0]))
    inner = _interval(flag.peel())
    s1, s2 = flag.degrees[0], flag.degrees[1]
    scale = Fraction(s1, s2)
    offset = Fraction(s1 * s1, 2 * s2) + Fraction(s1, 2 * s2) * (-2 - s2)
    return inner.affine_image(scale, offset).expand(Fraction(s2**3, flag.r - 2))


def flag_genus_interval(flag: FlagCondition, budget: int | None = None) -> FlagGenusResult:
    """Evaluate the recursion and attach the separation hypothesis status."""
    interval = _interval(flag)
    if flag.length == 1:
        return FlagGenusResult(flag, interval, hypotheses_verified=True, report=None)
    report = check_flag_separation(flag, budget)
    return FlagGenusResult(
        flag, interval, hypotheses_verified=report.passed, report=report
    )


def corollary_bound(r: int, d: int, s: int, pi: int) -> Fraction:
    """d^2/(2s) + (d/(2s))(2 pi - 2 - s) + s^3/(r-2)."""
    if r < 3:
        raise ValidationError(f"ambient dimension r must be >= 3, got {r}")
    if s < r - 1:
        raise ValidationError(f"need s >= r-1 = {r - 1}, got {s}")
    return quadratic_genus_bound(d, s, pi, Fraction(s**3, r - 2))


def corollary_alternative_bound(r: int, d: int, s: int) -> Fraction:
    """The same shape one degree up, with the worst sectional genus.

    Replaces s by s+1 and pi by castelnuovo_bound(r-1, s+1): the bound for
    curves lying on no surface of degree s or less.
    """
    if r < 3:
        raise ValidationError(f"ambient dimension r must be >= 3, got {r}")
    if s + 1 < r - 1:
        raise ValidationError(f"need s+1 >= r-1 = {r - 1}, got s={s}")
    genus_up = castelnuovo_bound(r - 1, s + 1)
    return quadratic_genus_bound(d, s + 1, genus_up, Fraction((s + 1) ** 3, r - 2))


class Regime(Enum):
    ON_SMALL_SURFACE = "onSmallSurface"
    NOT_ON_DEGREE_S = "notOnDegreeS"


@dataclass(frozen=True)
class DichotomyReport:
    """Exact comparison of the two corollary regimes.

    When the alternative bound is strictly smaller, any genus-maximal curve
    must sit on a surface of degree at most s, so the binding bound is the
    on-surface one.
    """

    r: int
    d: int
    s: int
    pi: int
    binding_bound: Fraction
    alternative_bound: Fraction
    alternative_strictly_less: bool

    @property
    def regime(self) -> Regime:
        if self.alternative_strictly_less:
            return Regime.ON_SMALL_SURFACE
        return Regime.NOT_ON_DEGREE_S

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "s": self.s,
            "pi": self.pi,
            "regime": self.regime.value,
            "bindingBound": format_rational(self.binding_bound),
            "alternativeBound": format_rational(self.alternative_bound),
            "alternativeStrictlyLess": self.alternative_strictly_less,
        }


def corollary_dichotomy(
    r: int, d: int, s: int, pi: int, budget: int | None = None
) -> DichotomyReport:
    """Compare the two corollary bounds under the degree hypotheses.

    Raises HypothesisFailureError when the degree conditions fail (the
    comparison may then legitimately go either way) and
    UndecidedComparisonError when the radical condition cannot be certified
    within the digit budget.
    """
    degree_report = check_corollary_degree(r, d, s, budget)
    if degree_report.verdict is Verdict.FAIL:
        failed = [c.label for c in degree_report.checks if c.verdict is Verdict.FAIL]
        raise HypothesisFailureError(
            f"corollary degree hypotheses fail for (r={r}, d={d}, s={s}): "
            + ", ".join(failed)
        )
    if degree_report.verdict is Verdict.UNDECIDED:
        raise UndecidedComparisonError(
            f"corollary degree hypotheses undecided for (r={r}, d={d}, s={s}) "
            "within the digit budget"
        )
    binding = corollary_bound(r, d, s, pi)
    alternative = corollary_alternative_bound(r, d, s)
    return DichotomyReport(
        r=r,
        d=d,
        s=s,
        pi=pi,
        binding_bound=binding,
        alternative_bound=alternative,
        alternative_strictly_less=alternative < binding,
    )


def speciality_bound(d: int, s: int, pi: int) -> Fraction:
    """(d + 2 pi - 2 - s)/s: exact cap on the speciality index."""
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    if d < 1:
        raise ValidationError(f"degree d must be >= 1, got {d}")
    if pi < 0:
        raise ValidationError(f"sectional genus must be >= 0, got {pi}")
    return Fraction(d + 2 * pi - 2 - s, s)
