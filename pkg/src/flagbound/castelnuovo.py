"""Castelnuovo's bound and the minimal Hilbert function of spanning points.

For deg points spanning P^N the Hilbert function is at least

    h(i) >= min(deg, i*N + 1),

and the maximal genus of a nondegenerate degree-deg curve in P^N is

    pi(deg, N) = C(m, 2)*(N - 1) + m*eps,   deg - 1 = m*(N - 1) + eps.

The closed form and the deficiency-sum form sum_{i>=1} (deg - min(deg, i*(N-1)+1))
agree everywhere; oracle_suite re-proves that on a grid at every verify run.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError
from .exact_arith import binomial


def min_point_hilbert(N: int, deg: int, i: int) -> int:
    """Minimal Hilbert function value min(deg, i*N + 1) at step i >= 0.

    Saturates (reaches deg) at i = w when v == 0 and at i = w + 1 when
    v > 0, where deg - 1 = w*N + v.
    """
    if N < 2:
        raise ValidationError(f"points must span P^N with N >= 2, got N={N}")
    if deg < 1:
        raise ValidationError(f"point count must be >= 1, got {deg}")
    if i < 0:
        raise ValidationError(f"step index must be >= 0, got {i}")
    return min(deg, i * N + 1)


def castelnuovo_bound(N: int, deg: int) -> int:
    """Maximal genus of a nondegenerate curve of degree deg in P^N."""
    if N < 2:
        raise ValidationError(f"ambient dimension N must be >= 2, got {N}")
    if deg < N:
        raise ValidationError(f"nondegenerate curves need deg >= N, got deg={deg}, N={N}")
    m, eps = divmod(deg - 1, N - 1)
    return binomial(m, 2) * (N - 1) + m * eps


def quadratic_envelope(s: int, r: int) -> Fraction:
    """s**2 / (2*(r-2)): the quadratic upper envelope of castelnuovo_bound(r-1, s).

    castelnuovo_bound(r-1, s) <= s**2 / (2*(r-2)) for every s >= r - 2 >= 1.
    """
    if r < 3:
        raise ValidationError(f"ambient dimension r must be >= 3, got {r}")
    if s < 1:
        raise ValidationError(f"section degree s must be >= 1, got {s}")
    return Fraction(s * s, 2 * (r - 2))
