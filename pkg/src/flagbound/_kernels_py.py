"""Pure-Python reference kernels.

Same signatures and semantics as the compiled twins in _kernels.pyx, with
arbitrary-precision integers.  _backend routes here when the compiled module
is missing, when inputs could overflow int64, or when FLAGBOUND_PURE is set.
"""

from __future__ import annotations


def deficiency_sum(stable: int, modulus: int) -> int:
    # sum_{i>=1} (stable - min(stable, i*modulus + 1))
    acc = 0
    i = 1
    while True:
        h = i * modulus + 1
        if h >= stable:
            return acc
        acc += stable - h
        i += 1


def weighted_deficiency_sum(stable: int, modulus: int) -> int:
    # sum_{i>=1} (i - 1) * (stable - min(stable, i*modulus + 1))
    acc = 0
    i = 1
    while True:
        h = i * modulus + 1
        if h >= stable:
            return acc
        acc += (i - 1) * (stable - h)
        i += 1


def truncated_section_sum(
    d: int, m: int, point_values: list[int], deltas: list[int]
) -> tuple[int, int]:
    # (sum_{i=1..m} (d - h1(i)), h1(m)) where h1 is the running sum of
    # point values (extended by their last entry) plus deltas (delta_0 = 0).
    top = len(point_values) - 1
    stable = point_values[top]
    n_deltas = len(deltas)
    acc = 0
    h1 = point_values[0]
    for i in range(1, m + 1):
        h1 += point_values[i] if i <= top else stable
        if i <= n_deltas:
            h1 += deltas[i - 1]
        acc += d - h1
    return acc, h1
