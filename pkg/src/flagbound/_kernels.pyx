# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 summation kernels, twins of _kernels_py.

Callers (see _backend) must guarantee the results fit in int64; the pure
twins carry everything else.
"""


def deficiency_sum(long long stable, long long modulus):
    cdef long long acc = 0
    cdef long long i = 1
    cdef long long h
    while True:
        h = i * modulus + 1
        if h >= stable:
            return acc
        acc += stable - h
        i += 1


def weighted_deficiency_sum(long long stable, long long modulus):
    cdef long long acc = 0
    cdef long long i = 1
    cdef long long h
    while True:
        h = i * modulus + 1
        if h >= stable:
            return acc
        acc += (i - 1) * (stable - h)
        i += 1


def truncated_section_sum(long long d, long long m, list point_values, list deltas):
    cdef Py_ssize_t top = len(point_values) - 1
    cdef long long stable = point_values[top]
    cdef Py_ssize_t n_deltas = len(deltas)
    cdef long long acc = 0
    cdef long long h1 = point_values[0]
    cdef long long i
    for i in range(1, m + 1):
        h1 += point_values[i] if i <= top else stable
        if i <= n_deltas:
            h1 += deltas[i - 1]
        acc += d - h1
    return acc, h1
