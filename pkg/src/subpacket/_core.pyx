# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels.  Values stay Python ints (arbitrary precision); only the
index bookkeeping is typed.  Semantics identical to ``_pycore``."""

from math import comb


def window_power(Py_ssize_t D, Py_ssize_t T):
    if D < 2:
        raise ValueError(f"window_power requires D >= 2 (got {D})")
    if T < 1:
        raise ValueError(f"window_power requires T >= 1 (got {T})")
    cdef Py_ssize_t step, n, n_old, width
    cdef list coeffs = [1] * D
    cdef list out
    for step in range(T - 1):
        n_old = len(coeffs)
        width = n_old + D - 1
        out = [0] * width
        acc = 0
        for n in range(width):
            if n < n_old:
                acc += <object>coeffs[n]
            if n >= D:
                acc -= <object>coeffs[n - D]
            out[n] = acc
        coeffs = out
    return coeffs


def backward_recursion(q, Py_ssize_t K, Py_ssize_t D):
    cdef Py_ssize_t E = K - D
    cdef Py_ssize_t i, j
    cdef list binom = [comb(D, i) for i in range(D + 1)]
    cdef list X = [0] * (K + 1)
    X[K] = q ** (2 * E)
    for j in range(E, 0, -1):
        acc = 0
        for i in range(1, D + 1):
            acc += <object>binom[i] * <object>X[i + j]
        value, rem = divmod(acc, q)
        if rem:
            raise ArithmeticError(f"inexact division at j={j}")
        X[j] = value
    return X[1:]
