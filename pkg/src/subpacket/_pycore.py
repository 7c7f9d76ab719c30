"""Pure-Python kernels; mirror ``_core.pyx`` line for line.

Used when the compiled extension is unavailable, and as the baseline in
``benchmarks/bench_kernels.py``.
"""

from math import comb


def window_power(D, T):
    """Coefficients of (1 + x + ... + x^(D-1))^T as a list of Python ints.

    Starts from the window itself and convolves T-1 more times with the
    all-ones window, each pass as a sliding sum of width D.
    """
    if D < 2:
        raise ValueError(f"window_power requires D >= 2 (got {D})")
    if T < 1:
        raise ValueError(f"window_power requires T >= 1 (got {T})")
    coeffs = [1] * D
    for _ in range(T - 1):
        n_old = len(coeffs)
        out = [0] * (n_old + D - 1)
        acc = 0
        for n in range(n_old + D - 1):
            if n < n_old:
                acc += coeffs[n]
            if n >= D:
                acc -= coeffs[n - D]
            out[n] = acc
        coeffs = out
    return coeffs


def backward_recursion(q, K, D):
    """Scaled solution X_1..X_K (0-based list) of the backward recursion.

    With E = K - D the true values are L_j = X_j / q**E, where q = N - 1.
    Seeds: L_K = q**E and L_{E+1..K-1} = 0; then for j = E..1,
    q * X_j = sum_{i=1..D} C(D, i) * X_{i+j}, which is always an exact
    integer division.
    """
    E = K - D
    binom = [comb(D, i) for i in range(D + 1)]
    X = [0] * (K + 1)  # index 0 unused, X[j] holds scaled L_j
    X[K] = q ** (2 * E)
    for j in range(E, 0, -1):
        acc = 0
        for i in range(1, D + 1):
            acc += binom[i] * X[i + j]
        value, rem = divmod(acc, q)
        if rem:
            raise ArithmeticError(f"inexact division at j={j}")
        X[j] = value
    return X[1:]
