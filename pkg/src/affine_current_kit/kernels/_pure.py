"""Reference implementations of the integer kernels (arbitrary-precision ints)."""
from __future__ import annotations

from math import isqrt


def convolve(a: list[int], b: list[int], n: int) -> list[int]:
    """Coefficients of ``a*b`` up to and including degree ``n``."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: n + 1 - i]):
            out[i + j] += x * y
    return out


def euler_inverse_power(dim: int, n: int) -> list[int]:
    """Coefficients of ``prod_{m>=1} (1-q^m)^(-dim)`` up to degree ``n``.

    Uses the logarithmic-derivative recurrence ``m p_m = dim * sum_j sigma(j) p_{m-j}``.
    """
    sigma = [0] * (n + 1)
    for d in range(1, n + 1):
        for m in range(d, n + 1, d):
            sigma[m] += d
    p = [0] * (n + 1)
    p[0] = 1
    for m in range(1, n + 1):
        acc = 0
        for j in range(1, m + 1):
            acc += sigma[j] * p[m - j]
        p[m] = dim * acc // m
    return p


def theta_counts(
    levels: list[tuple[int, list[list[int]]]],
    shift: list[int],
    step: int,
    vmax: int,
) -> dict[int, int]:
    """Count ``y = shift + step*n`` by the value ``y^T G y <= vmax`` (Fincke-Pohst).

    ``levels[i] = (m_i, P_i)`` where ``m_i`` is the leading ``i x i`` minor of
    ``G`` and ``P_i = m_i * S_i`` is the scaled Schur complement of that block,
    an integer matrix on the coordinates ``i..d-1``.  Given ``y_j`` for
    ``j > i``, minimizing over ``y_0..y_{i-1}`` leaves the exact condition
    ``A t^2 + 2 B t + C <= m_i vmax`` on ``t = y_i``.
    """
    d = len(shift)
    counts: dict[int, int] = {}
    if d == 0:
        if vmax >= 0:
            counts[0] = 1
        return counts
    y = [0] * d

    def walk(i: int) -> None:
        m, P = levels[i]
        A = P[0][0]
        w = d - i
        B = sum(P[0][j] * y[i + j] for j in range(1, w))
        C = sum(P[j][l] * y[i + j] * y[i + l] for j in range(1, w) for l in range(1, w))
        bound = m * vmax
        disc = B * B - A * (C - bound)
        if disc < 0:
            return
        r = isqrt(disc) + 1
        t_lo, t_hi = (-B - r) // A, (-B + r) // A + 1
        n_lo = -((shift[i] - t_lo) // step)
        n_hi = (t_hi - shift[i]) // step
        for n in range(n_lo, n_hi + 1):
            t = shift[i] + step * n
            q = A * t * t + 2 * B * t + C
            if q > bound:
                continue
            y[i] = t
            if i:
                walk(i - 1)
            else:
                counts[q] = counts.get(q, 0) + 1

    walk(d - 1)
    return counts
