"""Truncated graded characters of the extended algebras and their modules.

Every series is graded by the true ``L(0)``-eigenvalue unless a function says
otherwise; truncation orders refer to that grading.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import floor, isqrt

from . import _linalg as la
from . import kernels
from .errors import UnsupportedError, ValidationError
from .extension import ExtensionData, component_weight, components_up_to
from .fusion import conformal_weight
from .lattice import CosetLabel, IntegralLattice, theta_coset
from .modrep import _label, _shift_for, shift_module, untwisted_condition
from .rootdata import DominantWeight, RootSystem, weyl_dim
from .series import CharSeries, series_add, series_mul, series_sum

__all__ = [
    "CharSeries",
    "series_add",
    "series_mul",
    "boson_char",
    "affine_sl2_char",
    "level_one_char",
    "affine_char",
    "ext_module_char",
    "component_sum_char",
    "weight_one_dim",
]


def boson_char(dim: int, norm, N) -> CharSeries:
    """``q^(norm/2) prod_{n>=1} (1-q^n)^(-dim)``: a rank-``dim`` Heisenberg module."""
    if not isinstance(dim, int) or dim < 0:
        raise ValidationError(f"Heisenberg dimension must be a nonnegative integer, got {dim!r}")
    N, h = Fraction(N), Fraction(norm) / 2
    if N < h:
        return CharSeries.zero(N)
    coeffs = kernels.euler_inverse_power(dim, floor(N - h))
    return CharSeries.from_integer_list(coeffs, N, offset=h)


@lru_cache(maxsize=None)
def _sl2_char_coeffs(k: int, i: int, n: int) -> tuple[int, ...]:
    # Weyl-Kac numerator for the principal-free specialization: sum over the
    # affine translations t of (i+1+2(k+2)t) q^((k+2)t^2 + (i+1)t).
    num = [0] * (n + 1)
    r = isqrt(n // (k + 2) + 1) + 2
    for t in range(-r, r + 1):
        e = (k + 2) * t * t + (i + 1) * t
        if 0 <= e <= n:
            num[e] += i + 1 + 2 * (k + 2) * t
    return tuple(kernels.convolve(num, kernels.euler_inverse_power(3, n), n))


def affine_sl2_char(k: int, i: int, N) -> CharSeries:
    """Character of ``L(k,i)`` for affine sl(2), graded from its lowest weight."""
    if not isinstance(k, int) or k < 1 or not isinstance(i, int) or not 0 <= i <= k:
        raise ValidationError(f"need 0 <= i <= k with k >= 1, got k={k!r}, i={i!r}")
    N = Fraction(N)
    if N < 0:
        return CharSeries.zero(N)
    return CharSeries.from_integer_list(_sl2_char_coeffs(k, i, floor(N)), N)


def _simply_laced(rs: RootSystem) -> bool:
    return all(x == 2 for x in rs.root_norms)


def level_one_char(rs: RootSystem, lam, N) -> CharSeries:
    """``Theta_{lam+Q} / phi^rank`` shifted to start at 0 (simply-laced, level 1)."""
    if not _simply_laced(rs):
        raise UnsupportedError(f"level-one lattice realization needs a simply-laced type, not {rs.type}")
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))
    h = conformal_weight(rs, 1, lam)
    N = Fraction(N)
    # lambda = sum_i l_i lambda_i in simple-root coordinates.
    shift = tuple(sum((rs.weight_coeffs[i][j] * l for i, l in enumerate(lam.labels)), Fraction(0)) for j in range(rs.rank))
    root_lattice = IntegralLattice(tuple(f"a{i + 1}" for i in range(rs.rank)), rs.inner)
    theta = theta_coset(root_lattice, CosetLabel(shift), N + h)
    return series_mul(theta, boson_char(rs.rank, 0, N + h)).shift(-h)


def affine_char(rs: RootSystem, k: int, lam, N) -> CharSeries:
    """Character of ``L(k, lam)`` graded from its lowest weight, where available."""
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))
    if rs.type.family == "A" and rs.rank == 1:
        return affine_sl2_char(k, lam.labels[0], N)
    if k == 1 and _simply_laced(rs):
        return level_one_char(rs, lam, N)
    raise UnsupportedError(f"affine characters of {rs.type} at level {k} are not implemented")


def _affine_part(ext: ExtensionData, lam: DominantWeight, N: Fraction) -> CharSeries:
    h = conformal_weight(ext.rs, ext.level, lam)
    if N < h:
        return CharSeries.zero(N)
    return affine_char(ext.rs, ext.level, lam, N - h).shift(h)


def ext_module_char(ext: ExtensionData, label, N) -> CharSeries:
    """Extended sl(2) module as ``L(k,i) x V_{2L'+gamma} + L(k,k-i) x V_{2L'+gamma+alpha'}``."""
    if not (ext.rs.type.family == "A" and ext.rs.rank == 1) or ext.heis_dim != 1:
        raise UnsupportedError("the theta decomposition is implemented for the sl(2) extension only")
    label = _label(ext, label)
    if not untwisted_condition(ext, label.weight, label.gamma):
        raise ValidationError(f"{label} is twisted")
    N = Fraction(N)
    k, i = ext.level, label.weight.labels[0]
    # 2L' in the basis 2 alpha' has Gram 4 <alpha', alpha'>.
    two_l = IntegralLattice(("2alpha'",), ((4 * ext.heis_gram[0][0],),))
    fock = boson_char(1, 0, N)
    out = CharSeries.zero(N)
    for weight, gamma in ((i, label.gamma[0]), (k - i, label.gamma[0] + 1)):
        theta = theta_coset(two_l, CosetLabel((gamma / 2,)), N)
        aff = _affine_part(ext, DominantWeight((weight,)), N)
        out = series_add(out, series_mul(aff, series_mul(theta, fock)))
    return out


def component_sum_char(ext: ExtensionData, label, N) -> CharSeries:
    """``sum_alpha ch L(k, lambda^(alpha)) q^(|gamma+alpha'|^2/2) / phi^d`` over all shifts."""
    if not ext.heis_dim:
        raise UnsupportedError("component sums need a Heisenberg part")
    label = _label(ext, label)
    N = Fraction(N)
    inv = la.inverse(ext.heis_gram)
    fock = boson_char(ext.heis_dim, 0, N)
    ranges = []
    for a in range(ext.heis_dim):
        # Affine weights are >= 0, so |gamma+delta|^2 <= 2N bounds each coordinate.
        r = isqrt(floor(2 * N * inv[a][a])) + 1 if N >= 0 else -1
        ranges.append(range(-r - floor(label.gamma[a]) - 1, r - floor(label.gamma[a]) + 2))
    parts = []
    for delta in product(*ranges):
        shifted = shift_module(ext, label, _shift_for(ext, [Fraction(x) for x in delta]))
        e = ext.heis_norm(shifted.gamma) / 2
        if e > N:
            continue
        parts.append(series_mul(_affine_part(ext, shifted.weight, N), fock.shift(e).truncate(N)))
    return series_sum(parts, N)


def weight_one_dim(ext: ExtensionData) -> int:
    """Dimension of the weight-one subspace of ``V[L]``.

    The vacuum component gives ``g + h'``; a nonzero component with lowest
    weight exactly 1 gives its lowest space.  Components of lowest weight
    strictly between 0 and 1 would contribute descendants too, so they are
    refused.
    """
    total = ext.rs.dimension + ext.heis_dim
    for m, w in components_up_to(ext, 1):
        if not any(m):
            continue
        if w < 1:
            raise UnsupportedError(f"component {m} has lowest weight {w} below 1")
        total += weyl_dim(ext.rs, component_weight(ext, m))
    return total
