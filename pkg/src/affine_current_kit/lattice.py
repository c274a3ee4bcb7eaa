"""Lattices with exact Gram matrices, the sign cocycle, and coset theta series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor, lcm
from typing import Sequence

from . import _linalg as la
from . import kernels
from .errors import TwistedPhaseError, ValidationError
from .series import CharSeries

__all__ = [
    "IntegralLattice",
    "ValidationReport",
    "CosetLabel",
    "validate",
    "epsilon",
    "epsilon_table",
    "commutator_sign",
    "eta_c",
    "dual_membership",
    "theta_coset",
]


@dataclass(frozen=True)
class ValidationReport:
    integral: bool
    even: bool
    positive_definite: bool
    even_sublattice_basis: tuple[tuple[int, ...], ...]

    @property
    def even_sublattice_index(self) -> int:
        return 1 if self.even else 2

    def to_json(self) -> dict:
        return {
            "integral": self.integral,
            "even": self.even,
            "positive_definite": self.positive_definite,
            "even_sublattice_index": self.even_sublattice_index,
            "even_sublattice_basis": [list(v) for v in self.even_sublattice_basis],
        }


@dataclass(frozen=True)
class IntegralLattice:
    """Free abelian group on ``basis_names`` with symmetric form ``gram``.

    The Gram matrix may be rational (the Heisenberg projection of an
    extension lattice need not be integral); :func:`validate` reports on it.
    The basis order is part of the identity since the cocycle depends on it.
    """

    basis_names: tuple[str, ...]
    gram: la.Matrix

    def __post_init__(self):
        gram = la.to_matrix(self.gram)
        names = tuple(self.basis_names)
        if len(gram) != len(names) or any(len(r) != len(names) for r in gram):
            raise ValidationError("Gram matrix shape does not match the basis")
        if not la.is_symmetric(gram):
            raise ValidationError("Gram matrix is not symmetric")
        if len(set(names)) != len(names):
            raise ValidationError("basis names must be distinct")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "basis_names", names)

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence], names: Sequence[str] | None = None) -> "IntegralLattice":
        n = len(gram)
        return cls(tuple(names) if names else tuple(f"a{i + 1}" for i in range(n)), la.to_matrix(gram))

    @property
    def rank(self) -> int:
        return len(self.basis_names)

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        self._check(x)
        self._check(y)
        return la.quadratic(self.gram, x, y)

    def norm(self, x: Sequence) -> Fraction:
        return self.form(x, x)

    @cached_property
    def is_integral(self) -> bool:
        return la.is_integral(x for row in self.gram for x in row)

    @cached_property
    def report(self) -> ValidationReport:
        integral = self.is_integral
        even = integral and all(self.gram[i][i] % 2 == 0 for i in range(self.rank))
        pd = la.is_positive_definite(self.gram)
        basis = _even_sublattice_basis(self.gram) if integral else ()
        return ValidationReport(integral, even, pd, basis)

    def _check(self, v: Sequence) -> None:
        if len(v) != self.rank:
            raise ValidationError(f"vector of length {len(v)} does not match lattice rank {self.rank}")

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "basis_names": list(self.basis_names),
            "gram": [list(r) for r in self.gram],
        }


def _even_sublattice_basis(gram: la.Matrix) -> tuple[tuple[int, ...], ...]:
    # On an integral lattice B(x,x) = sum_i x_i^2 B_ii mod 2, so L^e is the
    # kernel of x -> sum_i x_i (B_ii mod 2).
    n = len(gram)
    odd = [i for i in range(n) if gram[i][i] % 2]

    def unit(i):
        return tuple(int(j == i) for j in range(n))

    if not odd:
        return tuple(unit(i) for i in range(n))
    i0 = odd[0]
    basis = []
    for j in range(n):
        if j == i0:
            basis.append(tuple(2 * x for x in unit(i0)))
        elif j in odd:
            basis.append(tuple(a - b for a, b in zip(unit(j), unit(i0))))
        else:
            basis.append(unit(j))
    return tuple(basis)


def validate(lat: IntegralLattice) -> ValidationReport:
    return lat.report


def _int_vector(v: Sequence, what: str) -> tuple[int, ...]:
    out = []
    for x in v:
        f = Fraction(x)
        if f.denominator != 1:
            raise ValidationError(f"{what} must have integer coordinates, got {x}")
        out.append(int(f))
    return tuple(out)


def epsilon(lat: IntegralLattice, a: Sequence[int], b: Sequence[int]) -> int:
    """The sign cocycle: on basis pairs with ``i >= j`` it is
    ``(-1)^(B_ij + B_ii B_jj)``, and 1 for ``i < j``; bimultiplicative."""
    if not lat.is_integral:
        raise ValidationError("the sign cocycle needs an integral lattice")
    a = _int_vector(a, "cocycle argument")
    b = _int_vector(b, "cocycle argument")
    lat._check(a)
    lat._check(b)
    g = lat.gram
    parity = 0
    for i in range(lat.rank):
        if not a[i] % 2:
            continue
        for j in range(i + 1):
            if b[j] % 2 and (g[i][j] + g[i][i] * g[j][j]) % 2:
                parity ^= 1
    return -1 if parity else 1


def epsilon_table(lat: IntegralLattice, vectors: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """``epsilon(a, b)`` for all pairs from ``vectors``; row ``a``, column ``b``.

    The sign only sees coordinates mod 2, so one row is built per parity
    class and shared between vectors in that class.
    """
    if not lat.is_integral:
        raise ValidationError("the sign cocycle needs an integral lattice")
    vecs = [_int_vector(v, "cocycle argument") for v in vectors]
    for v in vecs:
        lat._check(v)
    g = lat.gram
    n = lat.rank
    # bit j of rows[i] is set when the basis pair (i, j), j <= i, contributes -1
    rows = [sum(1 << j for j in range(i + 1) if (g[i][j] + g[i][i] * g[j][j]) % 2) for i in range(n)]
    masks = [sum(1 << i for i, x in enumerate(v) if x % 2) for v in vecs]
    by_mask = {}
    for ma in set(masks):
        ra = 0
        for i in range(n):
            if ma >> i & 1:
                ra ^= rows[i]
        by_mask[ma] = tuple(-1 if bin(ra & mb).count("1") % 2 else 1 for mb in masks)
    return tuple(by_mask[ma] for ma in masks)


def commutator_sign(lat: IntegralLattice, a: Sequence[int], b: Sequence[int]) -> int:
    """``(-1)^(B(a,b) + B(a,a) B(b,b))``."""
    v = lat.form(a, b) + lat.norm(a) * lat.norm(b)
    if v.denominator != 1:
        raise ValidationError("commutator sign needs integral values")
    return -1 if v % 2 else 1


def eta_c(
    lat: IntegralLattice,
    pair1: tuple[Sequence, Sequence],
    pair2: tuple[Sequence, Sequence],
) -> tuple[Fraction, int]:
    """``eta`` and the phase ``C`` for two (lattice vector, ambient vector) pairs.

    Ambient vectors are given in the rational span of the lattice basis.
    ``C`` is returned as +-1; a non-integral exponent raises
    :class:`TwistedPhaseError` carrying the exponent.
    """
    (a1, h1), (a2, h2) = pair1, pair2
    a1 = _int_vector(a1, "lattice part")
    a2 = _int_vector(a2, "lattice part")
    b12 = lat.form(a1, h2)
    b21 = lat.form(a2, h1)
    eta = -lat.form(a1, a2) - b12 - b21
    exponent = b12 - b21
    if exponent.denominator != 1:
        raise TwistedPhaseError(exponent)
    return eta, (-1 if exponent % 2 else 1)


def dual_membership(lat: IntegralLattice, v: Sequence) -> bool:
    lat._check(v)
    n = lat.rank
    return all(lat.form(v, tuple(int(i == j) for j in range(n))).denominator == 1 for i in range(n))


@dataclass(frozen=True)
class CosetLabel:
    shift: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "shift", tuple(Fraction(x) for x in self.shift))


def theta_coset(lat: IntegralLattice, c: CosetLabel | Sequence, N) -> CharSeries:
    """``sum_{beta in c+L} q^(B(beta,beta)/2)`` with exponents up to ``N``."""
    shift = c.shift if isinstance(c, CosetLabel) else CosetLabel(tuple(c)).shift
    lat._check(shift)
    N = Fraction(N)
    if lat.rank == 0:
        return CharSeries.one(N) if N >= 0 else CharSeries.zero(N)
    if not validate(lat).positive_definite:
        raise ValidationError("theta series needs a positive-definite lattice")
    if N < 0:
        return CharSeries.zero(N)
    # beta = y / D with integer y = D*shift + D*n, and B = G_int / E.
    d = lcm(*(x.denominator for x in shift))
    e = la.common_denominator(x for row in lat.gram for x in row)
    g_int = la.to_matrix([[x * e for x in row] for row in lat.gram])
    s_int = [int(x * d) for x in shift]
    scale = 2 * e * d * d
    counts = kernels.theta_counts(_schur_levels(g_int), s_int, d, floor(N * scale))
    return CharSeries(N, tuple((Fraction(v, scale), m) for v, m in counts.items()))


def _schur_levels(g: la.Matrix) -> list[tuple[int, list[list[int]]]]:
    """``(m_i, m_i * S_i)`` for each leading block; see the theta kernel."""
    n = len(g)
    out = []
    for i in range(n):
        if i:
            top = [row[:i] for row in g[:i]]
            m = la.det(top)
            inv = la.inverse(top)
            rest = range(i, n)
            schur = [[g[a][b] - sum(g[a][p] * inv[p][q] * g[q][b] for p in range(i) for q in range(i)) for b in rest] for a in rest]
        else:
            m, schur = Fraction(1), [list(row) for row in g]
        scaled = [[m * x for x in row] for row in schur]
        assert m.denominator == 1 and all(x.denominator == 1 for row in scaled for x in row)
        out.append((int(m), [[int(x) for x in row] for row in scaled]))
    return out
