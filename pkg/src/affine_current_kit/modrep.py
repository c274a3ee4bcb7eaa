"""Irreducible modules of the extended algebras and their fusion.

A module of ``V`` is ``W(lambda, gamma)``: the level-k module of highest
weight ``lambda`` tensored with the Heisenberg module of momentum ``gamma``
(coordinates in the ``alpha'`` basis).  Shifting by a lattice element
``alpha = sum m_a alpha_a`` moves ``lambda`` by the simple current of
``alpha''`` and ``gamma`` by ``alpha'``; extended modules are the orbits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, isqrt, lcm
from typing import Mapping, Sequence

from . import _linalg as la
from .errors import MissingFusionData, UnsupportedError, ValidationError
from .extension import ExtensionData, build_extension, check_hypotheses
from .fusion import FusionVector, conformal_weight, current_action, level_weights, sl2_fusion
from .rootdata import DominantWeight, LieType, root_system

__all__ = [
    "ModuleLabel",
    "ExtModuleLabel",
    "TwistInfo",
    "untwisted_values",
    "untwisted_condition",
    "sigma_order",
    "shift_module",
    "canonical",
    "classify",
    "module_lowest_weight",
    "from_integer_label",
    "to_integer_label",
    "ext_fusion_sl2",
    "fusion_lift",
    "verlinde_quotient",
]


@dataclass(frozen=True, order=True)
class ModuleLabel:
    weight: DominantWeight
    gamma: tuple[Fraction, ...]

    def __post_init__(self):
        w = self.weight if isinstance(self.weight, DominantWeight) else DominantWeight(tuple(self.weight))
        object.__setattr__(self, "weight", w)
        object.__setattr__(self, "gamma", tuple(Fraction(x) for x in self.gamma))

    def __str__(self) -> str:
        return f"W({','.join(map(str, self.weight.labels))};{','.join(map(str, self.gamma))})"

    def to_json(self) -> dict:
        return {"lambda_labels": list(self.weight.labels), "gamma": list(self.gamma)}


@dataclass(frozen=True)
class ExtModuleLabel:
    """Canonical representative of an orbit: ``gamma`` in ``[0,1)`` per coordinate."""

    rep: ModuleLabel

    def __lt__(self, other: "ExtModuleLabel") -> bool:
        return _order_key(self.rep) < _order_key(other.rep)

    def __le__(self, other: "ExtModuleLabel") -> bool:
        return _order_key(self.rep) <= _order_key(other.rep)

    @property
    def weight(self) -> DominantWeight:
        return self.rep.weight

    @property
    def gamma(self) -> tuple[Fraction, ...]:
        return self.rep.gamma

    def __str__(self) -> str:
        return str(self.rep) + "[L]"


def _order_key(label: ModuleLabel):
    return (label.gamma, label.weight.labels)


@dataclass(frozen=True)
class TwistInfo:
    order: int
    untwisted: bool

    def to_json(self) -> dict:
        return {"order": self.order, "untwisted": self.untwisted}


def _label(ext: ExtensionData, label) -> ModuleLabel:
    if isinstance(label, ExtModuleLabel):
        label = label.rep
    if not isinstance(label, ModuleLabel):
        lam, gamma = label
        label = ModuleLabel(lam, gamma)
    if len(label.gamma) != ext.heis_dim:
        raise ValidationError(f"momentum must have {ext.heis_dim} coordinates")
    if label.weight not in level_weights(ext.rs, ext.level):
        raise ValidationError(f"{label.weight} is not a level-{ext.level} weight of {ext.rs.type}")
    return label


def untwisted_values(ext: ExtensionData, lam, gamma) -> tuple[Fraction, ...]:
    """``B(alpha_a, (lambda, gamma)) = lambda(h''_a) + <alpha'_a, gamma>`` per generator."""
    label = _label(ext, ModuleLabel(lam, gamma))
    out = []
    for g in ext.generators:
        v = g.coweight.weight_pairing(label.weight.labels)
        if g.heis_index is not None:
            v += sum((ext.heis_gram[g.heis_index][j] * x for j, x in enumerate(label.gamma)), Fraction(0))
        out.append(v)
    return tuple(out)


def untwisted_condition(ext: ExtensionData, lam, gamma) -> bool:
    return all(v.denominator == 1 for v in untwisted_values(ext, lam, gamma))


def sigma_order(ext: ExtensionData, lam, gamma) -> TwistInfo:
    order = lcm(*(v.denominator for v in untwisted_values(ext, lam, gamma)))
    return TwistInfo(order, order == 1)


def _int_vector(ext: ExtensionData, m: Sequence) -> tuple[int, ...]:
    if len(m) != ext.rank or any(Fraction(x).denominator != 1 for x in m):
        raise ValidationError(f"lattice shift must be {ext.rank} integers")
    return tuple(int(x) for x in m)


def shift_module(ext: ExtensionData, label, m: Sequence[int]) -> ModuleLabel:
    """``W(lambda, gamma)^(alpha)`` for ``alpha = sum m_a alpha_a``."""
    label = _label(ext, label)
    m = _int_vector(ext, m)
    lam = current_action(ext.rs, ext.level, ext.component_class(m), label.weight)
    gamma = tuple(a + b for a, b in zip(label.gamma, ext.heis_vector(m)))
    return ModuleLabel(lam, gamma)


def _need_heisenberg(ext: ExtensionData) -> None:
    if not ext.heis_dim:
        raise UnsupportedError(f"module classification for {ext.rs.type} (no Heisenberg part) is not provided")


def _shift_for(ext: ExtensionData, delta: Sequence[Fraction]) -> tuple[int, ...]:
    """The lattice coordinates ``m`` with ``alpha' = delta``."""
    m = [0] * ext.rank
    for a, g in enumerate(ext.generators):
        x = delta[g.heis_index]
        if x.denominator != 1:
            raise ValidationError("momentum difference is not in L'")
        m[a] = int(x)
    return tuple(m)


def canonical(ext: ExtensionData, label) -> ExtModuleLabel:
    _need_heisenberg(ext)
    label = _label(ext, label)
    m = _shift_for(ext, [Fraction(-floor(x)) for x in label.gamma])
    return ExtModuleLabel(shift_module(ext, label, m))


def classify(ext: ExtensionData) -> list[ExtModuleLabel]:
    """All untwisted irreducible extended modules, one canonical label each.

    For each ``lambda`` the momenta with ``G' gamma = c`` and
    ``c in -lambda(h'') + Z^d`` are enumerated inside ``gamma in [0,1)^d``;
    the ``[0,1)^d`` representative of an orbit is unique, so nothing is
    merged.
    """
    _need_heisenberg(ext)
    check_hypotheses(ext).require()
    g = ext.heis_gram
    inv = la.inverse(g)
    d = ext.heis_dim
    lo = [sum(min(Fraction(0), x) for x in row) for row in g]
    hi = [sum(max(Fraction(0), x) for x in row) for row in g]
    out = []
    for lam in level_weights(ext.rs, ext.level):
        target = [Fraction(0)] * d
        for gen in ext.generators:
            target[gen.heis_index] = -gen.coweight.weight_pairing(lam.labels)
        ranges = [range(ceil(lo[i] - target[i]), floor(hi[i] - target[i]) + 1) for i in range(d)]
        for t in product(*ranges):
            c = [target[i] + t[i] for i in range(d)]
            gamma = la.matvec(inv, c)
            if all(0 <= x < 1 for x in gamma):
                out.append(ExtModuleLabel(ModuleLabel(lam, gamma)))
    out.sort()
    return out


def module_lowest_weight(ext: ExtensionData, label) -> Fraction:
    """Lowest ``L(0)``-weight over all components ``W(lambda, gamma)^(alpha)``."""
    label = _label(ext, label)
    if not ext.heis_dim:
        return conformal_weight(ext.rs, ext.level, label.weight)
    best = conformal_weight(ext.rs, ext.level, label.weight) + ext.heis_norm(label.gamma) / 2
    inv = la.inverse(ext.heis_gram)
    ranges = []
    for i in range(ext.heis_dim):
        # |gamma + m|^2 <= 2 best bounds each coordinate of gamma + m.
        r = isqrt(floor(2 * best * inv[i][i])) + 1
        ranges.append(range(-r - ceil(label.gamma[i]), r - floor(label.gamma[i]) + 1))
    for delta in product(*ranges):
        shifted = shift_module(ext, label, _shift_for(ext, [Fraction(x) for x in delta]))
        w = conformal_weight(ext.rs, ext.level, shifted.weight) + ext.heis_norm(shifted.gamma) / 2
        best = min(best, w)
    return best


def from_integer_label(ext: ExtensionData, lam, j: int) -> ModuleLabel:
    """``W(lambda, gamma)`` with ``gamma = (j / scale) alpha'`` (rank-one ``h'`` only)."""
    if ext.label_scale is None:
        raise UnsupportedError(f"no integer momentum labelling for {ext.rs.type}")
    return _label(ext, ModuleLabel(lam, (Fraction(j, ext.label_scale),)))


def to_integer_label(ext: ExtensionData, label) -> tuple[DominantWeight, int]:
    label = _label(ext, label)
    if ext.label_scale is None:
        raise UnsupportedError(f"no integer momentum labelling for {ext.rs.type}")
    j = label.gamma[0] * ext.label_scale
    if j.denominator != 1:
        raise ValidationError(f"momentum {label.gamma[0]} is not of the form j/{ext.label_scale}")
    return label.weight, int(j)


# --- fusion -------------------------------------------------------------------


def _sl2_ext(k: int) -> ExtensionData:
    return build_extension(root_system(LieType("A", 1)), k)


def ext_fusion_sl2(k: int, A, B) -> FusionVector:
    """Fusion of the extended sl(2) algebra, in integer labels ``W(i, j)``.

    ``W(i1,j1) W(i2,j2) = sum_i W(i, j1+j2)`` over the sl(2) fusion range, with
    ``W(i, j) = W(k-i, j-k)`` used to bring ``j`` back below ``k``.
    """
    ext = _sl2_ext(k)
    (i1, j1), (i2, j2) = (_sl2_pair(ext, X) for X in (A, B))
    out = []
    for w in sl2_fusion(k, i1, i2):
        i, j = w.labels[0], j1 + j2
        while j >= k:
            i, j = k - i, j - k
        while j < 0:
            i, j = k - i, j + k
        out.append((ExtModuleLabel(from_integer_label(ext, (i,), j)), 1))
    return FusionVector(out)


def _sl2_pair(ext: ExtensionData, X) -> tuple[int, int]:
    lab = canonical(ext, X)
    if not untwisted_condition(ext, lab.weight, lab.gamma):
        raise ValidationError(f"{lab} is twisted")
    lam, j = to_integer_label(ext, lab)
    return lam.labels[0], j


BaseTable = Mapping[tuple[DominantWeight, DominantWeight], Mapping[DominantWeight, int]]


def _base_entry(table: BaseTable, a: DominantWeight, b: DominantWeight) -> Mapping[DominantWeight, int]:
    try:
        return table[(a, b)]
    except KeyError:
        raise MissingFusionData(f"base fusion table has no entry for {a} x {b}") from None


def fusion_lift(ext: ExtensionData, base_table: BaseTable, W1, W2, W3) -> int:
    """``N_{W1[L] W2[L]}^{W3[L]} = sum_alpha N_{W1 W2}^{W3^(alpha)}``.

    Momentum conservation ``gamma1 + gamma2 = gamma3 + alpha'`` leaves at most
    one ``alpha``.
    """
    _need_heisenberg(ext)
    labels = [_label(ext, W) for W in (W1, W2, W3)]
    for lab in labels:
        if not untwisted_condition(ext, lab.weight, lab.gamma):
            raise ValidationError(f"{lab} is twisted")
    l1, l2, l3 = labels
    delta = [a + b - c for a, b, c in zip(l1.gamma, l2.gamma, l3.gamma)]
    if any(x.denominator != 1 for x in delta):
        return 0
    target = shift_module(ext, l3, _shift_for(ext, delta))
    return _base_entry(base_table, l1.weight, l2.weight).get(target.weight, 0)


def verlinde_quotient(ext: ExtensionData, base_table: BaseTable) -> dict[tuple[ExtModuleLabel, ExtModuleLabel], FusionVector]:
    """Structure constants of the quotient of the lifted fusion algebra.

    Products of representatives are projected onto classes; closure on the
    untwisted classes and independence of the chosen representatives (tested
    against shifts by every ``+-alpha_a``) are checked and reported.
    """
    classes = classify(ext)
    known = set(classes)

    def product_of(x: ModuleLabel, y: ModuleLabel) -> FusionVector:
        terms = []
        for lam, mult in _base_entry(base_table, x.weight, y.weight).items():
            if not mult:
                continue
            gamma = tuple(a + b for a, b in zip(x.gamma, y.gamma))
            if not untwisted_condition(ext, lam, gamma):
                raise ValidationError(f"base table is not closed: {lam} x {gamma} is twisted")
            cls = canonical(ext, ModuleLabel(lam, gamma))
            if cls not in known:
                raise ValidationError(f"base table is not closed: {cls} is not a class")
            terms.append((cls, mult))
        return FusionVector(terms)

    shifts = []
    for a in range(ext.rank):
        for s in (1, -1):
            shifts.append(tuple(s * int(b == a) for b in range(ext.rank)))
    out = {}
    for A in classes:
        for B in classes:
            val = product_of(A.rep, B.rep)
            for m in shifts:
                if product_of(shift_module(ext, A.rep, m), B.rep) != val:
                    raise ValidationError(f"product {A} x {B} depends on the representative")
            out[(A, B)] = val
    return out
