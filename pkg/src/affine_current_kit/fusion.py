"""Level-k weights, conformal weights, sl(2) fusion and the simple-current group."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import InvalidTypeError, ValidationError
from .rootdata import (
    CenterGroup,
    CoweightVector,
    DominantWeight,
    LieType,
    RootSystem,
    build_root_system,
    center_group,
    root_labels,
    theta_pairing,
    weight_form,
)

__all__ = [
    "LevelWeightSet",
    "FusionVector",
    "SimpleCurrentElement",
    "SimpleCurrentGroup",
    "level_weights",
    "conformal_weight",
    "sl2_fusion",
    "sl2_fusion_table",
    "simple_current_group",
    "current_action",
    "current_action_by_coweight",
    "affine_permutation",
    "fusion_table_json",
]


def _check_level(k) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValidationError(f"level must be a positive integer, got {k!r}")
    return k


def _as_weight(lam) -> DominantWeight:
    return lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))


@dataclass(frozen=True)
class LevelWeightSet:
    rs: RootSystem = field(repr=False)
    level: int
    weights: tuple[DominantWeight, ...]

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(w.labels for w in self.weights)

    def __contains__(self, lam) -> bool:
        return tuple(lam) in self._members

    def __iter__(self) -> Iterator[DominantWeight]:
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)


@lru_cache(maxsize=None)
def _level_weights(lt: LieType, k: int) -> LevelWeightSet:
    rs = build_root_system(lt)
    comarks = rs.comarks
    out: list[tuple[int, ...]] = []

    def rec(i: int, budget: Fraction, prefix: tuple[int, ...]):
        if i == rs.rank:
            out.append(prefix)
            return
        c = comarks[i]
        m = 0
        while m * c <= budget:
            rec(i + 1, budget - m * c, prefix + (m,))
            m += 1

    rec(0, Fraction(k), ())
    return LevelWeightSet(rs, k, tuple(DominantWeight(w) for w in sorted(out)))


def level_weights(rs: RootSystem, k: int) -> LevelWeightSet:
    """All dominant weights with ``<lambda, theta> <= k``, sorted by labels."""
    return _level_weights(rs.type, _check_level(k))


def _check_in_level(rs: RootSystem, k: int, lam) -> DominantWeight:
    lam = _as_weight(lam)
    if len(lam) != rs.rank:
        raise InvalidTypeError(f"weight {lam} has the wrong rank for {rs.type}")
    if theta_pairing(rs, lam.labels) > k:
        raise ValidationError(f"weight {lam} is not integrable at level {k}")
    return lam


def conformal_weight(rs: RootSystem, k: int, lam) -> Fraction:
    """Lowest ``L(0)``-eigenvalue ``<lambda, lambda + 2 rho> / 2(k + h^vee)``."""
    _check_level(k)
    lam = _check_in_level(rs, k, lam)
    rho = (1,) * rs.rank
    num = weight_form(rs, lam.labels, lam.labels) + 2 * weight_form(rs, lam.labels, rho)
    return num / (2 * (k + rs.dual_coxeter))


class FusionVector(Mapping):
    """Finitely supported element of a fusion ring: class -> multiplicity."""

    __slots__ = ("_data",)

    def __init__(self, data: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        items = data.items() if isinstance(data, Mapping) else data
        merged: dict = {}
        for key, m in items:
            if not isinstance(m, int) or m < 0:
                raise ValidationError(f"multiplicity must be a nonnegative integer, got {m!r}")
            if m:
                merged[key] = merged.get(key, 0) + m
        self._data = dict(sorted(merged.items()))

    def __getitem__(self, key) -> int:
        return self._data.get(key, 0)

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data

    def __eq__(self, other) -> bool:
        if isinstance(other, FusionVector):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __add__(self, other: "FusionVector") -> "FusionVector":
        return FusionVector(list(self._data.items()) + list(other.items()))

    def scale(self, m: int) -> "FusionVector":
        return FusionVector({k: m * v for k, v in self._data.items()})

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self._data.items())
        return f"FusionVector({{{body}}})"


def sl2_fusion(k: int, i: int, j: int) -> FusionVector:
    """``L(k,i) x L(k,j)``: each ``r = |i-j|, |i-j|+2, ..., min(i+j, 2k-i-j)`` once."""
    _check_level(k)
    for x in (i, j):
        if not isinstance(x, int) or not 0 <= x <= k:
            raise ValidationError(f"sl(2) label {x!r} outside 0..{k}")
    return FusionVector({DominantWeight((r,)): 1 for r in range(abs(i - j), min(i + j, 2 * k - i - j) + 1, 2)})


@lru_cache(maxsize=None)
def sl2_fusion_table(k: int) -> dict[tuple[DominantWeight, DominantWeight], FusionVector]:
    """The whole level-k table, keyed by ordered pairs of weights."""
    _check_level(k)
    return {
        (DominantWeight((i,)), DominantWeight((j,))): sl2_fusion(k, i, j) for i in range(k + 1) for j in range(k + 1)
    }


def fusion_table_json(k: int, classes: Sequence, table: Mapping) -> dict:
    """``{level, classes, table: [[a, b, [mult per class]]]}`` for any class labels."""
    idx = [str(c) for c in classes]
    rows = []
    for a in classes:
        for b in classes:
            vec = table[(a, b)]
            rows.append([str(a), str(b), [vec[c] for c in classes]])
    return {"level": k, "classes": idx, "table": rows}


# --- simple currents ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class SimpleCurrentElement:
    """The class ``[L(k, k lambda_node)]`` (``node == 0`` is the vacuum)."""

    node: int
    coords: tuple[int, ...] = field(compare=False)

    def __str__(self) -> str:
        return "1" if self.node == 0 else f"J{self.node}"


def _extended_labels(rs: RootSystem, k: int, lam: Sequence[int]) -> tuple[int, ...]:
    level0 = k - theta_pairing(rs, lam)
    assert level0.denominator == 1
    return (int(level0),) + tuple(lam)


def _reduce_to_alcove(rs: RootSystem, k: int, lam: list[int]) -> tuple[int, ...]:
    """Move a weight into the level-k alcove with the (unshifted) affine Weyl group."""
    n = rs.rank
    theta_lab = root_labels(rs, rs.marks)
    simple_lab = [root_labels(rs, tuple(int(i == j) for j in range(n))) for i in range(n)]
    for _ in range(100000):
        for i in range(n):
            if lam[i] < 0:
                c = lam[i]
                lam = [x - c * a for x, a in zip(lam, simple_lab[i])]
                break
        else:
            excess = theta_pairing(rs, lam) - k
            if excess <= 0:
                return tuple(lam)
            assert excess.denominator == 1
            lam = [x - int(excess) * t for x, t in zip(lam, theta_lab)]
    raise AssertionError("alcove reduction did not terminate")


@lru_cache(maxsize=None)
def _affine_permutation(lt: LieType, node: int) -> tuple[int, ...]:
    rs = build_root_system(lt)
    n = rs.rank
    if node == 0:
        return tuple(range(n + 1))
    # A generic weight: distinct extended labels 1..n+1.
    ext = tuple(range(1, n + 2))
    level = ext[0] + theta_pairing(rs, ext[1:])
    assert level.denominator == 1
    level = int(level)
    shifted = [x + level * int(i + 1 == node) for i, x in enumerate(ext[1:])]
    image = _extended_labels(rs, level, _reduce_to_alcove(rs, level, shifted))
    perm = [image.index(ext[a]) for a in range(n + 1)]
    # The result must be a symmetry of the extended Dynkin diagram.
    comarks = (Fraction(1),) + rs.comarks
    aff = _affine_cartan(rs)
    for a in range(n + 1):
        if comarks[a] != comarks[perm[a]]:
            raise AssertionError(f"current {node} of {lt} does not preserve comarks")
        for b in range(n + 1):
            if aff[a][b] != aff[perm[a]][perm[b]]:
                raise AssertionError(f"current {node} of {lt} is not a diagram automorphism")
    return tuple(perm)


def _affine_cartan(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    # alpha_0 = delta - theta with theta^vee = theta, since theta has norm 2.
    theta_lab = root_labels(rs, rs.marks)
    row0 = [2] + [-int(t * nrm / 2) for t, nrm in zip(theta_lab, rs.root_norms)]
    rows = [row0] + [[-theta_lab[j]] + list(rs.cartan[j]) for j in range(rs.rank)]
    return tuple(tuple(r) for r in rows)


def affine_permutation(rs: RootSystem, node: int) -> tuple[int, ...]:
    """Permutation of extended node labels ``0..n`` induced by the current at ``node``."""
    if node != 0 and node not in center_group(rs).elements:
        raise ValidationError(f"node {node} of {rs.type} does not carry a simple current")
    return _affine_permutation(rs.type, node)


@dataclass(frozen=True)
class SimpleCurrentGroup:
    rs: RootSystem = field(repr=False)
    level: int
    center: CenterGroup = field(repr=False)
    elements: tuple[SimpleCurrentElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> SimpleCurrentElement:
        return self.elements[0]

    @property
    def generators(self) -> tuple[SimpleCurrentElement, ...]:
        return tuple(self.element(g) for g in self.center.generators)

    def element(self, node: int) -> SimpleCurrentElement:
        for s in self.elements:
            if s.node == node:
                return s
        raise ValidationError(f"node {node} of {self.rs.type} does not carry a simple current")

    def multiply(self, s: SimpleCurrentElement, t: SimpleCurrentElement) -> SimpleCurrentElement:
        return self.element(self.center.add(s.node, t.node))

    def power(self, s: SimpleCurrentElement, m: int) -> SimpleCurrentElement:
        return self.element(self.center.multiple(m, s.node))

    def weight(self, s: SimpleCurrentElement) -> DominantWeight:
        """Highest weight ``k lambda_node`` of the current's module."""
        if s.node == 0:
            return DominantWeight.zero(self.rs.rank)
        return DominantWeight.fundamental(self.rs.rank, s.node, self.level)

    def to_json(self) -> dict:
        return {
            "type": str(self.rs.type),
            "level": self.level,
            "order": self.order,
            "invariants": list(self.center.invariants),
            "generators": [self._describe(g) for g in self.generators],
            "elements": [self._describe(s) for s in self.elements],
            "products": [
                [str(s), str(t), str(self.multiply(s, t))] for s in self.elements for t in self.elements
            ],
        }

    def _describe(self, s: SimpleCurrentElement) -> dict:
        return {
            "name": str(s),
            "node": s.node,
            "weight": list(self.weight(s).labels),
            "coords": list(s.coords),
            "order": self.center.element_order(s.node),
            "conformal_weight": conformal_weight(self.rs, self.level, self.weight(s)),
            "permutation": list(affine_permutation(self.rs, s.node)),
        }


def simple_current_group(rs: RootSystem, k: int) -> SimpleCurrentGroup:
    _check_level(k)
    cg = center_group(rs)
    elems = tuple(SimpleCurrentElement(j, c) for j, c in zip(cg.elements, cg.coords))
    return SimpleCurrentGroup(rs, k, cg, elems)


def _node_of(s) -> int:
    return s.node if isinstance(s, SimpleCurrentElement) else int(s)


def current_action(rs: RootSystem, k: int, s, lam) -> DominantWeight:
    """Weight of ``[L(k, lambda)] * [s]``; ``s`` is an element or its node index."""
    _check_level(k)
    lam = _check_in_level(rs, k, lam)
    perm = affine_permutation(rs, _node_of(s))
    return _permute(rs.type, k, perm, lam.labels)


@lru_cache(maxsize=65536)
def _permute(lt: LieType, k: int, perm: tuple[int, ...], labels: tuple[int, ...]) -> DominantWeight:
    ext = _extended_labels(build_root_system(lt), k, labels)
    out = [0] * len(ext)
    for a, x in enumerate(ext):
        out[perm[a]] = x
    return DominantWeight(tuple(out[1:]))


def current_action_by_coweight(rs: RootSystem, k: int, h: CoweightVector, lam) -> DominantWeight:
    """Act by the current attached to the coset ``h + Q^vee``."""
    return current_action(rs, k, center_group(rs).class_of(h), lam)
