"""Construction data of the extended algebras ``A_k(g) = V[L]``.

``V`` is the level-k vacuum module tensored with a Heisenberg algebra on
``h'``; ``L`` is generated by ``alpha_a = h''_a + alpha'_a`` with ``h''_a`` a
fundamental coweight attached to a simple current and ``alpha'_a`` the a-th
basis vector of ``h'``.  The form on ``L`` is
``B(alpha_a, alpha_b) = k <h''_a, h''_b> + <alpha'_a, alpha'_b>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor, isqrt
from typing import Sequence

from . import _linalg as la
from .errors import HypothesisFailure, NoSimpleCurrentError, NotSpecifiedError, ValidationError
from .fusion import conformal_weight, current_action
from .lattice import IntegralLattice, validate
from .rootdata import (
    CoweightVector,
    DominantWeight,
    RootSystem,
    bilinear,
    center_group,
    fundamental_coweight,
    weyl_dim,
)

__all__ = [
    "ExtGenerator",
    "ExtensionData",
    "HypothesisReport",
    "ParityReport",
    "GeneratingSpace",
    "GeneratorSpec",
    "build_extension",
    "check_hypotheses",
    "parity",
    "component_lowest_weight",
    "component_weight",
    "components_up_to",
    "generator_spec",
]


@dataclass(frozen=True)
class ExtGenerator:
    node: int
    coweight: CoweightVector
    heis_index: int | None


@dataclass(frozen=True)
class ExtensionData:
    rs: RootSystem = field(repr=False)
    level: int
    heis_dim: int
    heis_gram: la.Matrix
    generators: tuple[ExtGenerator, ...]
    big_lattice: IntegralLattice
    # gamma = (j / label_scale) alpha' is the integer labelling used for I/O.
    label_scale: int | None = None

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def component_period(self) -> int | None:
        """With no Heisenberg part, ``m`` and ``m + period`` give the same component."""
        if self.heis_dim:
            return None
        cg = center_group(self.rs)
        return cg.element_order(self.generators[0].node)

    def component_class(self, m: Sequence[int]) -> int:
        """Center-group element of ``sum_a m_a h''_a`` (a node index, 0 for trivial)."""
        cg = center_group(self.rs)
        exps = [0] * len(cg.invariants)
        for g, c in zip(self.generators, m):
            for i, e in enumerate(cg.coords_of(g.node)):
                exps[i] += c * e
        return cg.element_of(exps)

    def heis_vector(self, m: Sequence) -> tuple[Fraction, ...]:
        """Coordinates of ``sum_a m_a alpha'_a`` in the ``alpha'`` basis."""
        out = [Fraction(0)] * self.heis_dim
        for g, c in zip(self.generators, m):
            if g.heis_index is not None:
                out[g.heis_index] += c
        return tuple(out)

    def coweight_part(self, m: Sequence[int]) -> CoweightVector:
        h = CoweightVector((0,) * self.rs.rank)
        for g, c in zip(self.generators, m):
            h = h + c * g.coweight
        return h

    def heis_norm(self, gamma: Sequence) -> Fraction:
        if not self.heis_dim:
            return Fraction(0)
        return la.quadratic(self.heis_gram, gamma)

    def to_json(self) -> dict:
        return {
            "type": str(self.rs.type),
            "level": self.level,
            "heis_dim": self.heis_dim,
            "heis_gram": [list(r) for r in self.heis_gram],
            "generators": [
                {
                    "coweight_node": g.node,
                    "coweight": list(g.coweight.coords),
                    "heis_index": g.heis_index,
                }
                for g in self.generators
            ],
            "lattice": self.big_lattice.to_json(),
            "label_scale": self.label_scale,
        }


def _standard_data(rs: RootSystem, k: int):
    """``(heis_gram, [(node, heis index)], label_scale)`` for each supported type."""
    fam, n = rs.type.family, rs.rank
    F = Fraction
    if fam == "A":
        return [[F(k, n + 1)]], [(1, 0)], k
    if fam == "D" and n % 2:
        return [[F(3 * n * k, 4)]], [(n, 0)], 3 * n * k
    if fam == "D":
        d, o = F(3 * n * k, 4), F(k * (n - 2), 4)
        return [[d, o], [o, d]], [(n - 1, 0), (n, 1)], None
    if fam == "E" and n == 6:
        return [[F(2 * k, 3)]], [(1, 0)], 2 * k
    if fam == "E" and n == 7:
        return [[F(k, 2)]], [(6, 0)], k
    if fam == "C":
        return [[F(n * k, 2)]], [(n, 0)], n * k
    if fam == "B":
        return [], [(1, None)], None
    raise NoSimpleCurrentError(f"{rs.type} has no nontrivial simple current")


def build_extension(rs: RootSystem, k: int, heis_gram: Sequence[Sequence] | None = None) -> ExtensionData:
    """Standard extension data; ``heis_gram`` overrides the ``<alpha', alpha'>`` choice."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValidationError(f"level must be a positive integer, got {k!r}")
    gram, gens, scale = _standard_data(rs, k)
    if heis_gram is not None:
        gram = la.to_matrix(heis_gram)
        if len(gram) != len(_standard_data(rs, k)[0]) or any(len(r) != len(gram) for r in gram):
            raise ValidationError("heis_gram override has the wrong shape")
        scale = None
    gram = la.to_matrix(gram)
    generators = tuple(ExtGenerator(node, fundamental_coweight(rs, node), idx) for node, idx in gens)
    r = len(generators)
    big = [
        [
            k * bilinear(rs, generators[a].coweight, generators[b].coweight)
            + (
                gram[generators[a].heis_index][generators[b].heis_index]
                if generators[a].heis_index is not None
                else 0
            )
            for b in range(r)
        ]
        for a in range(r)
    ]
    names = tuple(f"alpha{a + 1}" for a in range(r)) if r > 1 else ("alpha",)
    return ExtensionData(rs, k, len(gram), gram, generators, IntegralLattice(names, la.to_matrix(big)), scale)


@dataclass(frozen=True)
class HypothesisReport:
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.checks if not ok)

    def require(self) -> None:
        if not self.passed:
            raise HypothesisFailure(self.failures)

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": {name: ok for name, ok in self.checks}}


def check_hypotheses(ext: ExtensionData) -> HypothesisReport:
    rep = validate(ext.big_lattice)
    checks = [
        ("B integral", rep.integral),
        ("L'' in coweight lattice", all(g.coweight.in_coweight_lattice(ext.rs) for g in ext.generators)),
    ]
    if ext.heis_dim:
        pd = la.is_positive_definite(ext.heis_gram)
        checks.append(("L' positive definite", pd))
        # alpha -> alpha' is injective iff the alpha'_a are independent.
        indices = [g.heis_index for g in ext.generators]
        distinct = None not in indices and len(set(indices)) == len(indices)
        checks.append(("projection L -> L' injective", distinct and la.rank(ext.heis_gram) == len(indices)))
        checks.append(("heis_dim = rank L'", la.rank(ext.heis_gram) == ext.heis_dim))
    return HypothesisReport(tuple(checks))


def _require(ext: ExtensionData) -> None:
    check_hypotheses(ext).require()


@dataclass(frozen=True)
class ParityReport:
    is_super: bool
    even_sublattice_index: int
    even_sublattice_basis: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "is_super": self.is_super,
            "even_sublattice_index": self.even_sublattice_index,
            "even_sublattice_basis": [list(v) for v in self.even_sublattice_basis],
        }


def parity(ext: ExtensionData) -> ParityReport:
    _require(ext)
    rep = validate(ext.big_lattice)
    return ParityReport(not rep.even, rep.even_sublattice_index, rep.even_sublattice_basis)


def _int_vector(ext: ExtensionData, m: Sequence) -> tuple[int, ...]:
    if len(m) != ext.rank:
        raise ValidationError(f"expected {ext.rank} lattice coordinates, got {len(m)}")
    if any(Fraction(x).denominator != 1 for x in m):
        raise ValidationError("lattice coordinates must be integers")
    return tuple(int(x) for x in m)


def component_weight(ext: ExtensionData, m: Sequence[int]) -> DominantWeight:
    """Highest weight of the affine factor of the component ``V^(sum m_a alpha_a)``."""
    m = _int_vector(ext, m)
    return current_action(ext.rs, ext.level, ext.component_class(m), DominantWeight.zero(ext.rs.rank))


def component_lowest_weight(ext: ExtensionData, m: Sequence[int]) -> Fraction:
    """Lowest ``L(0)``-weight of ``V^(sum m_a alpha_a)``."""
    m = _int_vector(ext, m)
    lam = component_weight(ext, m)
    return conformal_weight(ext.rs, ext.level, lam) + ext.heis_norm(ext.heis_vector(m)) / 2


def components_up_to(ext: ExtensionData, bound) -> list[tuple[tuple[int, ...], Fraction]]:
    """Every component (up to identification) with lowest weight ``<= bound``.

    Sorted by (weight, m).  With a Heisenberg part the search box comes from
    ``|m_a|^2 <= 2 bound (G'^-1)_aa`` since the affine part has weight >= 0.
    """
    bound = Fraction(bound)
    period = ext.component_period
    if period is not None:
        ranges = [range(period)] * ext.rank
    else:
        inv = la.inverse(ext.heis_gram)
        ranges = []
        for g in ext.generators:
            r = isqrt(floor(2 * bound * inv[g.heis_index][g.heis_index])) if bound >= 0 else -1
            ranges.append(range(-r, r + 1))
    out = []
    for m in product(*ranges):
        w = component_lowest_weight(ext, m)
        if w <= bound:
            out.append((tuple(m), w))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


@dataclass(frozen=True)
class GeneratingSpace:
    m: tuple[int, ...]
    weight: DominantWeight
    heis: tuple[Fraction, ...]
    lowest_weight: Fraction
    dim: int

    @property
    def label(self) -> str:
        lam = ",".join(map(str, self.weight.labels))
        mom = " + ".join(f"{c}*a'{i + 1}" for i, c in enumerate(self.heis) if c) or "0"
        return f"L({lam}) x e^({mom})"

    def to_json(self) -> dict:
        return {
            "m": list(self.m),
            "label": self.label,
            "weight": list(self.weight.labels),
            "heis": list(self.heis),
            "lowest_weight": self.lowest_weight,
            "dim": self.dim,
        }


@dataclass(frozen=True)
class GeneratorSpec:
    spaces: tuple[GeneratingSpace, ...]
    locality_order: int

    def to_json(self) -> dict:
        return {"spaces": [s.to_json() for s in self.spaces], "locality_order": self.locality_order}


def generator_spec(ext: ExtensionData) -> GeneratorSpec:
    """Generating components and the order ``N`` of ``(z1-z2)^N`` locality among them.

    The generating set is every nonzero component whose lowest weight does not
    exceed that of the components ``+-alpha_a``.  For fields ``u, v`` of lowest
    weights ``wu, wv`` landing in a component of lowest weight ``w``, the
    singular part of ``Y(u,z)v`` has order at most ``wu + wv - w``.
    """
    if ext.rs.type.family == "D" and ext.rs.rank % 2 == 0:
        raise NotSpecifiedError("generators of the even-rank D extension are not specified")
    _require(ext)
    top = Fraction(0)
    for a in range(ext.rank):
        for s in (1, -1):
            m = tuple(s * int(b == a) for b in range(ext.rank))
            top = max(top, component_lowest_weight(ext, m))
    spaces = []
    for m, w in components_up_to(ext, top):
        if not any(m):
            continue
        lam = component_weight(ext, m)
        spaces.append(GeneratingSpace(m, lam, ext.heis_vector(m), w, weyl_dim(ext.rs, lam)))
    period = ext.component_period
    order = 0
    for u in spaces:
        for v in spaces:
            tot = tuple(x + y for x, y in zip(u.m, v.m))
            if period is not None:
                tot = tuple(x % period for x in tot)
            sing = u.lowest_weight + v.lowest_weight - component_lowest_weight(ext, tot)
            order = max(order, floor(sing))
    return GeneratorSpec(tuple(spaces), order)

