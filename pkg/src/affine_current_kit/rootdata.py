"""Exact root-system, weight and coweight data for the simple Lie types.

Nodes are numbered as in Kac's tables.  For the E series that means a chain
``1-2-...`` with the extra node attached to node 3 (E6, E7) or node 5 (E8);
long roots have norm 2.

Conventions used throughout the package:

* ``cartan[i][j] = <alpha_i^vee, alpha_j>``;
* a weight is given by its Dynkin labels ``lambda(alpha_i^vee)``;
* a coweight is given by coordinates in the simple-coroot basis.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import prod
from typing import Iterable, Sequence

from . import _linalg as la
from .errors import InvalidTypeError

__all__ = [
    "LieType",
    "RootSystem",
    "CoweightVector",
    "DominantWeight",
    "CenterGroup",
    "build_root_system",
    "root_system",
    "fundamental_coweight",
    "bilinear",
    "weight_form",
    "cominimal_indices",
    "center_group",
    "weyl_dim",
    "theta_pairing",
    "root_labels",
    "all_types",
]

_RANK_RULES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family
        if fam not in "ABCDEFG" or len(fam) != 1:
            raise InvalidTypeError(f"unknown Lie family {fam!r}")
        n = self.rank
        if not isinstance(n, int) or n < 1:
            raise InvalidTypeError(f"rank must be a positive integer, got {n!r}")
        ok = {
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(fam, n >= _RANK_RULES.get(fam, (1, None))[0])
        if not ok:
            raise InvalidTypeError(f"invalid rank {n} for family {fam}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise InvalidTypeError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _diagram(lt: LieType):
    """Root norms and the nonzero off-diagonal inner products (alpha_i, alpha_j)."""
    n = lt.rank
    half = Fraction(1, 2)
    chain = [(i, i + 1, Fraction(-1)) for i in range(1, n)]
    if lt.family == "A":
        return [Fraction(2)] * n, chain
    if lt.family == "B":
        return [Fraction(2)] * (n - 1) + [Fraction(1)], chain
    if lt.family == "C":
        edges = [(i, i + 1, -half) for i in range(1, n - 1)] + [(n - 1, n, Fraction(-1))]
        return [Fraction(1)] * (n - 1) + [Fraction(2)], edges
    if lt.family == "D":
        edges = [(i, i + 1, Fraction(-1)) for i in range(1, n - 1)] + [(n - 2, n, Fraction(-1))]
        return [Fraction(2)] * n, edges
    if lt.family == "E":
        branch = {6: 3, 7: 3, 8: 5}[n]
        edges = [(i, i + 1, Fraction(-1)) for i in range(1, n - 1)] + [(branch, n, Fraction(-1))]
        return [Fraction(2)] * n, edges
    if lt.family == "F":
        return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)], [
            (1, 2, Fraction(-1)),
            (2, 3, Fraction(-1)),
            (3, 4, -half),
        ]
    # G2: node 1 long, node 2 short.
    return [Fraction(2), Fraction(2, 3)], [(1, 2, Fraction(-1))]


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        ordered.extend(sorted(nxt))
        layer = nxt
    return tuple(ordered)


@dataclass(frozen=True)
class RootSystem:
    type: LieType
    cartan: tuple[tuple[int, ...], ...]
    root_norms: tuple[Fraction, ...]
    marks: tuple[int, ...]
    dual_coxeter: int
    weight_coeffs: la.Matrix
    inner: la.Matrix = field(repr=False, compare=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    coroot_gram: la.Matrix = field(repr=False, compare=False)
    weight_gram: la.Matrix = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def comarks(self) -> tuple[Fraction, ...]:
        return tuple(a * nrm / 2 for a, nrm in zip(self.marks, self.root_norms))

    @cached_property
    def _scaled_comarks(self) -> tuple[int, tuple[int, ...]]:
        # integer numerators over a common denominator, for fast pairings
        den = la.common_denominator(self.comarks)
        return den, tuple(int(c * den) for c in self.comarks)

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.marks

    def check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise InvalidTypeError(f"node index {i!r} out of range 1..{self.rank} for {self.type}")

    def to_json(self) -> dict:
        return {
            "family": self.type.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "marks": list(self.marks),
            "dual_coxeter": self.dual_coxeter,
            "root_norms": list(self.root_norms),
            "weight_coeffs": [list(r) for r in self.weight_coeffs],
        }


@lru_cache(maxsize=None)
def build_root_system(lt: LieType) -> RootSystem:
    norms, edges = _diagram(lt)
    n = lt.rank
    inner = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        inner[i][i] = norms[i]
    for i, j, v in edges:
        inner[i - 1][j - 1] = inner[j - 1][i - 1] = v
    inner = la.to_matrix(inner)
    cartan = tuple(tuple(int(2 * inner[i][j] / inner[i][i]) for j in range(n)) for i in range(n))
    roots = _positive_roots(cartan)
    theta = max(roots, key=sum)
    # lambda_i = sum_j a_ij alpha_j with lambda_i(alpha_j^vee) = delta_ij, i.e. a = (A^T)^{-1}.
    weight_coeffs = la.inverse(la.transpose(la.to_matrix(cartan)))
    coroot_gram = la.to_matrix(
        [[4 * inner[i][j] / (inner[i][i] * inner[j][j]) for j in range(n)] for i in range(n)]
    )
    weight_gram = la.to_matrix(
        [[weight_coeffs[j][i] * inner[i][i] / 2 for j in range(n)] for i in range(n)]
    )
    comarks = [a * nrm / 2 for a, nrm in zip(theta, norms)]
    h_dual = 1 + sum(comarks)
    assert h_dual.denominator == 1
    return RootSystem(
        type=lt,
        cartan=cartan,
        root_norms=tuple(norms),
        marks=tuple(theta),
        dual_coxeter=int(h_dual),
        weight_coeffs=weight_coeffs,
        inner=inner,
        positive_roots=roots,
        coroot_gram=coroot_gram,
        weight_gram=weight_gram,
    )


def root_system(family: str | LieType, rank: int | None = None) -> RootSystem:
    """Convenience front end: ``root_system("E", 7)`` or ``root_system("E7")``."""
    if isinstance(family, LieType):
        return build_root_system(family)
    if rank is None:
        return build_root_system(LieType.parse(family))
    return build_root_system(LieType(family.upper(), rank))


@dataclass(frozen=True)
class CoweightVector:
    """Element of the Cartan subalgebra, in simple-coroot coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: "CoweightVector") -> "CoweightVector":
        _same_rank(self, other)
        return CoweightVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CoweightVector") -> "CoweightVector":
        _same_rank(self, other)
        return CoweightVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CoweightVector":
        return CoweightVector(tuple(-a for a in self.coords))

    def __rmul__(self, m) -> "CoweightVector":
        return CoweightVector(tuple(m * a for a in self.coords))

    def root_pairings(self, rs: RootSystem) -> tuple[Fraction, ...]:
        """``alpha_j(h)`` for every simple root."""
        n = rs.rank
        _check_len(self.coords, n)
        return tuple(sum((self.coords[i] * rs.cartan[i][j] for i in range(n)), Fraction(0)) for j in range(n))

    def weight_pairing(self, labels: Sequence[int]) -> Fraction:
        """``lambda(h)`` for the weight with the given Dynkin labels."""
        _check_len(labels, len(self.coords))
        den, nums = self._scaled
        return Fraction(sum(c * l for c, l in zip(nums, labels)), den)

    @cached_property
    def _scaled(self) -> tuple[int, tuple[int, ...]]:
        den = la.common_denominator(self.coords)
        return den, tuple(int(c * den) for c in self.coords)

    def in_coweight_lattice(self, rs: RootSystem) -> bool:
        return la.is_integral(self.root_pairings(rs))

    def in_coroot_lattice(self) -> bool:
        return la.is_integral(self.coords)


def _check_len(v, n):
    if len(v) != n:
        raise InvalidTypeError(f"rank mismatch: expected length {n}, got {len(v)}")


def _same_rank(x: CoweightVector, y: CoweightVector):
    _check_len(y.coords, len(x.coords))


@dataclass(frozen=True, order=True)
class DominantWeight:
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        if any(not isinstance(x, int) or x < 0 for x in labels):
            raise InvalidTypeError(f"dominant weight labels must be nonnegative integers: {labels}")
        object.__setattr__(self, "labels", labels)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int, scale: int = 1) -> "DominantWeight":
        return cls(tuple(scale * int(j == i) for j in range(1, rank + 1)))


def fundamental_coweight(rs: RootSystem, i: int) -> CoweightVector:
    """``h^(i)`` with ``alpha_j(h^(i)) = delta_ij``; equals ``sum_j a_ji alpha_j^vee``."""
    rs.check_index(i)
    return CoweightVector(tuple(rs.weight_coeffs[j][i - 1] for j in range(rs.rank)))


def bilinear(rs: RootSystem, x: CoweightVector, y: CoweightVector) -> Fraction:
    """Normalized invariant form on the Cartan subalgebra (long roots have norm 2)."""
    _check_len(x.coords, rs.rank)
    _check_len(y.coords, rs.rank)
    return la.quadratic(rs.coroot_gram, x.coords, y.coords)


def weight_form(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    _check_len(lam, rs.rank)
    _check_len(mu, rs.rank)
    return la.quadratic(rs.weight_gram, lam, mu)


def theta_pairing(rs: RootSystem, lam: Sequence[int]) -> Fraction:
    """``<lambda, theta>`` for Dynkin labels ``lam``."""
    den, nums = rs._scaled_comarks
    return Fraction(sum(c * l for c, l in zip(nums, lam)), den)


def cominimal_indices(rs: RootSystem) -> frozenset[int]:
    return frozenset(i + 1 for i, a in enumerate(rs.marks) if a == 1)


def root_labels(rs: RootSystem, root: Sequence[int]) -> tuple[int, ...]:
    """Dynkin labels of the root with simple-root coordinates ``root``."""
    n = rs.rank
    return tuple(sum(rs.cartan[i][j] * root[j] for j in range(n)) for i in range(n))


def _root_norm(rs: RootSystem, root: Sequence[int]) -> Fraction:
    return la.quadratic(rs.inner, root)


def weyl_dim(rs: RootSystem, lam: DominantWeight | Sequence[int]) -> int:
    """Dimension of the irreducible module with highest weight ``lam``."""
    labels = tuple(lam)
    _check_len(labels, rs.rank)
    if any(x < 0 for x in labels):
        raise InvalidTypeError("weyl_dim needs a dominant weight")
    num = Fraction(1)
    for root in rs.positive_roots:
        norm = _root_norm(rs, root)
        # <mu, beta^vee> = sum_i c_i mu_i |alpha_i|^2 / |beta|^2
        rho_pair = sum((c * nrm for c, nrm in zip(root, rs.root_norms)), Fraction(0)) / norm
        lam_pair = sum((c * l * nrm for c, l, nrm in zip(root, labels, rs.root_norms)), Fraction(0)) / norm
        num *= (lam_pair + rho_pair) / rho_pair
    assert num.denominator == 1
    return int(num)


# Generators of P^vee/Q^vee in the conventional presentation, with invariant factors.
def _center_presentation(lt: LieType):
    n = lt.rank
    fam = lt.family
    if fam == "A":
        return (1,), (n + 1,)
    if fam == "B":
        return (1,), (2,)
    if fam == "C":
        return (n,), (2,)
    if fam == "D":
        return ((n,), (4,)) if n % 2 else ((n - 1, n), (2, 2))
    if lt == LieType("E", 6):
        return (1,), (3,)
    if lt == LieType("E", 7):
        return (6,), (2,)
    return (), ()


@dataclass(frozen=True)
class CenterGroup:
    """Presentation of the finite abelian group ``P^vee / Q^vee``.

    Elements are named by the cominimal node whose coweight represents the coset
    (``0`` is the identity).  ``coords[j]`` gives the exponents of ``h^(j)`` in
    terms of the generators.
    """

    root_system: RootSystem = field(repr=False)
    generators: tuple[int, ...]
    invariants: tuple[int, ...]
    elements: tuple[int, ...]
    coords: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return prod(self.invariants)

    def coords_of(self, j: int) -> tuple[int, ...]:
        return self.coords[self.elements.index(j)]

    def element_of(self, exps: Sequence[int]) -> int:
        red = tuple(e % m for e, m in zip(exps, self.invariants))
        return self.elements[self.coords.index(red)]

    @cached_property
    def _by_residue(self) -> dict[tuple[Fraction, ...], int]:
        # h + Q^vee is determined by the coroot coordinates of h mod 1.
        rs = self.root_system
        out = {}
        for j in self.elements:
            rep = fundamental_coweight(rs, j) if j else CoweightVector((0,) * rs.rank)
            out[tuple(x % 1 for x in rep.coords)] = j
        return out

    def class_of(self, h: CoweightVector) -> int:
        """Coset representative index of a coweight-lattice element."""
        if not h.in_coweight_lattice(self.root_system):
            raise InvalidTypeError(f"{h} is not in the coweight lattice")
        try:
            return self._by_residue[tuple(x % 1 for x in h.coords)]
        except KeyError:
            raise AssertionError("coset representatives do not cover P^vee/Q^vee") from None

    def add(self, i: int, j: int) -> int:
        ci, cj = self.coords_of(i), self.coords_of(j)
        return self.element_of([a + b for a, b in zip(ci, cj)])

    def multiple(self, m: int, j: int) -> int:
        return self.element_of([m * a for a in self.coords_of(j)])

    def inverse(self, j: int) -> int:
        return self.multiple(-1, j)

    def element_order(self, j: int) -> int:
        m = 1
        while self.multiple(m, j) != 0:
            m += 1
        return m

    def relations(self) -> list[tuple[dict[int, int], int]]:
        """Each non-generator element written as a combination of generators."""
        out = []
        for j, c in zip(self.elements, self.coords):
            if j == 0 or j in self.generators:
                continue
            out.append(({g: e for g, e in zip(self.generators, c) if e}, j))
        for g, m in zip(self.generators, self.invariants):
            out.append(({g: m}, 0))
        return out

    def to_json(self) -> dict:
        return {
            "type": str(self.root_system.type),
            "order": self.order,
            "invariants": list(self.invariants),
            "generators": list(self.generators),
            "elements": [{"index": j, "coords": list(c)} for j, c in zip(self.elements, self.coords)],
            "relations": [
                {"lhs": {str(g): e for g, e in sorted(lhs.items())}, "rhs": rhs} for lhs, rhs in self.relations()
            ],
        }


@lru_cache(maxsize=None)
def _center_group(lt: LieType) -> CenterGroup:
    rs = build_root_system(lt)
    gens, invs = _center_presentation(lt)
    reps = (0,) + tuple(sorted(cominimal_indices(rs)))
    zero = CoweightVector((0,) * rs.rank)
    gen_vecs = [fundamental_coweight(rs, g) for g in gens]
    coords: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(m) for m in invs)):
        h = zero
        for e, v in zip(exps, gen_vecs):
            h = h + e * v
        for j in reps:
            rep = fundamental_coweight(rs, j) if j else zero
            if (h - rep).in_coroot_lattice():
                if j in coords:
                    raise AssertionError(f"presentation of P/Q for {lt} is not faithful")
                coords[j] = tuple(exps)
                break
        else:
            raise AssertionError(f"coweight combination {exps} not represented for {lt}")
    if len(coords) != len(reps):
        raise AssertionError(f"cominimal nodes do not exhaust P/Q for {lt}")
    return CenterGroup(
        root_system=rs,
        generators=gens,
        invariants=invs,
        elements=reps,
        coords=tuple(coords[j] for j in reps),
    )


def center_group(rs: RootSystem) -> CenterGroup:
    return _center_group(rs.type)


def all_types(max_rank: int = 8) -> Iterable[LieType]:
    """Every valid type of rank at most ``max_rank`` (A..G)."""
    for fam in "ABCD":
        lo = _RANK_RULES[fam][0]
        for n in range(lo, max_rank + 1):
            yield LieType(fam, n)
    for n in (6, 7, 8):
        if n <= max_rank:
            yield LieType("E", n)
    if max_rank >= 4:
        yield LieType("F", 4)
    yield LieType("G", 2)
