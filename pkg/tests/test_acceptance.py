"""The twelve acceptance criteria, all checked with exact arithmetic.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""
from fractions import Fraction
from itertools import product
import random

import numpy as np
import pytest

from affine_current_kit.extension import (
    build_extension,
    component_lowest_weight,
    parity,
)
from affine_current_kit.fusion import (
    current_action,
    level_weights,
    simple_current_group,
    sl2_fusion,
    sl2_fusion_table,
)
from affine_current_kit.lattice import IntegralLattice, commutator_sign, epsilon, epsilon_table
from affine_current_kit.modrep import (
    classify,
    ext_fusion_sl2,
    from_integer_label,
    fusion_lift,
    sigma_order,
    verlinde_quotient,
)
from affine_current_kit.qchar import component_sum_char, ext_module_char, weight_one_dim
from affine_current_kit.rootdata import (
    DominantWeight,
    bilinear,
    center_group,
    fundamental_coweight,
    root_system,
)

import oracles

F = Fraction


def coroot_coords(rs, i):
    """h^(i) in the simple-coroot basis, from the inverse Cartan matrix."""
    return oracles.inverse(rs.cartan)[i - 1]


def coweight_norm(rs, i):
    c = coroot_coords(rs, i)
    s = rs.inner
    n = rs.rank
    return sum(c[a] * c[b] * 4 * s[a][b] / (s[a][a] * s[b][b]) for a in range(n) for b in range(n))


def test_criterion_01_coweight_norms():
    cases = []
    for n in range(1, 7):
        cases += [(f"A{n}", i, F(i * (n + 1 - i), n + 1)) for i in range(1, n + 1)]
    for n in range(3, 9):
        cases += [(f"D{n}", n - 1, F(n, 4)), (f"D{n}", n, F(n, 4))]
    cases += [("E6", 1, F(4, 3)), ("E6", 5, F(4, 3)), ("E7", 6, F(3, 2))]
    for n in range(2, 9):
        cases += [(f"B{n}", 1, F(1)), (f"C{n}", n, F(n, 2))]
    for name, i, expected in cases:
        rs = root_system(name)
        h = fundamental_coweight(rs, i)
        assert bilinear(rs, h, h) == expected, (name, i)
        assert coweight_norm(rs, i) == expected, (name, i)


def _in_coroot_lattice(rs, combo):
    inv = oracles.inverse(rs.cartan)
    coords = [sum(c * inv[i - 1][j] for i, c in combo.items()) for j in range(rs.rank)]
    return all(x.denominator == 1 for x in coords)


def test_criterion_02_center_groups():
    expected = {"A": None, "B": 2, "C": 2, "D": 4}
    for n in range(1, 9):
        assert center_group(root_system(f"A{n}")).order == n + 1
    for fam in "BCD":
        for n in range(3 if fam == "D" else 2, 9):
            assert center_group(root_system(f"{fam}{n}")).order == expected[fam], (fam, n)
    for name, order in (("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)):
        assert center_group(root_system(name)).order == order
    assert center_group(root_system("D5")).invariants == (4,)
    assert center_group(root_system("D6")).invariants == (2, 2)
    # Generator relations among coweights, modulo the coroot lattice.
    d5, d6, e6, e7 = (root_system(x) for x in ("D5", "D6", "E6", "E7"))
    assert _in_coroot_lattice(d5, {5: 2, 1: -1})
    assert _in_coroot_lattice(d5, {5: 3, 4: -1})
    assert _in_coroot_lattice(d5, {5: 4})
    assert not _in_coroot_lattice(d5, {5: 2})
    assert _in_coroot_lattice(d6, {5: 1, 6: 1, 1: -1})
    for i in (1, 5, 6):
        assert _in_coroot_lattice(d6, {i: 2})
        assert not _in_coroot_lattice(d6, {i: 1})
    assert _in_coroot_lattice(e6, {1: 2, 5: -1})
    assert _in_coroot_lattice(e6, {1: 3})
    assert _in_coroot_lattice(e7, {6: 2})
    assert not _in_coroot_lattice(e7, {6: 1})
    # The group structure the package reports agrees.
    cg = center_group(d5)
    assert cg.multiple(2, 5) == 1 and cg.multiple(3, 5) == 4 and cg.multiple(4, 5) == 0


def fusion_relations(name):
    """Products of simple currents by node index (0 is the vacuum)."""
    fam, n = name[0], int(name[1:])
    if fam == "A":
        return [((i, j), (i + j) % (n + 1)) for i in range(n + 1) for j in range(n + 1)]
    if fam == "B":
        return [((1, 1), 0)]
    if fam == "C":
        return [((n, n), 0)]
    if fam == "D" and n % 2:
        return [((n, n), 1), ((n, n, n), n - 1), ((n, n, n, n), 0)]
    if fam == "D":
        return [((1, 1), 0), ((n - 1, n - 1), 0), ((n, n), 0), ((n - 1, n), 1)]
    if name == "E6":
        return [((1, 1), 5), ((1, 1, 1), 0)]
    if name == "E7":
        return [((6, 6), 0)]
    return []


def all_current_types():
    names = [f"A{n}" for n in range(1, 9)]
    names += [f"B{n}" for n in range(2, 9)] + [f"C{n}" for n in range(2, 9)]
    names += [f"D{n}" for n in range(3, 9)] + ["E6", "E7"]
    return names


def test_criterion_03_simple_current_fusion():
    for name in all_current_types():
        rs = root_system(name)
        relations = fusion_relations(name)
        assert relations
        for k in (1, 2):
            grp = simple_current_group(rs, k)
            for factors, result in relations:
                acc = grp.identity
                for f in factors:
                    acc = grp.multiply(acc, grp.element(f))
                assert acc == grp.element(result), (name, factors)
                # The same product through the action on integrable weights.
                lam = grp.weight(grp.identity)
                for f in reversed(factors):
                    lam = current_action(rs, k, f, lam)
                assert lam == grp.weight(grp.element(result)), (name, k, factors)


def test_criterion_04_sl2_fusion_oracle():
    for k in range(1, 6):
        for i in range(k + 1):
            for j in range(k + 1):
                got = sl2_fusion(k, i, j)
                for l in range(k + 1):
                    assert got.get(DominantWeight((l,)), 0) == oracles.verlinde_sl2(k, i, j, l), (k, i, j, l)
    for k in range(1, 7):
        table = sl2_fusion_table(k)
        weights = list(level_weights(root_system("A1"), k))

        def times(vec, b):
            out = {}
            for a, m in vec.items():
                for c, n in table[(a, b)].items():
                    out[c] = out.get(c, 0) + m * n
            return {c: m for c, m in out.items() if m}

        for a, b, c in product(weights, repeat=3):
            left = times(dict(table[(a, b)]), c)
            bc = table[(b, c)]
            right = {}
            for d, m in bc.items():
                for e, n in table[(a, d)].items():
                    right[e] = right.get(e, 0) + m * n
            assert left == {e: m for e, m in right.items() if m}, (k, a, b, c)


def test_criterion_05_extension_norms_and_parity():
    for k in range(1, 6):
        for n in range(1, 9):
            assert build_extension(root_system(f"A{n}"), k).big_lattice.gram == ((k,),)
        for n in (3, 5, 7):
            assert build_extension(root_system(f"D{n}"), k).big_lattice.gram == ((n * k,),)
        assert build_extension(root_system("E6"), k).big_lattice.gram == ((2 * k,),)
        assert build_extension(root_system("E7"), k).big_lattice.gram == ((2 * k,),)
        for n in range(2, 9):
            assert build_extension(root_system(f"C{n}"), k).big_lattice.gram == ((n * k,),)
    for k in range(1, 9):
        assert parity(build_extension(root_system("A1"), k)).is_super == (k % 2 == 1)


def test_criterion_06_classification_counts():
    sl2 = root_system("A1")
    for k, count in zip(range(1, 6), (1, 3, 6, 10, 15)):
        assert len(classify(build_extension(sl2, k))) == count
    ext = build_extension(sl2, 2)
    reps = {c.rep for c in classify(ext)}
    assert from_integer_label(ext, (1,), 1) in reps
    tw = sigma_order(ext, (1,), (0,))
    assert not tw.untwisted and tw.order == 2


def test_criterion_07_triple_fusion_agreement():
    for k in range(1, 5):
        ext = build_extension(root_system("A1"), k)
        base = sl2_fusion_table(k)
        classes = classify(ext)
        quotient = verlinde_quotient(ext, base)
        for A in classes:
            for B in classes:
                direct = ext_fusion_sl2(k, A, B)
                assert set(direct) <= set(classes)
                for C in classes:
                    d = direct.get(C, 0)
                    assert d == fusion_lift(ext, base, A, B, C), (k, A, B, C)
                    assert d == quotient[(A, B)].get(C, 0), (k, A, B, C)


def test_criterion_08_free_fermion_identity():
    N = F(13, 2)
    expected = {1: oracles.fermion_product(4, N), 2: oracles.fermion_product(6, N)}
    ext = build_extension(root_system("A1"), 1)
    vac = (DominantWeight((0,)), (F(0),))
    assert ext_module_char(ext, vac, N).as_dict() == expected[1]
    assert component_sum_char(ext, vac, N).as_dict() == expected[1]
    ext = build_extension(root_system("A2"), 1)
    assert component_sum_char(ext, (DominantWeight((0, 0)), (F(0),)), N).as_dict() == expected[2]


def test_criterion_09_character_cross_check():
    for k in range(1, 4):
        ext = build_extension(root_system("A1"), k)
        for label in classify(ext):
            theta = ext_module_char(ext, label, 4)
            comp = component_sum_char(ext, label, 4)
            assert theta == comp, (k, label)
            assert theta.as_dict(), (k, label)


def test_criterion_10_weight_one_dimensions():
    for n, dim in zip(range(1, 5), (10, 21, 36, 55)):
        assert dim == (n + 1) * (2 * n + 3)
        assert weight_one_dim(build_extension(root_system(f"A{n}"), 2)) == dim
    assert weight_one_dim(build_extension(root_system("E6"), 1)) == 133
    assert weight_one_dim(build_extension(root_system("E7"), 1)) == 248


def test_criterion_11_cocycle_laws():
    rng = random.Random(20240611)
    for trial in range(100):
        r = trial % 3 + 1
        g = [[0] * r for _ in range(r)]
        for i in range(r):
            for j in range(i + 1):
                g[i][j] = g[j][i] = rng.randint(-10, 10)
        lat = IntegralLattice.from_gram(g)
        vecs = list(product(range(-5, 6), repeat=r))
        table = np.array(epsilon_table(lat, vecs), dtype=np.int64)
        V = np.array(vecs, dtype=np.int64)
        G = np.array(g, dtype=np.int64)
        B = V @ G @ V.T
        norms = np.diag(B)
        # epsilon(a,b) epsilon(b,a)^-1 = (-1)^(B(a,b) + B(a,a)B(b,b)) on every pair.
        rhs = 1 - 2 * ((B + np.outer(norms, norms)) % 2)
        assert np.array_equal(table * table.T, rhs), g
        # Bimultiplicative on the box: epsilon(a,b) = prod epsilon(e_i,e_j)^(a_i b_j).
        basis = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        E = np.array([[(1 - epsilon(lat, u, w)) // 2 for w in basis] for u in basis], dtype=np.int64)
        assert np.array_equal(table, 1 - 2 * ((V @ E @ V.T) % 2)), g
        # The batch table agrees with the pointwise cocycle.
        for _ in range(50):
            a, b, c = (rng.randrange(len(vecs)) for _ in range(3))
            assert table[a, b] == epsilon(lat, vecs[a], vecs[b])
            assert commutator_sign(lat, vecs[a], vecs[b]) == rhs[a, b]
            s = tuple(x + y for x, y in zip(vecs[a], vecs[b]))
            assert epsilon(lat, s, vecs[c]) == epsilon(lat, vecs[a], vecs[c]) * epsilon(lat, vecs[b], vecs[c])
            s = tuple(x + y for x, y in zip(vecs[b], vecs[c]))
            assert epsilon(lat, vecs[a], s) == epsilon(lat, vecs[a], vecs[b]) * epsilon(lat, vecs[a], vecs[c])


def test_criterion_12_graded_component_bound():
    for n in range(1, 5):
        for k in range(1, 6):
            ext = build_extension(root_system(f"A{n}"), k)
            for m in range(2, 7):
                for s in (m, -m):
                    assert component_lowest_weight(ext, (s,)) >= k, (n, k, s)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
