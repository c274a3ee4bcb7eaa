from fractions import Fraction
from itertools import product

import pytest

from affine_current_kit.errors import MissingFusionData, UnsupportedError, ValidationError
from affine_current_kit.extension import build_extension
from affine_current_kit.fusion import FusionVector, current_action, level_weights, sl2_fusion_table
from affine_current_kit.modrep import (
    ExtModuleLabel,
    ModuleLabel,
    canonical,
    classify,
    ext_fusion_sl2,
    from_integer_label,
    fusion_lift,
    module_lowest_weight,
    shift_module,
    sigma_order,
    to_integer_label,
    untwisted_condition,
    verlinde_quotient,
)
from affine_current_kit.rootdata import DominantWeight, root_system

import oracles

F = Fraction


def ext_of(name, k):
    return build_extension(root_system(name), k)


def test_sl2_counts():
    for k in range(1, 7):
        assert len(classify(ext_of("A1", k))) == k * (k + 1) // 2


@pytest.mark.parametrize(
    "name,k,count",
    [("A2", 1, 1), ("A2", 2, 4), ("E6", 1, 2), ("E7", 1, 1), ("D5", 1, 15), ("D6", 1, 77), ("C2", 1, 3), ("C3", 2, 30)],
)
def test_other_counts(name, k, count):
    ext = ext_of(name, k)
    # one class per (lambda, coset) on average: |P_k| det G'
    assert len(level_weights(ext.rs, k)) * oracles.det(ext.heis_gram) == count
    assert len(classify(ext)) == count


@pytest.mark.parametrize("name,k", [("A1", 3), ("A2", 2), ("D5", 1), ("D6", 1), ("E6", 2), ("C3", 1)])
def test_classes_are_canonical_and_untwisted(name, k):
    ext = ext_of(name, k)
    classes = classify(ext)
    assert len(set(classes)) == len(classes)
    shifts = list(product((-1, 0, 1, 2), repeat=ext.rank))
    for c in classes:
        assert untwisted_condition(ext, c.weight, c.gamma)
        assert all(0 <= x < 1 for x in c.gamma)
        assert canonical(ext, c) == c
        for m in shifts:
            assert canonical(ext, shift_module(ext, c, m)) == c


def test_twisted_detection():
    ext = ext_of("A1", 2)
    info = sigma_order(ext, (1,), (0,))
    assert info.order == 2 and not info.untwisted
    assert sigma_order(ext, (1,), (F(1, 2),)).untwisted
    # B(alpha, gamma) = 3/2 * gamma
    assert sigma_order(ext_of("A1", 3), (0,), (F(1, 9),)).order == 6
    assert sigma_order(ext_of("A1", 3), (0,), (F(2, 9),)).order == 3


def test_integer_labels_round_trip():
    for k in range(1, 5):
        ext = ext_of("A1", k)
        for c in classify(ext):
            lam, j = to_integer_label(ext, c)
            assert from_integer_label(ext, lam, j) == c.rep
    ext = ext_of("A1", 2)
    assert str(ExtModuleLabel(from_integer_label(ext, (1,), 1))) == "W(1;1/2)[L]"
    with pytest.raises(UnsupportedError):
        from_integer_label(ext_of("D6", 1), (0,) * 6, 0)
    with pytest.raises(ValidationError):
        to_integer_label(ext, ((0,), (F(1, 3),)))


def test_module_lowest_weight():
    ext = ext_of("A1", 2)
    assert module_lowest_weight(ext, ((0,), (0,))) == 0
    # W(1;1/2): L(2,1) has weight 3/16 and momentum 1/2 adds <1/2, 1/2>/2 = 1/8
    assert module_lowest_weight(ext, from_integer_label(ext, (1,), 1)) == F(5, 16)
    e6 = ext_of("E6", 1)
    lows = sorted(module_lowest_weight(e6, c) for c in classify(e6))
    assert lows[0] == 0 and lows[1] > 0


def test_ext_fusion_sl2_ring_axioms():
    for k in range(1, 5):
        classes = classify(ext_of("A1", k))
        vac = classes[0]
        assert vac.weight == DominantWeight((0,)) and not any(vac.gamma)
        prods = {(a, b): ext_fusion_sl2(k, a, b) for a in classes for b in classes}
        for a in classes:
            assert prods[(vac, a)] == {a: 1}
            for b in classes:
                assert prods[(a, b)] == prods[(b, a)]
                for c in classes:
                    left, right = {}, {}
                    for d, m in prods[(a, b)].items():
                        for e, n in prods[(d, c)].items():
                            left[e] = left.get(e, 0) + m * n
                    for d, m in prods[(b, c)].items():
                        for e, n in prods[(a, d)].items():
                            right[e] = right.get(e, 0) + m * n
                    assert left == right


def current_table(name, k):
    """Base fusion table when every level-k module is a simple current."""
    rs = root_system(name)
    weights = list(level_weights(rs, k))
    from affine_current_kit.rootdata import center_group

    by_weight = {}
    for node in center_group(rs).elements:
        by_weight[current_action(rs, k, node, DominantWeight.zero(rs.rank))] = node
    assert set(by_weight) == set(weights)
    return {(a, b): FusionVector({current_action(rs, k, by_weight[a], b): 1}) for a in weights for b in weights}


@pytest.mark.parametrize("name", ["A2", "D5", "E6", "D6"])
def test_quotient_of_pointed_level_one(name):
    ext = ext_of(name, 1)
    table = current_table(name, 1)
    q = verlinde_quotient(ext, table)
    classes = classify(ext)
    assert set(q) == {(a, b) for a in classes for b in classes}
    full = len(classes) <= 20
    for i, a in enumerate(classes):
        for j, b in enumerate(classes):
            vec = q[(a, b)]
            assert sum(vec.values()) == 1
            targets = classes if full else list(vec) + [classes[(i + j) % len(classes)]]
            for c in targets:
                assert vec.get(c, 0) == fusion_lift(ext, table, a, b, c)
    if full:
        # Every product is a single class, so associativity is a check on a group law.
        prod = {(a, b): next(iter(q[(a, b)])) for a in classes for b in classes}
        for a, b, c in product(classes, repeat=3):
            assert prod[(prod[(a, b)], c)] == prod[(a, prod[(b, c)])]


@pytest.mark.parametrize(
    "name,k", [("A1", 1), ("A1", 4), ("A2", 2), ("A3", 1), ("D5", 1), ("E6", 1), ("E7", 2), ("C2", 1), ("C3", 2)]
)
def test_counts_match_brute_force_grid(name, k):
    # One Heisenberg direction: gamma runs over a grid in [0,1) fine enough to
    # contain every untwisted momentum, and each orbit meets [0,1) exactly once.
    ext = ext_of(name, k)
    (g,) = ext.generators
    gram = ext.heis_gram[0][0]
    grid = gram.numerator * 12
    count = 0
    for lam in level_weights(ext.rs, k):
        pair = sum((l * c for l, c in zip(lam.labels, g.coweight.coords)), F(0))
        for j in range(grid):
            if (pair + gram * F(j, grid)).denominator == 1:
                count += 1
    assert count == len(classify(ext))


def test_fusion_errors():
    ext = ext_of("A1", 2)
    with pytest.raises(MissingFusionData):
        fusion_lift(ext, {}, ((0,), (0,)), ((0,), (0,)), ((0,), (0,)))
    with pytest.raises(ValidationError):
        fusion_lift(ext, sl2_fusion_table(2), ((1,), (0,)), ((0,), (0,)), ((0,), (0,)))
    with pytest.raises(ValidationError):
        ext_fusion_sl2(2, ((1,), (0,)), ((0,), (0,)))
    with pytest.raises(UnsupportedError):
        classify(ext_of("B3", 2))
    with pytest.raises(ValidationError):
        canonical(ext, ((3,), (0,)))
    with pytest.raises(ValidationError):
        canonical(ext, ((1,), (0, 0)))


def test_label_ordering_and_text():
    a = ModuleLabel((1,), (F(1, 2),))
    assert str(a) == "W(1;1/2)"
    assert ExtModuleLabel(ModuleLabel((0,), (0,))) < ExtModuleLabel(a)
