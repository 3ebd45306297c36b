"""Partition combinatorics, Weyl dimensions and frame enumeration."""

from fractions import Fraction

import pytest

from fockduality import young
from fockduality.params import DomainError
from fockduality.young import (SP_SP, O_O, GROUP_O_O, O_PIN, ORTHOGONAL,
                               SYMPLECTIC)


def test_conjugate_partition():
    assert young.conjugate((3, 1)) == (2, 1, 1)
    assert young.conjugate(()) == ()
    assert young.conjugate((2, 2)) == (2, 2)


def test_associate_partition():
    # first column depth replaced by n_rows - depth
    assert young.associate((1,), 3) == (1, 1)
    assert young.associate((2,), 3) == (2, 1)
    assert young.associate((2, 2), 4) == (2, 2)
    assert young.associate((1, 1), 2) == ()


def test_column_rule():
    assert young.column_rule_holds((1,), 3)
    assert young.column_rule_holds((2, 1), 3)
    assert not young.column_rule_holds((1, 1, 1, 1), 3)


def test_weyl_dimension_known_values():
    # sp(2): spin-j modules of dimension 2j+1
    assert young.weyl_dimension(SYMPLECTIC, 2, (Fraction(0),)) == 1
    assert young.weyl_dimension(SYMPLECTIC, 2, (Fraction(3),)) == 4
    # sp(4): defining module 4, adjoint 10
    assert young.weyl_dimension(SYMPLECTIC, 4, (0, 1)) == 4
    assert young.weyl_dimension(SYMPLECTIC, 4, (0, 2)) == 10
    # o(3): dimension 2w+1, including spinor weights
    assert young.weyl_dimension(ORTHOGONAL, 3, (Fraction(1, 2),)) == 2
    assert young.weyl_dimension(ORTHOGONAL, 3, (2,)) == 5
    # o(4) ~ sl(2)+sl(2)
    assert young.weyl_dimension(ORTHOGONAL, 4, (-1, 1)) == 3
    assert young.weyl_dimension(ORTHOGONAL, 4, (1, 1)) == 3
    assert young.weyl_dimension(ORTHOGONAL, 4, (0, 1)) == 4
    # o(5): defining 5, adjoint 10
    assert young.weyl_dimension(ORTHOGONAL, 5, (0, 1)) == 5
    assert young.weyl_dimension(ORTHOGONAL, 5, (1, 1)) == 10
    # trivial algebras
    assert young.weyl_dimension(ORTHOGONAL, 1, ()) == 1
    assert young.weyl_dimension(ORTHOGONAL, 2, (5,)) == 1


def test_weyl_dimension_validation():
    with pytest.raises(DomainError):
        young.weyl_dimension(SYMPLECTIC, 3, (1,))
    with pytest.raises(DomainError):
        young.weyl_dimension(ORTHOGONAL, 4, (1,))
    with pytest.raises(DomainError):
        young.weyl_dimension(ORTHOGONAL, 4, (2, 1))


@pytest.mark.parametrize("duality,d,k", [
    (SP_SP, 2, 2), (SP_SP, 4, 2), (SP_SP, 6, 1),
    (O_O, 2, 2), (O_O, 3, 2), (O_O, 5, 2), (O_O, 4, 3),
    (GROUP_O_O, 3, 2), (GROUP_O_O, 4, 2), (GROUP_O_O, 6, 2),
    (O_PIN, 2, 2), (O_PIN, 3, 3), (O_PIN, 5, 2),
])
def test_dimension_sum_tiles_fock_space(duality, d, k):
    pairs = young.enumerate_pairs(duality, d, k)
    assert young.dimension_sum(pairs) == 2 ** (d * k)


def test_sp_sp_reference_point():
    pairs = young.enumerate_pairs(SP_SP, 4, 1)
    dims = sorted((p.dim_d, p.dim_k) for p in pairs)
    assert dims == [(1, 3), (4, 2), (5, 1)]
    assert young.dimension_sum(pairs) == 16


def test_o_o_exactly_one_reducible_side():
    for d, k in ((2, 2), (3, 2), (4, 2), (5, 2), (4, 3)):
        for pair in young.enumerate_pairs(O_O, d, k):
            reducible = (len(pair.d_weights) > 1, len(pair.k_weights) > 1)
            assert sum(reducible) == 1


def test_o_o_odd_d_half_integral_k_weights():
    for d, k in ((3, 2), (5, 2), (3, 3)):
        for pair in young.enumerate_pairs(O_O, d, k):
            for weight in pair.k_weights:
                for entry in weight:
                    assert Fraction(entry).denominator == 2


def test_group_o_o_split_only_at_half_depth():
    for d, k in ((2, 2), (4, 2), (6, 2)):
        for pair in young.enumerate_pairs(GROUP_O_O, d, k):
            depth = len(pair.d_label)
            if len(pair.d_weights) == 2:
                assert 2 * depth == d
            else:
                assert 2 * depth != d


def test_o_pin_odd_d_always_splits():
    for d, k in ((3, 2), (5, 2), (3, 3)):
        for pair in young.enumerate_pairs(O_PIN, d, k):
            assert len(pair.k_weights) == 2
            w1, w2 = pair.k_weights
            assert w2 == young.flip_first(w1)


def test_joint_weights_product_structure():
    for pair in young.enumerate_pairs(O_O, 3, 2):
        joints = pair.joint_weights()
        assert len(joints) == len(pair.d_weights) * len(pair.k_weights)


def test_to_json_fields():
    pair = young.enumerate_pairs(SP_SP, 4, 1)[0]
    data = pair.to_json()
    assert set(data) >= {"duality", "dLabel", "kLabel", "dimD", "dimK"}
