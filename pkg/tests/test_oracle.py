"""Highest-weight oracle and duality verification."""

from fractions import Fraction

import pytest

from fockduality import oracle, young
from fockduality.params import ModelParams, ORTHOGONAL


def test_rational_nullspace_simple():
    # x + y = 0 over 3 unknowns: one free pair, one pivot
    rows = [{0: Fraction(1), 1: Fraction(1)}]
    basis = oracle.rational_nullspace(rows, 3)
    assert len(basis) == 2
    for vec in basis:
        assert vec[0] + vec[1] == 0


def test_rational_nullspace_full_rank():
    rows = [{0: Fraction(1)}, {1: Fraction(2)}]
    assert oracle.rational_nullspace(rows, 2) == []


def test_weight_blocks_partition_basis():
    params = ModelParams(3, 2, ORTHOGONAL)
    blocks = oracle.weight_blocks(params)
    states = [s for block in blocks.values() for s in block]
    assert sorted(states) == list(range(params.dim))


def test_joint_highest_weight_count_matches_enumeration():
    for duality, d, k in ((young.SP_SP, 2, 2), (young.O_O, 3, 2),
                          (young.O_PIN, 2, 2)):
        params = ModelParams(d, k, oracle.family_of(duality))
        hw = oracle.joint_highest_weight_vectors(params)
        pairs = young.enumerate_pairs(duality, d, k)
        assert oracle.observed_joint_multiset(hw) == \
            oracle.expected_joint_multiset(pairs)


@pytest.mark.parametrize("duality,d,k", [
    (young.SP_SP, 2, 2), (young.SP_SP, 4, 1),
    (young.O_O, 2, 2), (young.O_O, 3, 2),
    (young.GROUP_O_O, 3, 2), (young.GROUP_O_O, 4, 1),
    (young.O_PIN, 2, 2), (young.O_PIN, 3, 2),
])
def test_verify_duality_passes(duality, d, k):
    report = oracle.verify_duality(duality, d, k)
    assert report.all_pass, report.checks


def test_verify_with_closure():
    report = oracle.verify_duality(young.SP_SP, 2, 2, with_closure=True)
    assert report.checks["closure"]
    assert report.all_pass


def test_reference_point_d4_k1():
    report = oracle.verify_duality(young.SP_SP, 4, 1)
    assert report.dimension_sum == 16
    dims = sorted((p.dim_d, p.dim_k) for p in report.pairs)
    assert dims == [(1, 3), (4, 2), (5, 1)]


def test_sigma_sign_formula_small():
    for d in (2, 3, 4, 5):
        params = ModelParams(d, 2, ORTHOGONAL)
        assert oracle.check_sigma_sign_formula(params)
