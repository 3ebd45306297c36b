"""Particle-hole conjugations for the l shell with spin (and isospin)."""

from fractions import Fraction

import pytest

from fockduality import shell
from fockduality.amplitude import Amp
from fockduality.sparse import SparseOperator

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def p1():
    return shell.shell_model(1, 2)


def test_shell_model_layout(p1):
    assert p1.d == 3 and p1.k == 2
    assert p1.dim == 64
    assert shell.spin_of_kind(1) == HALF
    assert shell.spin_of_kind(2) == -HALF
    assert shell.isospin_of_kind(2) == HALF
    assert shell.isospin_of_kind(3) == -HALF


def test_cg_half_closed_forms():
    # stretched state couples with coefficient 1
    assert shell.cg_half(1, 1, HALF, Fraction(3, 2), Fraction(3, 2)) == \
        (1, Fraction(1))
    # j = l + 1/2, m = 1/2 column of the standard table for l = 1
    assert shell.cg_half(1, 0, HALF, Fraction(3, 2), HALF) == \
        (1, Fraction(2, 3))
    assert shell.cg_half(1, 1, -HALF, Fraction(3, 2), HALF) == \
        (1, Fraction(1, 3))
    assert shell.cg_half(1, 0, HALF, HALF, HALF) == (-1, Fraction(1, 3))
    assert shell.cg_half(1, 1, -HALF, HALF, HALF) == (1, Fraction(2, 3))


def test_cg_half_column_normalization():
    for l in (1, 2, 3):
        for j in (l + HALF, l - HALF):
            m = j
            while m >= -j:
                total = Fraction(0)
                for ms in (HALF, -HALF):
                    ml = m - ms
                    if abs(ml) <= l:
                        _, rad = shell.cg_half(int(l), int(ml), ms, j, m)
                        total += rad
                assert total == 1
                m -= 1


def test_full_battery_l1(p1):
    checks = shell.conjugation_checks(1, 2)
    failed = [name for name, ok in checks.items() if not ok]
    assert not failed, failed


def test_bare_conjugation_battery():
    for two_j in (1, 3, 5):
        checks = shell.bare_conjugation_checks(two_j)
        failed = [name for name, ok in checks.items() if not ok]
        assert not failed, (two_j, failed)


def test_quasispin_counts_pairs(p1):
    qz, qp, qm = shell.quasispin(p1, 1)
    # vacuum is the lowest quasispin-z state: qz|0> = -(d/2)|0>
    vac = {0: Amp(1)}
    got = qz.matvec(vac)
    assert got == {0: Amp(-3, 0, 0, 0, 2)}
    # raising from the vacuum creates time-reversed pairs
    up = qp.matvec(vac)
    assert len(up) == 3


def test_spin_flip_is_involution_up_to_parity(p1):
    f = shell.spin_flip(p1)
    sq = f @ f
    # F^2 acts by (-1) per particle of the flipped sectors
    for col, entries in sq.cols.items():
        assert set(entries) == {col}


def test_bell_conjugation_square():
    params = shell.shell_model(1, 4)
    b = shell.bell_conjugation(params)
    assert (b @ b) == SparseOperator.identity(params.dim)
